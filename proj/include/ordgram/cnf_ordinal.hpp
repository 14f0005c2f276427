#pragma once

// Ordinals below w^(w^w) in two-level Cantor Normal Form.
//
// An ordinal is a strictly decreasing sum  w^e1*c1 + ... + w^ek*ck  whose
// exponents are themselves ordinals below w^w, i.e. decreasing sums
// w^p1*d1 + ... with natural powers. All values are immutable; every
// operation returns a fresh normalized value.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordgram {

using Natural = boost::multiprecision::cpp_int;

struct ExponentTerm {
    Natural power;
    Natural coefficient;
    bool operator==(const ExponentTerm&) const = default;
};

/// An ordinal below w^w, used as the exponent of a CNF term.
class CnfExponent {
public:
    CnfExponent() = default;
    /// Validates the decreasing-power / positive-coefficient invariant.
    explicit CnfExponent(std::vector<ExponentTerm> terms);

    static CnfExponent natural(const Natural& n);

    const std::vector<ExponentTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const;
    /// Value when finite; throws otherwise.
    Natural finite_value() const;
    /// Power of the leading term; 0 for the zero exponent.
    Natural leading_power() const;

    bool operator==(const CnfExponent&) const = default;

private:
    std::vector<ExponentTerm> terms_;
};

std::strong_ordering compare(const CnfExponent& a, const CnfExponent& b);
CnfExponent add(const CnfExponent& a, const CnfExponent& b);

inline std::strong_ordering operator<=>(const CnfExponent& a, const CnfExponent& b)
{
    return compare(a, b);
}

class CnfOrdinal {
public:
    struct Term {
        CnfExponent exponent;
        Natural coefficient;
        bool operator==(const Term&) const = default;
    };

    CnfOrdinal() = default;
    explicit CnfOrdinal(std::vector<Term> terms);

    static CnfOrdinal zero() { return {}; }
    static CnfOrdinal finite(const Natural& n);
    static CnfOrdinal omega();
    /// w^e.
    static CnfOrdinal omega_to(const CnfExponent& e);
    /// w^(w^k): the bound attached to a nonterminal of height k.
    static CnfOrdinal omega_tower(const Natural& k);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_finite() const;
    Natural finite_value() const;

    bool operator==(const CnfOrdinal&) const = default;

private:
    std::vector<Term> terms_;
};

std::strong_ordering compare(const CnfOrdinal& a, const CnfOrdinal& b);
CnfOrdinal add(const CnfOrdinal& a, const CnfOrdinal& b);
CnfOrdinal mul(const CnfOrdinal& a, const CnfOrdinal& b);
/// a^w, the least upper bound of the finite powers a^n.
CnfOrdinal omega_power(const CnfOrdinal& a);
/// a^n by repeated multiplication.
CnfOrdinal finite_power(const CnfOrdinal& a, unsigned n);

bool is_zero(const CnfOrdinal& a);
/// True for nonzero ordinals whose last CNF term has a positive exponent.
bool is_limit(const CnfOrdinal& a);
bool is_successor(const CnfOrdinal& a);

inline std::strong_ordering operator<=>(const CnfOrdinal& a, const CnfOrdinal& b)
{
    return compare(a, b);
}
inline CnfOrdinal operator+(const CnfOrdinal& a, const CnfOrdinal& b) { return add(a, b); }
inline CnfOrdinal operator*(const CnfOrdinal& a, const CnfOrdinal& b) { return mul(a, b); }

/// Parses the "w" ordinal syntax:
///   ord := term ("+" term)* ; term := "w" power? mult? | nat ;
///   power := "^" nat | "^" "(" ord ")" | "^" "w" power? ; mult := "*" nat
/// "+" is ordinal addition, so smaller terms followed by larger ones are
/// absorbed. Throws Error{syntax} or Error{exponent_out_of_range}.
CnfOrdinal parse_ordinal(std::string_view text);
std::string format_ordinal(const CnfOrdinal& a);
std::string format_exponent(const CnfExponent& e);

} // namespace ordgram
