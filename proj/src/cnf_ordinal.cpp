#include "ordgram/cnf_ordinal.hpp"

#include <cctype>

#include "ordgram/error.hpp"

namespace ordgram {

namespace {

std::strong_ordering cmp_nat(const Natural& a, const Natural& b)
{
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace

// ---------------------------------------------------------------- exponent

CnfExponent::CnfExponent(std::vector<ExponentTerm> terms) : terms_(std::move(terms))
{
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coefficient <= 0 || terms_[i].power < 0)
            throw Error(ErrorKind::invalid_argument, "exponent term with non-positive coefficient");
        if (i > 0 && !(terms_[i].power < terms_[i - 1].power))
            throw Error(ErrorKind::invalid_argument, "exponent powers must strictly decrease");
    }
}

CnfExponent CnfExponent::natural(const Natural& n)
{
    if (n == 0) return {};
    return CnfExponent({ExponentTerm{0, n}});
}

bool CnfExponent::is_finite() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].power == 0);
}

Natural CnfExponent::finite_value() const
{
    if (!is_finite()) throw Error(ErrorKind::invalid_argument, "exponent is not finite");
    return terms_.empty() ? Natural(0) : terms_[0].coefficient;
}

Natural CnfExponent::leading_power() const
{
    return terms_.empty() ? Natural(0) : terms_[0].power;
}

std::strong_ordering compare(const CnfExponent& a, const CnfExponent& b)
{
    const auto& x = a.terms();
    const auto& y = b.terms();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (auto c = cmp_nat(x[i].power, y[i].power); c != 0) return c;
        if (auto c = cmp_nat(x[i].coefficient, y[i].coefficient); c != 0) return c;
    }
    return x.size() <=> y.size();
}

CnfExponent add(const CnfExponent& a, const CnfExponent& b)
{
    if (b.is_zero()) return a;
    const auto& lead = b.terms().front();
    std::vector<ExponentTerm> out;
    for (const auto& t : a.terms()) {
        if (t.power > lead.power) {
            out.push_back(t);
        } else if (t.power == lead.power) {
            out.push_back({t.power, t.coefficient + lead.coefficient});
            break;
        } else {
            break;
        }
    }
    if (!out.empty() && out.back().power == lead.power) {
        out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
    } else {
        out.insert(out.end(), b.terms().begin(), b.terms().end());
    }
    return CnfExponent(std::move(out));
}

// ----------------------------------------------------------------- ordinal

CnfOrdinal::CnfOrdinal(std::vector<Term> terms) : terms_(std::move(terms))
{
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coefficient <= 0)
            throw Error(ErrorKind::invalid_argument, "ordinal term with non-positive coefficient");
        if (i > 0 && compare(terms_[i].exponent, terms_[i - 1].exponent) != std::strong_ordering::less)
            throw Error(ErrorKind::invalid_argument, "ordinal exponents must strictly decrease");
    }
}

CnfOrdinal CnfOrdinal::finite(const Natural& n)
{
    if (n < 0) throw Error(ErrorKind::invalid_argument, "negative ordinal");
    if (n == 0) return {};
    return CnfOrdinal({Term{CnfExponent{}, n}});
}

CnfOrdinal CnfOrdinal::omega()
{
    return omega_to(CnfExponent::natural(1));
}

CnfOrdinal CnfOrdinal::omega_to(const CnfExponent& e)
{
    return CnfOrdinal({Term{e, 1}});
}

CnfOrdinal CnfOrdinal::omega_tower(const Natural& k)
{
    return omega_to(CnfExponent({ExponentTerm{k, 1}}));
}

bool CnfOrdinal::is_finite() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

Natural CnfOrdinal::finite_value() const
{
    if (!is_finite()) throw Error(ErrorKind::invalid_argument, "ordinal is not finite");
    return terms_.empty() ? Natural(0) : terms_[0].coefficient;
}

std::strong_ordering compare(const CnfOrdinal& a, const CnfOrdinal& b)
{
    const auto& x = a.terms();
    const auto& y = b.terms();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (auto c = compare(x[i].exponent, y[i].exponent); c != 0) return c;
        if (auto c = cmp_nat(x[i].coefficient, y[i].coefficient); c != 0) return c;
    }
    return x.size() <=> y.size();
}

CnfOrdinal add(const CnfOrdinal& a, const CnfOrdinal& b)
{
    if (b.terms().empty()) return a;
    const auto& lead = b.terms().front();
    std::vector<CnfOrdinal::Term> out;
    bool merged = false;
    for (const auto& t : a.terms()) {
        auto c = compare(t.exponent, lead.exponent);
        if (c > 0) {
            out.push_back(t);
        } else {
            if (c == 0) {
                out.push_back({t.exponent, t.coefficient + lead.coefficient});
                merged = true;
            }
            break;
        }
    }
    out.insert(out.end(), b.terms().begin() + (merged ? 1 : 0), b.terms().end());
    return CnfOrdinal(std::move(out));
}

CnfOrdinal mul(const CnfOrdinal& a, const CnfOrdinal& b)
{
    if (a.terms().empty() || b.terms().empty()) return {};
    const auto& a_lead = a.terms().front();
    CnfOrdinal result;
    for (const auto& t : b.terms()) {
        CnfOrdinal piece;
        if (t.exponent.is_zero()) {
            // a * n: scale the leading coefficient, keep the tail.
            auto terms = a.terms();
            terms.front().coefficient *= t.coefficient;
            piece = CnfOrdinal(std::move(terms));
        } else {
            piece = CnfOrdinal({CnfOrdinal::Term{add(a_lead.exponent, t.exponent), t.coefficient}});
        }
        result = add(result, piece);
    }
    return result;
}

CnfOrdinal omega_power(const CnfOrdinal& a)
{
    if (a.is_finite()) {
        const Natural n = a.finite_value();
        if (n <= 1) return a;
        return CnfOrdinal::omega();
    }
    const Natural k = a.terms().front().exponent.leading_power();
    return CnfOrdinal::omega_tower(k + 1);
}

CnfOrdinal finite_power(const CnfOrdinal& a, unsigned n)
{
    CnfOrdinal result = CnfOrdinal::finite(1);
    for (unsigned i = 0; i < n; ++i) result = mul(result, a);
    return result;
}

bool is_zero(const CnfOrdinal& a) { return a.terms().empty(); }

bool is_limit(const CnfOrdinal& a)
{
    return !a.terms().empty() && !a.terms().back().exponent.is_zero();
}

bool is_successor(const CnfOrdinal& a)
{
    return !a.terms().empty() && a.terms().back().exponent.is_zero();
}

// ------------------------------------------------------------ text syntax

namespace {

class OrdinalParser {
public:
    explicit OrdinalParser(std::string_view text) : text_(text) {}

    CnfOrdinal parse()
    {
        CnfOrdinal value = ord();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorKind::syntax,
                    "ordinal syntax error at offset " + std::to_string(pos_) + ": " + msg, pos_);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Natural nat()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a natural number");
        return Natural(std::string(text_.substr(start, pos_ - start)));
    }

    CnfOrdinal ord()
    {
        CnfOrdinal value = term();
        while (accept('+')) value = add(value, term());
        return value;
    }

    CnfOrdinal term()
    {
        skip_ws();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            return CnfOrdinal::finite(nat());
        if (!accept('w')) fail("expected 'w' or a natural number");
        CnfExponent exponent = CnfExponent::natural(1);
        if (accept('^')) exponent = power();
        Natural coefficient = 1;
        if (accept('*')) coefficient = nat();
        if (coefficient == 0) return {};
        return CnfOrdinal({CnfOrdinal::Term{exponent, coefficient}});
    }

    /// "^" has been read: nat, "(" ord ")", or a bare w-power (right associative).
    CnfExponent power()
    {
        skip_ws();
        std::size_t start = pos_;
        if (accept('(')) {
            CnfOrdinal inner = ord();
            if (!accept(')')) fail("expected ')'");
            return to_exponent(inner, start);
        }
        if (accept('w')) {
            CnfExponent inner = CnfExponent::natural(1);
            if (accept('^')) inner = power();
            return to_exponent(CnfOrdinal::omega_to(inner), start);
        }
        return CnfExponent::natural(nat());
    }

    static CnfExponent to_exponent(const CnfOrdinal& inner, std::size_t where)
    {
        std::vector<ExponentTerm> terms;
        for (const auto& t : inner.terms()) {
            if (!t.exponent.is_finite())
                throw Error(ErrorKind::exponent_out_of_range,
                            "exponent " + format_ordinal(inner) + " is not below w^w", where);
            terms.push_back({t.exponent.finite_value(), t.coefficient});
        }
        return CnfExponent(std::move(terms));
    }
};

std::string format_power_term(const std::string& base_power, const Natural& coefficient)
{
    std::string s = base_power;
    if (coefficient != 1) s += "*" + coefficient.str();
    return s;
}

} // namespace

CnfOrdinal parse_ordinal(std::string_view text)
{
    return OrdinalParser(text).parse();
}

std::string format_exponent(const CnfExponent& e)
{
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& t : e.terms()) {
        if (!out.empty()) out += "+";
        if (t.power == 0) {
            out += t.coefficient.str();
        } else {
            out += format_power_term(t.power == 1 ? "w" : "w^" + t.power.str(), t.coefficient);
        }
    }
    return out;
}

std::string format_ordinal(const CnfOrdinal& a)
{
    if (a.terms().empty()) return "0";
    std::string out;
    for (const auto& t : a.terms()) {
        if (!out.empty()) out += " + ";
        if (t.exponent.is_zero()) {
            out += t.coefficient.str();
            continue;
        }
        std::string base;
        if (t.exponent.is_finite()) {
            const Natural n = t.exponent.finite_value();
            base = n == 1 ? "w" : "w^" + n.str();
        } else if (t.exponent == CnfExponent({ExponentTerm{1, 1}})) {
            base = "w^w";
        } else {
            base = "w^(" + format_exponent(t.exponent) + ")";
        }
        out += format_power_term(base, t.coefficient);
    }
    return out;
}

} // namespace ordgram
