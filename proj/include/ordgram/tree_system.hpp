#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordgram {

struct RankedSymbol {
    std::string name;
    std::size_t arity = 0;
    bool operator==(const RankedSymbol&) const = default;
};

struct RankedAlphabet {
    /// Declaration order is significant (it orders labeled letters).
    std::vector<RankedSymbol> symbols;

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t max_arity() const;
    bool operator==(const RankedAlphabet&) const = default;
};

struct Label {
    enum class Kind { symbol, variable, function };

    Kind kind = Kind::symbol;
    std::string name;
    /// Symbol arity, declared function arity, or 0 for variables.
    std::size_t arity = 0;
    /// Variable index j of x_j.
    std::size_t var = 0;

    static Label symbol(std::string name, std::size_t arity) { return {Kind::symbol, std::move(name), arity, 0}; }
    static Label variable(std::size_t j) { return {Kind::variable, "x" + std::to_string(j), 0, j}; }
    static Label function(std::string name, std::size_t arity) { return {Kind::function, std::move(name), arity, 0}; }

    bool is_constant() const { return kind == Kind::symbol && arity == 0; }
    bool operator==(const Label&) const = default;
};

struct Term {
    Label label;
    std::vector<Term> children;
    bool operator==(const Term&) const = default;
};

struct Equation {
    std::string name;
    std::size_t arity = 0;
    Term body;
    bool operator==(const Equation&) const = default;
};

struct TreeSystem {
    RankedAlphabet alphabet;
    /// equations[0] is principal and has arity 0.
    std::vector<Equation> equations;

    std::optional<std::size_t> find(std::string_view name) const;
    bool operator==(const TreeSystem&) const = default;
};

/// Position words use child indices as chars, so the map iterates in <_l order.
using Position = std::string;
using PartialTree = std::map<Position, Label>;

/// Parses "ops: name:arity ..." followed by equations "F(x0,...,xk) = term",
/// separated by newlines or ';'. Without an ops line, symbol arities are
/// taken from their first use.
/// Throws Error{syntax, arity_mismatch, undeclared_symbol, variable_out_of_range, principal_arity}.
TreeSystem parse_system(std::string_view text);
std::string format_system(const TreeSystem& sys);
std::string format_term(const Term& t);
/// Nested-term rendering of a partial tree; missing children print as "_".
std::string format_tree(const PartialTree& t);
std::string format_position(const Position& p);

PartialTree to_tree(const Term& t);

using SubstitutionMap = std::map<std::string, PartialTree>;

/// Second-order substitution: every node whose label name has an image is
/// replaced by the image with x_j grafted to its substituted child j;
/// other labels are kept. With `max_length`, output positions longer than
/// the bound are dropped while substituting. Throws Error{arity_mismatch}.
PartialTree substitute(const PartialTree& t, const SubstitutionMap& images,
                       std::optional<std::size_t> max_length = std::nullopt);

PartialTree truncate(const PartialTree& t, std::size_t max_length);

/// True when t1 is an approximation of t2 (dom t1 within dom t2, same labels).
bool approximates(const PartialTree& t1, const PartialTree& t2);

/// The depth-th Kleene iterate of the system, one tree per equation,
/// optionally truncated to positions of length <= max_length.
std::vector<PartialTree> kleene_expand(const TreeSystem& sys, std::size_t depth,
                                       std::optional<std::size_t> max_length = std::nullopt);

/// Leaves labeled by constants or variables, in <_l order of positions.
std::vector<std::pair<Position, Label>> frontier(const PartialTree& t);
/// Leaves labeled by function variables.
std::vector<std::pair<Position, Label>> unresolved_leaves(const PartialTree& t);

struct FrontierWord {
    Position position;
    Label label;
    /// One (label name, child index) letter per ancestor edge.
    std::vector<std::pair<std::string, std::size_t>> hat;
};

/// One entry per constant-labeled leaf.
std::vector<FrontierWord> labeled_frontier(const PartialTree& t);

/// Rewrites the system over {g:2, a:0}: constants become a, unary symbols
/// are spliced out, k-ary symbols become right combs of g.
TreeSystem binarize(const TreeSystem& sys);
Term binarize_term(const Term& t, const RankedAlphabet& alphabet);

} // namespace ordgram
