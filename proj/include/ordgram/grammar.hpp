#pragma once

// Context-free grammars over a linearly ordered terminal alphabet.
//
// Words are std::string values whose chars are letter indices into the
// alphabet (not printable symbols). With that encoding std::string's
// operator< is exactly the lexicographic order <_l on words, and
// starts_with is the prefix order.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordgram {

using Word = std::string;

class TerminalAlphabet {
public:
    TerminalAlphabet() = default;
    /// Letters in increasing order; must be nonempty and distinct.
    explicit TerminalAlphabet(std::vector<std::string> letters);

    static TerminalAlphabet binary() { return TerminalAlphabet({"0", "1"}); }

    const std::vector<std::string>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    std::optional<std::size_t> find(std::string_view letter) const;
    const std::string& letter(std::size_t i) const { return letters_.at(i); }

    /// True when every letter is a single character, so words print without separators.
    bool compact() const;
    std::string format(const Word& w) const;
    /// Inverse of format; throws Error{unknown_terminal}.
    Word parse_word(std::string_view text) const;

    bool operator==(const TerminalAlphabet&) const = default;

private:
    std::vector<std::string> letters_;
};

struct Symbol {
    bool terminal = false;
    std::size_t index = 0;

    static Symbol term(std::size_t i) { return {true, i}; }
    static Symbol nonterm(std::size_t i) { return {false, i}; }

    bool operator==(const Symbol&) const = default;
    auto operator<=>(const Symbol&) const = default;
};

struct Production {
    std::size_t lhs = 0;
    std::vector<Symbol> rhs;
    bool operator==(const Production&) const = default;
};

/// A grammar (N, T, S, P). `empty_word` marks the one sanctioned language
/// containing the empty word: the frontier language {eps} of a tree that
/// is a single constant. Such a grammar has no productions.
struct Grammar {
    TerminalAlphabet alphabet;
    std::vector<std::string> nonterminals;
    std::size_t start = 0;
    std::vector<Production> productions;
    bool empty_word = false;

    /// Index of a nonterminal by name; throws Error{unknown_nonterminal}.
    std::size_t id(std::string_view name) const;
    std::optional<std::size_t> find(std::string_view name) const;
    const std::string& name(std::size_t nonterminal) const { return nonterminals.at(nonterminal); }

    /// Appends a nonterminal, or returns the existing index.
    std::size_t add_nonterminal(std::string_view name);
    void add_production(std::size_t lhs, std::vector<Symbol> rhs);

    /// The canonical empty grammar: a lone start symbol and no productions.
    bool is_canonical_empty() const;
    std::vector<const Production*> productions_of(std::size_t nonterminal) const;

    bool operator==(const Grammar&) const = default;
};

/// Parses the line-oriented grammar file format.
/// Throws Error{syntax, unknown_terminal, epsilon_production} with a line number.
Grammar parse_grammar(std::string_view text);

/// Canonical serialization: left-hand sides in first-use order from the
/// start symbol, alternatives sorted lexicographically by rhs tokens
/// (terminals in alphabet order before nonterminals in first-use order).
std::string format_grammar(const Grammar& g);
std::string format_symbol(const Grammar& g, Symbol s);
std::string format_rhs(const Grammar& g, const std::vector<Symbol>& rhs);

/// Removes nonterminals that are inaccessible or generate no terminal word.
Grammar normalize(const Grammar& g);

// ------------------------------------------------------------- analysis

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct OccurrenceClasses {
    /// class_of[X] is the id of X's ~-class. Ids are assigned bottom-up:
    /// a class only reaches classes with smaller ids.
    std::vector<std::size_t> class_of;
    std::vector<std::vector<std::size_t>> members;
    /// below[c] lists the classes strictly below class c.
    std::vector<std::vector<std::size_t>> below;
    /// reach[X][Y] == true iff Y <= X (Y occurs in a form derived from X).
    std::vector<std::vector<bool>> reach;

    bool preceq(std::size_t y, std::size_t x) const { return reach[x][y]; }
    bool equivalent(std::size_t x, std::size_t y) const { return class_of[x] == class_of[y]; }
};

OccurrenceClasses occurrence_classes(const Grammar& g);

/// Number of ~-classes strictly below the class of X.
std::size_t height(const Grammar& g, std::size_t nonterminal);
std::size_t height(const OccurrenceClasses& classes, std::size_t nonterminal);
/// ht of a sentential form: max height of its nonterminals, -1 if it has none.
long sentential_height(const OccurrenceClasses& classes, const std::vector<Symbol>& form);

bool is_recursive(const Grammar& g, std::size_t nonterminal);

/// Shortest words of every nonterminal (ties broken <_l-least); nullopt
/// for nonterminals with empty language.
std::vector<std::optional<Word>> shortest_witnesses(const Grammar& g);
Word shortest_witness(const Grammar& g, std::size_t nonterminal);

/// A nonempty terminal word v with X =>* v X q, read off the shortest
/// (then <_l-least) cycle through X in the class graph of [X].
/// Throws Error{empty_pump} when every such cycle is labelled by eps.
Word pump_word(const Grammar& g, std::size_t nonterminal);

/// Shortest u with v = u^n (smallest period via the border array when it
/// divides |v|). Throws Error{empty_word}.
Word primitive_root(const Word& v);

Word u0(const Grammar& g, std::size_t nonterminal);

class CnfOrdinal;
CnfOrdinal height_bound(const Grammar& g, std::size_t nonterminal);

struct NonterminalReport {
    std::string name;
    std::size_t class_id = 0;
    std::size_t height = 0;
    bool recursive = false;
    std::optional<Word> pump_word;
    std::optional<Word> u0;
    /// Set when X is recursive but no nonempty pump word exists.
    std::optional<std::string> pump_error;
};

std::vector<NonterminalReport> analyze(const Grammar& g);

// -------------------------------------------------- bounded consistency

struct Violation {
    std::string kind;
    std::string nonterminal;
    Word first;
    Word second;
    std::string detail;
};

struct ViolationReport {
    std::vector<Violation> violations;
    bool truncated = false;
    bool clean() const { return violations.empty(); }
};

struct Bounds {
    std::size_t maxlen = 12;
    std::size_t cap = 20000;
    /// Distinct cycles collected per nonterminal by the pump-word probes.
    std::size_t cycle_limit = 32;
};

/// Reports every pair (u, uv), v != eps, inside some bounded L(X).
ViolationReport check_prefix(const Grammar& g, const Bounds& bounds = {});

/// Probes two necessary conditions of well-orderedness on each recursive X:
/// pump words are pairwise prefix-comparable, and each v in L(X) satisfies
/// v <_s u or u <_p v for every pump word u.
ViolationReport check_wellorder_probes(const Grammar& g, const Bounds& bounds = {});

/// All pump words carried by simple cycles through X, at most `limit`.
std::vector<Word> cycle_pump_words(const Grammar& g, std::size_t nonterminal, std::size_t limit);

enum class StratumStatus { ok, degenerate };

struct Stratum {
    StratumStatus status = StratumStatus::ok;
    Word u0;
    /// Sorted by <_l.
    std::vector<Word> words;
};

/// Words of L(X) up to maxlen of the form u0^n x a y with x b a prefix of
/// u0 and a < b, i.e. the union over x of L(n, x, X).
/// Throws Error{u0_unavailable} when X is not recursive or has no pump.
Stratum stratum(const Grammar& g, std::size_t nonterminal, std::size_t n, const Bounds& bounds = {});

/// The stratum index of w relative to u0, or nullopt if w does not leave
/// the u0-spine below it within its length.
std::optional<std::size_t> stratum_index(const Word& w, const Word& u0);

} // namespace ordgram
