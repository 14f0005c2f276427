#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordgram/cnf_ordinal.hpp"
#include "ordgram/grammar.hpp"

namespace ordgram {

enum class OrderClass { equal, prefix_less, strict_less, prefix_greater, strict_greater };

const char* to_string(OrderClass c);

OrderClass lex_classify(const Word& u, const Word& v);
/// Checked variant: both words must use letters of `alphabet`.
OrderClass lex_classify(const TerminalAlphabet& alphabet, const Word& u, const Word& v);

inline bool prefix_less(const Word& u, const Word& v) { return lex_classify(u, v) == OrderClass::prefix_less; }
inline bool strict_less(const Word& u, const Word& v) { return lex_classify(u, v) == OrderClass::strict_less; }
inline bool lex_less(const Word& u, const Word& v)
{
    auto c = lex_classify(u, v);
    return c == OrderClass::prefix_less || c == OrderClass::strict_less;
}

/// Bounded languages of every nonterminal: all words of length <= maxlen,
/// built by length layers (a production of length >= 2 only combines
/// strictly shorter words; unit productions are closed within a layer).
struct BoundedLanguages {
    /// Per nonterminal, sorted ascending by <_l.
    std::vector<std::vector<Word>> words;
    /// Per nonterminal: the cap was hit while collecting its words.
    std::vector<bool> truncated;

    bool any_truncated() const;
};

BoundedLanguages enumerate_languages(const Grammar& g, std::size_t maxlen, std::size_t cap = 20000);

struct Enumeration {
    std::vector<Word> words;
    bool truncated = false;
};

/// Words of L(start) with length <= maxlen, sorted by <_l.
Enumeration enumerate_words(const Grammar& g, std::size_t maxlen, std::size_t cap = 20000);

/// Sorts by lex_classify (not padded comparison).
void sort_lex(std::vector<Word>& words);

using WordPredicate = std::function<bool(const Word&)>;

/// Longest chain w1 >_s w2 >_s ... among the words accepted by `suspect`
/// in which every element is strictly longer than its predecessor: the
/// bounded shadow of a descending chain produced by pumping. Returns
/// nullopt when no chain of length >= 2 exists. O(n^2) in the number of
/// accepted words.
std::optional<std::vector<Word>> descending_chain_search(const std::vector<Word>& words,
                                                         const WordPredicate& suspect = {});

struct SynthesizedGrammar;

struct MonotoneReport {
    bool pass = true;
    bool truncated = false;
    std::size_t checked = 0;
    /// Counterexample: a single word (non-member or rank too large) or a pair.
    std::optional<Word> first;
    std::optional<Word> second;
    std::optional<CnfOrdinal> first_rank;
    std::optional<CnfOrdinal> second_rank;
    std::string reason;
};

/// Ranks every enumerated word and checks that ranks strictly increase
/// along <_l and stay below the order type.
MonotoneReport verify_monotone_rank(const SynthesizedGrammar& sg, std::size_t maxlen, std::size_t cap = 20000);

} // namespace ordgram
