#pragma once

// Prefix grammars for the frontiers of algebraic trees.
//
// G_L derives the labeled frontier: letters (s,j) for each symbol s of
// arity k >= 1 and j < k, then the constants. Nonterminals are F_i and
// (F_i,j). G' maps (s,j) to the terminal j and erases constants.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordgram/cnf_ordinal.hpp"
#include "ordgram/grammar.hpp"
#include "ordgram/tree_system.hpp"

namespace ordgram {

/// Letters ordered by child index, then symbol declaration order;
/// constants follow in declaration order.
TerminalAlphabet labeled_alphabet(const RankedAlphabet& alphabet);
std::string pair_name(const std::string& name, std::size_t j);

/// The raw rules of G_L, one per body position; right-hand sides may be
/// empty when a body is a bare variable. Not normalized.
Grammar labeled_rules(const TreeSystem& sys);

/// G_L with nullable nonterminals erased. A nullable nonterminal must
/// derive only the empty word (Error{epsilon_production} otherwise).
Grammar build_labeled_grammar(const TreeSystem& sys);

/// G' over "0".."k-1" (k the maximal arity, at least 1). When the start
/// symbol derives only the empty word the result is the empty-word grammar.
Grammar build_frontier_grammar(const TreeSystem& sys);

struct Discrepancy {
    std::string nonterminal;
    std::string word;
    /// "missing_from_grammar": produced by the iterate, not derivable within
    /// the depth. "missing_from_iterate": derivable, absent from the iterate.
    std::string kind;
};

struct TranslationReport {
    bool pass = true;
    std::size_t words_checked = 0;
    std::vector<Discrepancy> discrepancies;
};

/// Compares, for every F_i and (F_i,j), the hat words of the depth-th
/// Kleene iterate against the words of length <= maxlen derivable in G_L
/// with derivation trees of height <= depth. The two sets coincide exactly.
/// `grammar` replaces the constructed G_L (matched by symbol names).
TranslationReport verify_translation(const TreeSystem& sys, std::size_t depth, std::size_t maxlen,
                                     const Grammar* grammar = nullptr);

struct FrontierAgreement {
    bool pass = false;
    /// Depth at which the iterate's bounded frontier first matched.
    std::size_t depth = 0;
    std::vector<Word> frontier_words;
    std::vector<Word> grammar_words;
    std::optional<Word> witness;
    std::string detail;
};

/// Bounded frontier of the principal tree (positions of length <= maxlen,
/// iterated until it matches and stays equal for `confirm` more steps)
/// against the bounded language of normalize(G'), both sorted by <_l.
FrontierAgreement check_frontier_agreement(const TreeSystem& sys, std::size_t maxlen, std::size_t max_depth = 64,
                                           std::size_t confirm = 3, std::size_t cap = 20000);

/// height_bound of the start symbol of normalize(G'(binarize(sys))).
CnfOrdinal frontier_ordinal_bound(const TreeSystem& sys);

} // namespace ordgram
