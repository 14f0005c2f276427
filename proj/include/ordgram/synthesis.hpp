#pragma once

// Ordinal grammars built from recipes. Every recipe node owns one
// nonterminal; its order type is computed with CNF arithmetic and the
// rank of a word is decoded block by block along the recipe.

#include <memory>
#include <string>
#include <string_view>

#include "ordgram/cnf_ordinal.hpp"
#include "ordgram/grammar.hpp"

namespace ordgram {

struct Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;

struct Recipe {
    enum class Kind { zero, one, finite, omega_base, sum, product, omega_power };

    Kind kind = Kind::zero;
    /// Size of a finite node (>= 2).
    Natural n = 0;
    /// Sum/product operands; the omega-power base is `left`.
    RecipePtr left;
    RecipePtr right;
    /// Negative-control mutation for products: rank and order type use the
    /// operands in reversed roles while the grammar is unchanged.
    bool swapped = false;
    CnfOrdinal order_type;

    static RecipePtr zero();
    static RecipePtr one();
    static RecipePtr finite(const Natural& n);
    static RecipePtr omega_base();
    static RecipePtr sum(RecipePtr a, RecipePtr b);
    static RecipePtr product(RecipePtr a, RecipePtr b);
    /// Throws Error{base_too_small} when o(base) < 2.
    static RecipePtr omega_power(RecipePtr base);
};

struct SynthesizedGrammar {
    Grammar grammar;
    RecipePtr recipe;
    CnfOrdinal order_type;
};

/// Builds the grammar of a recipe. Nonterminals are named after the node
/// kind with the recipe path as suffix (0 = left/base, 1 = right).
SynthesizedGrammar synthesize(RecipePtr recipe);

SynthesizedGrammar grammar_zero();
SynthesizedGrammar grammar_one();
/// n >= 2; flat 1^i 0 productions up to 64, binary decomposition above.
SynthesizedGrammar grammar_finite(const Natural& n);
SynthesizedGrammar grammar_omega();
SynthesizedGrammar sum_grammar(const SynthesizedGrammar& a, const SynthesizedGrammar& b);
SynthesizedGrammar product_grammar(const SynthesizedGrammar& a, const SynthesizedGrammar& b);
SynthesizedGrammar omega_power_grammar(const SynthesizedGrammar& base);

SynthesizedGrammar from_cnf(const CnfOrdinal& a);

/// Position of w in (L(sg), <_l). Throws Error{not_a_member} with the
/// offending offset.
CnfOrdinal rank(const SynthesizedGrammar& sg, const Word& w);

inline const CnfOrdinal& order_type(const SynthesizedGrammar& sg) { return sg.order_type; }

/// Same grammar, but every product node of the recipe is swapped.
SynthesizedGrammar with_swapped_products(const SynthesizedGrammar& sg);

/// Recipe text: zero | one | (fin n) | omega | (sum A B) | (prod A B) | (pow A).
std::string format_recipe(const RecipePtr& r);
RecipePtr parse_recipe(std::string_view text);

/// Grammar file with a trailing "# recipe: ..." comment line.
std::string format_synthesized(const SynthesizedGrammar& sg);
/// Reloads a file written by format_synthesized. Throws Error{syntax} when
/// the recipe line is missing and Error{invalid_argument} when the grammar
/// does not match the recipe.
SynthesizedGrammar parse_synthesized(std::string_view text);

} // namespace ordgram
