#include "ordgram/synthesis.hpp"

#include <cctype>

#include "ordgram/error.hpp"

namespace ordgram {

namespace {

constexpr unsigned flat_finite_limit = 64;
constexpr unsigned finite_node_limit = 4096;

std::shared_ptr<Recipe> make(Recipe::Kind kind)
{
    auto r = std::make_shared<Recipe>();
    r->kind = kind;
    return r;
}

} // namespace

RecipePtr Recipe::zero()
{
    return make(Kind::zero);
}

RecipePtr Recipe::one()
{
    auto r = make(Kind::one);
    r->order_type = CnfOrdinal::finite(1);
    return r;
}

RecipePtr Recipe::finite(const Natural& n)
{
    if (n < 2) throw Error(ErrorKind::invalid_argument, "finite recipe needs n >= 2");
    if (n > finite_node_limit) throw Error(ErrorKind::invalid_argument, "finite recipe node too large");
    auto r = make(Kind::finite);
    r->n = n;
    r->order_type = CnfOrdinal::finite(n);
    return r;
}

RecipePtr Recipe::omega_base()
{
    auto r = make(Kind::omega_base);
    r->order_type = CnfOrdinal::omega();
    return r;
}

RecipePtr Recipe::sum(RecipePtr a, RecipePtr b)
{
    if (a->kind == Kind::zero) return b;
    if (b->kind == Kind::zero) return a;
    auto r = make(Kind::sum);
    r->order_type = a->order_type + b->order_type;
    r->left = std::move(a);
    r->right = std::move(b);
    return r;
}

RecipePtr Recipe::product(RecipePtr a, RecipePtr b)
{
    if (a->kind == Kind::zero || b->kind == Kind::zero) return zero();
    auto r = make(Kind::product);
    r->order_type = a->order_type * b->order_type;
    r->left = std::move(a);
    r->right = std::move(b);
    return r;
}

RecipePtr Recipe::omega_power(RecipePtr base)
{
    if (base->order_type < CnfOrdinal::finite(2))
        throw Error(ErrorKind::base_too_small,
                    "omega power needs a base of order type >= 2, got " + format_ordinal(base->order_type));
    auto r = make(Kind::omega_power);
    r->order_type = ordgram::omega_power(base->order_type);
    r->left = std::move(base);
    return r;
}

// -------------------------------------------------------------- grammar

namespace {

std::string node_name(const Recipe& r, const std::string& path)
{
    std::string base;
    switch (r.kind) {
    case Recipe::Kind::zero: base = "Zero"; break;
    case Recipe::Kind::one: base = "One"; break;
    case Recipe::Kind::finite: base = "Fin" + r.n.str(); break;
    case Recipe::Kind::omega_base: base = "Omega"; break;
    case Recipe::Kind::sum: base = "Sum"; break;
    case Recipe::Kind::product: base = "Prod"; break;
    case Recipe::Kind::omega_power: base = "Pow"; break;
    }
    return path.empty() ? base : base + "_" + path;
}

std::size_t build(Grammar& g, const Recipe& r, const std::string& path)
{
    const std::size_t x = g.add_nonterminal(node_name(r, path));
    const Symbol zero = Symbol::term(0), one = Symbol::term(1);
    switch (r.kind) {
    case Recipe::Kind::zero:
        throw Error(ErrorKind::invalid_argument, "zero recipe below the root");
    case Recipe::Kind::one:
        g.add_production(x, {zero});
        break;
    case Recipe::Kind::finite: {
        const auto n = static_cast<unsigned>(r.n);
        for (unsigned i = 0; i < n; ++i) {
            std::vector<Symbol> rhs(i, one);
            rhs.push_back(zero);
            g.add_production(x, std::move(rhs));
        }
        break;
    }
    case Recipe::Kind::omega_base:
        g.add_production(x, {zero});
        g.add_production(x, {one, Symbol::nonterm(x)});
        break;
    case Recipe::Kind::sum: {
        auto a = build(g, *r.left, path + "0");
        auto b = build(g, *r.right, path + "1");
        g.add_production(x, {zero, Symbol::nonterm(a)});
        g.add_production(x, {one, Symbol::nonterm(b)});
        break;
    }
    case Recipe::Kind::product: {
        auto a = build(g, *r.left, path + "0");
        auto b = build(g, *r.right, path + "1");
        g.add_production(x, {Symbol::nonterm(b), Symbol::nonterm(a)});
        break;
    }
    case Recipe::Kind::omega_power: {
        auto a = build(g, *r.left, path + "0");
        g.add_production(x, {zero});
        g.add_production(x, {one, Symbol::nonterm(x), Symbol::nonterm(a)});
        break;
    }
    }
    return x;
}

RecipePtr finite_recipe(const Natural& n)
{
    if (n == 0) return Recipe::zero();
    if (n == 1) return Recipe::one();
    if (n <= flat_finite_limit) return Recipe::finite(n);
    auto doubled = Recipe::product(finite_recipe(n / 2), Recipe::finite(2));
    return n % 2 == 0 ? doubled : Recipe::sum(doubled, Recipe::one());
}

/// w^(w^k).
RecipePtr tower(const Natural& k)
{
    RecipePtr r = Recipe::omega_base();
    for (Natural i = 0; i < k; ++i) r = Recipe::omega_power(r);
    return r;
}

/// w^e as a product chain of towers.
RecipePtr omega_to(const CnfExponent& e)
{
    RecipePtr r;
    for (const auto& t : e.terms()) {
        for (Natural i = 0; i < t.coefficient; ++i) {
            auto factor = tower(t.power);
            r = r ? Recipe::product(r, factor) : factor;
        }
    }
    return r ? r : Recipe::one();
}

RecipePtr recipe_of(const CnfOrdinal& a)
{
    RecipePtr result = Recipe::zero();
    const auto& terms = a.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        RecipePtr piece;
        if (it->exponent.is_zero()) {
            piece = finite_recipe(it->coefficient);
        } else {
            piece = omega_to(it->exponent);
            if (it->coefficient != 1) piece = Recipe::product(piece, finite_recipe(it->coefficient));
        }
        result = Recipe::sum(piece, result);
    }
    return result;
}

} // namespace

SynthesizedGrammar synthesize(RecipePtr recipe)
{
    SynthesizedGrammar sg;
    sg.grammar.alphabet = TerminalAlphabet::binary();
    sg.order_type = recipe->order_type;
    if (recipe->kind == Recipe::Kind::zero) {
        sg.grammar.nonterminals = {node_name(*recipe, "")};
        sg.grammar.start = 0;
    } else {
        sg.grammar.start = build(sg.grammar, *recipe, "");
    }
    sg.recipe = std::move(recipe);
    return sg;
}

SynthesizedGrammar grammar_zero() { return synthesize(Recipe::zero()); }
SynthesizedGrammar grammar_one() { return synthesize(Recipe::one()); }

SynthesizedGrammar grammar_finite(const Natural& n)
{
    if (n < 2) throw Error(ErrorKind::invalid_argument, "grammar_finite needs n >= 2");
    return synthesize(finite_recipe(n));
}

SynthesizedGrammar grammar_omega() { return synthesize(Recipe::omega_base()); }

SynthesizedGrammar sum_grammar(const SynthesizedGrammar& a, const SynthesizedGrammar& b)
{
    return synthesize(Recipe::sum(a.recipe, b.recipe));
}

SynthesizedGrammar product_grammar(const SynthesizedGrammar& a, const SynthesizedGrammar& b)
{
    return synthesize(Recipe::product(a.recipe, b.recipe));
}

SynthesizedGrammar omega_power_grammar(const SynthesizedGrammar& base)
{
    return synthesize(Recipe::omega_power(base.recipe));
}

SynthesizedGrammar from_cnf(const CnfOrdinal& a) { return synthesize(recipe_of(a)); }

// ----------------------------------------------------------------- rank

namespace {

class Decoder {
public:
    explicit Decoder(const Word& w) : w_(w) {}

    CnfOrdinal run(const Recipe& r)
    {
        CnfOrdinal value = decode(r);
        if (pos_ != w_.size()) fail("trailing letters after a complete word");
        return value;
    }

private:
    const Word& w_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorKind::not_a_member, "not a member at offset " + std::to_string(pos_) + ": " + msg, pos_);
    }

    int next()
    {
        if (pos_ >= w_.size()) fail("word ends early");
        int c = static_cast<unsigned char>(w_[pos_]);
        if (c > 1) fail("letter outside {0,1}");
        ++pos_;
        return c;
    }

    /// 1^i 0, returns i.
    Natural ones_then_zero(const std::optional<Natural>& bound)
    {
        Natural i = 0;
        while (next() == 1) {
            ++i;
            if (bound && i >= *bound) fail("too many leading 1s");
        }
        return i;
    }

    CnfOrdinal decode(const Recipe& r)
    {
        switch (r.kind) {
        case Recipe::Kind::zero:
            fail("the empty language has no members");
        case Recipe::Kind::one:
            if (next() != 0) fail("expected 0");
            return {};
        case Recipe::Kind::finite:
            return CnfOrdinal::finite(ones_then_zero(r.n));
        case Recipe::Kind::omega_base:
            return CnfOrdinal::finite(ones_then_zero(std::nullopt));
        case Recipe::Kind::sum:
            if (next() == 0) return decode(*r.left);
            return r.left->order_type + decode(*r.right);
        case Recipe::Kind::product: {
            CnfOrdinal major = decode(*r.right);
            CnfOrdinal minor = decode(*r.left);
            if (r.swapped) return r.right->order_type * minor + major;
            return r.left->order_type * major + minor;
        }
        case Recipe::Kind::omega_power: {
            const Natural n = ones_then_zero(std::nullopt);
            const auto blocks = static_cast<unsigned>(n);
            const CnfOrdinal& alpha = r.left->order_type;
            CnfOrdinal value;
            for (unsigned i = 0; i < blocks; ++i) value = value + finite_power(alpha, i);
            for (unsigned j = 1; j <= blocks; ++j) value = value + finite_power(alpha, blocks - j) * decode(*r.left);
            return value;
        }
        }
        fail("corrupt recipe");
    }
};

} // namespace

CnfOrdinal rank(const SynthesizedGrammar& sg, const Word& w)
{
    return Decoder(w).run(*sg.recipe);
}

namespace {

RecipePtr swap_products(const RecipePtr& r)
{
    if (!r->left) return r;
    auto copy = std::make_shared<Recipe>(*r);
    copy->left = swap_products(r->left);
    if (r->right) copy->right = swap_products(r->right);
    if (copy->kind == Recipe::Kind::product) {
        copy->swapped = !copy->swapped;
        copy->order_type = copy->swapped ? copy->right->order_type * copy->left->order_type
                                         : copy->left->order_type * copy->right->order_type;
    } else if (copy->kind == Recipe::Kind::sum) {
        copy->order_type = copy->left->order_type + copy->right->order_type;
    } else if (copy->kind == Recipe::Kind::omega_power) {
        copy->order_type = omega_power(copy->left->order_type);
    }
    return copy;
}

} // namespace

SynthesizedGrammar with_swapped_products(const SynthesizedGrammar& sg)
{
    SynthesizedGrammar out = sg;
    out.recipe = swap_products(sg.recipe);
    out.order_type = out.recipe->order_type;
    return out;
}

// ----------------------------------------------------------- recipe text

std::string format_recipe(const RecipePtr& r)
{
    switch (r->kind) {
    case Recipe::Kind::zero: return "zero";
    case Recipe::Kind::one: return "one";
    case Recipe::Kind::finite: return "(fin " + r->n.str() + ")";
    case Recipe::Kind::omega_base: return "omega";
    case Recipe::Kind::sum: return "(sum " + format_recipe(r->left) + " " + format_recipe(r->right) + ")";
    case Recipe::Kind::product:
        return std::string(r->swapped ? "(xprod " : "(prod ") + format_recipe(r->left) + " " +
               format_recipe(r->right) + ")";
    case Recipe::Kind::omega_power: return "(pow " + format_recipe(r->left) + ")";
    }
    return "?";
}

namespace {

class RecipeParser {
public:
    explicit RecipeParser(std::string_view text) : text_(text) {}

    RecipePtr parse()
    {
        auto r = node();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected text after recipe");
        return r;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorKind::syntax, "recipe syntax error at offset " + std::to_string(pos_) + ": " + msg, pos_);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string atom()
    {
        skip_ws();
        auto start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a word");
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    RecipePtr node()
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            auto head = atom();
            RecipePtr r;
            if (head == "fin") {
                auto digits = atom();
                for (char c : digits)
                    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a natural number");
                r = Recipe::finite(Natural(digits));
            } else if (head == "sum") {
                auto a = node();
                r = Recipe::sum(a, node());
            } else if (head == "prod" || head == "xprod") {
                auto a = node();
                auto p = Recipe::product(a, node());
                if (head == "xprod" && p->kind == Recipe::Kind::product) {
                    auto flipped = std::make_shared<Recipe>(*p);
                    flipped->swapped = true;
                    flipped->order_type = p->right->order_type * p->left->order_type;
                    p = flipped;
                }
                r = p;
            } else if (head == "pow") {
                r = Recipe::omega_power(node());
            } else {
                fail("unknown recipe head '" + head + "'");
            }
            expect(')');
            return r;
        }
        auto a = atom();
        if (a == "zero") return Recipe::zero();
        if (a == "one") return Recipe::one();
        if (a == "omega") return Recipe::omega_base();
        fail("unknown recipe atom '" + a + "'");
    }
};

} // namespace

RecipePtr parse_recipe(std::string_view text)
{
    return RecipeParser(text).parse();
}

std::string format_synthesized(const SynthesizedGrammar& sg)
{
    return format_grammar(sg.grammar) + "# recipe: " + format_recipe(sg.recipe) + "\n";
}

SynthesizedGrammar parse_synthesized(std::string_view text)
{
    const std::string_view marker = "# recipe:";
    auto at = text.find(marker);
    if (at == std::string_view::npos) throw Error(ErrorKind::syntax, "missing '# recipe:' line");
    auto end = text.find('\n', at);
    auto recipe_text = text.substr(at + marker.size(), end == std::string_view::npos ? std::string_view::npos
                                                                                     : end - at - marker.size());
    auto sg = synthesize(parse_recipe(recipe_text));
    const Grammar file = parse_grammar(text);
    if (format_grammar(file) != format_grammar(sg.grammar))
        throw Error(ErrorKind::invalid_argument, "grammar does not match its recipe");
    return sg;
}

} // namespace ordgram
