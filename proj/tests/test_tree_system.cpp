#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ordgram/error.hpp"
#include "ordgram/tree_system.hpp"
#include "oracles.hpp"

using namespace ordgram;

namespace {

TreeSystem load(const char* name) { return parse_system(oracle::read_data(name)); }

ErrorKind kind_of(const char* text)
{
    try {
        parse_system(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error for: " << text);
    return ErrorKind::syntax;
}

Term parse_term(const char* ops, const char* body)
{
    auto sys = parse_system(std::string(ops) + "\nF0 = " + body + "\n");
    return sys.equations[0].body;
}

// Random term over g:2 f:1 a:0 with occurrences of H:2.
Term random_term(std::mt19937& rng, int depth)
{
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 3 : 0);
    switch (pick(rng)) {
    case 0: return {Label::symbol("a", 0), {}};
    case 1: return {Label::symbol("f", 1), {random_term(rng, depth - 1)}};
    case 2: return {Label::symbol("g", 2), {random_term(rng, depth - 1), random_term(rng, depth - 1)}};
    default: return {Label::function("H", 2), {random_term(rng, depth - 1), random_term(rng, depth - 1)}};
    }
}

std::vector<std::string> leaf_names(const PartialTree& t)
{
    std::vector<std::string> out;
    for (const auto& [p, l] : frontier(t)) out.push_back(l.name);
    return out;
}

} // namespace

TEST_CASE("parse and format")
{
    auto sys = load("ternary.system");
    REQUIRE(sys.equations.size() == 3);
    CHECK(sys.equations[0].name == "F0");
    CHECK(sys.equations[2].arity == 2);
    CHECK(sys.alphabet.max_arity() == 3);
    CHECK(format_term(sys.equations[2].body) == "s(x0, a, F2(x0, F2(x0, x1)))");
    CHECK(parse_system(format_system(sys)) == sys);

    auto inferred = parse_system("F0 = F(a); F(x0) = g(x0, F(f(x0)))");
    CHECK(inferred.alphabet.symbols.size() == 3);
    CHECK(*inferred.alphabet.find("a") == 0);
    CHECK(*inferred.alphabet.find("g") == 1);
    CHECK(inferred.equations[1].body.children[1].label.kind == Label::Kind::function);
}

TEST_CASE("parse errors")
{
    CHECK(kind_of("ops: g:2 a:0\nF0 = g(a)") == ErrorKind::arity_mismatch);
    CHECK(kind_of("ops: g:2 a:0\nF0 = h(a, a)") == ErrorKind::undeclared_symbol);
    CHECK(kind_of("ops: g:2 a:0\nF0 = F(a)\nF(x0) = g(x0, x1)") == ErrorKind::variable_out_of_range);
    CHECK(kind_of("ops: g:2 a:0\nF0(x0) = g(x0, a)") == ErrorKind::principal_arity);
    CHECK(kind_of("ops: g:2 a:0\nF0 = g(a, a") == ErrorKind::syntax);
    CHECK(kind_of("ops: g:2 a:0\nF0 = F(a)\nF(y) = g(y, a)") == ErrorKind::syntax);
    CHECK(kind_of("ops: g:2 a:0\nF0 = F(a)\nF(x0) = F(x0, x0)") == ErrorKind::arity_mismatch);
}

TEST_CASE("substitute")
{
    auto g_aa = to_tree(parse_term("ops: g:2 a:0", "g(a, a)"));
    CHECK(format_tree(g_aa) == "g(a, a)");

    SubstitutionMap m;
    m["H"] = to_tree(Term{Label::symbol("g", 2), {{Label::variable(1), {}}, {Label::symbol("f", 1), {{Label::variable(0), {}}}}}});
    Term t{Label::function("H", 2), {{Label::symbol("a", 0), {}}, {Label::symbol("b", 0), {}}}};
    CHECK(format_tree(substitute(to_tree(t), m)) == "g(b, f(a))");

    // Unused parameters drop their subtrees, repeated ones copy them.
    m["H"] = to_tree(Term{Label::symbol("g", 2), {{Label::variable(0), {}}, {Label::variable(0), {}}}});
    CHECK(format_tree(substitute(to_tree(t), m)) == "g(a, a)");

    m["H"] = to_tree(Term{Label::symbol("g", 2), {{Label::variable(0), {}}, {Label::variable(2), {}}}});
    CHECK_THROWS_AS(substitute(to_tree(t), m), Error);

    CHECK(substitute(g_aa, {}) == g_aa);
    CHECK(substitute(PartialTree{}, m).empty());
}

TEST_CASE("bounded substitution equals truncation of the full result")
{
    std::mt19937 rng(5);
    SubstitutionMap m;
    m["H"] = to_tree(Term{Label::symbol("g", 2), {{Label::variable(1), {}}, {Label::symbol("f", 1), {{Label::variable(0), {}}}}}});
    for (int i = 0; i < 300; ++i) {
        auto t = to_tree(random_term(rng, 5));
        auto full = substitute(t, m);
        for (std::size_t d = 0; d <= 6; ++d) {
            CHECK(substitute(t, m, d) == truncate(full, d));
            // Images never collapse to a variable, so depth-d output only sees depth-d input.
            CHECK(truncate(full, d) == truncate(substitute(truncate(t, d), m), d));
        }
    }
}

TEST_CASE("approximates")
{
    auto small = to_tree(parse_term("ops: g:2 a:0", "g(a, a)"));
    auto big = to_tree(parse_term("ops: g:2 a:0", "g(a, g(a, a))"));
    PartialTree partial = small;
    partial.erase(std::string(1, '\1'));
    CHECK(approximates(partial, big));
    CHECK(approximates(partial, small));
    CHECK_FALSE(approximates(small, big));
    CHECK(approximates(PartialTree{}, big));
}

TEST_CASE("Kleene iterates form a chain")
{
    for (const char* name : {"ternary.system", "unary_chain.system", "nested.system", "omega_omega.system"}) {
        auto sys = load(name);
        auto prev = kleene_expand(sys, 0, 12);
        for (const auto& t : prev) CHECK(t.empty());
        for (std::size_t d = 1; d <= 9; ++d) {
            auto next = kleene_expand(sys, d, 12);
            for (std::size_t i = 0; i < next.size(); ++i) {
                CHECK(approximates(prev[i], next[i]));
                CHECK(unresolved_leaves(next[i]).empty());
            }
            prev = std::move(next);
        }
    }
}

TEST_CASE("example iterates")
{
    auto sys = load("unary_chain.system");
    CHECK(format_tree(kleene_expand(sys, 1)[1]) == "g(x0, _)");
    CHECK(format_tree(kleene_expand(sys, 2)[1]) == "g(x0, g(f(x0), _))");
    CHECK(format_tree(kleene_expand(sys, 3)[0]) == "g(a, g(f(a), _))");
    CHECK(format_tree(kleene_expand(sys, 4)[0]) == "g(a, g(f(a), g(f(f(a)), _)))");

    auto it = kleene_expand(load("ternary.system"), 5);
    CHECK(format_tree(it[0]) == "s(a, a, s(a, a, s(a, a, _)))");
    CHECK(format_tree(it[2]) == "s(x0, a, s(x0, a, s(x0, a, s(x0, a, s(x0, a, _)))))");

    // Bounded expansion truncates each component.
    auto bounded = kleene_expand(sys, 6, 3);
    auto full = kleene_expand(sys, 6);
    for (std::size_t i = 0; i < full.size(); ++i) CHECK(bounded[i] == truncate(full[i], 3));
}

TEST_CASE("frontier and labeled frontier")
{
    auto single = to_tree(parse_term("ops: a:0", "a"));
    auto lf = labeled_frontier(single);
    REQUIRE(lf.size() == 1);
    CHECK(lf[0].position.empty());
    CHECK(lf[0].hat.empty());
    CHECK(lf[0].label.name == "a");

    auto gaa = labeled_frontier(to_tree(parse_term("ops: g:2 a:0", "g(a, a)")));
    REQUIRE(gaa.size() == 2);
    CHECK(gaa[0].hat == std::vector<std::pair<std::string, std::size_t>>{{"g", 0}});
    CHECK(gaa[1].hat == std::vector<std::pair<std::string, std::size_t>>{{"g", 1}});

    auto sys = load("unary_chain.system");
    auto t = kleene_expand(sys, 4)[0];
    auto fr = frontier(t);
    REQUIRE(fr.size() == 3);
    CHECK(format_position(fr[0].first) == "0");
    CHECK(format_position(fr[1].first) == "100");
    CHECK(format_position(fr[2].first) == "11000");
    CHECK(format_position("") == "e");
    auto hats = labeled_frontier(t);
    CHECK(hats[1].hat == std::vector<std::pair<std::string, std::size_t>>{{"g", 1}, {"g", 0}, {"f", 0}});

    // Variables are frontier leaves but carry no hat word.
    auto comp = kleene_expand(sys, 2)[1];
    CHECK(leaf_names(comp) == std::vector<std::string>{"x0", "x0"});
    CHECK(labeled_frontier(comp).empty());
}

TEST_CASE("frontier stability")
{
    for (const char* name : {"ternary.system", "nested.system", "omega_omega.system"}) {
        auto sys = load(name);
        for (std::size_t d = 1; d <= 6; ++d) {
            auto now = kleene_expand(sys, d, 10);
            auto next = kleene_expand(sys, d + 1, 10);
            for (std::size_t i = 0; i < now.size(); ++i)
                for (const auto& [p, l] : frontier(now[i])) {
                    auto it = next[i].find(p);
                    REQUIRE(it != next[i].end());
                    CHECK(it->second == l);
                    CHECK(next[i].lower_bound(p + '\0') == next[i].upper_bound(p + '\x7f'));
                }
        }
    }
}

TEST_CASE("binarize examples")
{
    auto sys = load("nested.system");
    auto bin = binarize(sys);
    CHECK(bin.alphabet == RankedAlphabet{{{"g", 2}, {"a", 0}}});
    CHECK(format_term(bin.equations[0].body) == "g(a, g(a, F1(a)))");
    CHECK(format_term(bin.equations[2].body) == "g(a, g(F2(x0, F2(x0, x1)), x1))");
    CHECK(format_term(binarize_term(parse_term("ops: s:4 f:1 b:0", "s(b, f(b), b, f(f(b)))"),
                                    parse_system("ops: s:4 f:1 b:0\nF0 = b").alphabet)) == "g(a, g(a, g(a, a)))");

    auto already = parse_system("ops: h:2 c:0\nF0 = F(c)\nF(x0) = h(x0, F(h(x0, c)))");
    auto same = binarize(already);
    CHECK(format_term(same.equations[1].body) == "g(x0, F(g(x0, a)))");
    CHECK(binarize(same) == same);
}

TEST_CASE("binarization preserves frontier order")
{
    for (const char* name : {"ternary.system", "unary_chain.system", "nested.system", "omega_omega.system"}) {
        auto sys = load(name);
        auto bin = binarize(sys);
        // Iterates of the nested systems grow doubly exponentially.
        for (std::size_t d = 1; d <= 5; ++d) {
            auto a = kleene_expand(sys, d);
            auto b = kleene_expand(bin, d);
            for (std::size_t i = 0; i < a.size(); ++i) {
                auto la = leaf_names(a[i]);
                auto lb = leaf_names(b[i]);
                REQUIRE(la.size() == lb.size());
                for (std::size_t k = 0; k < la.size(); ++k)
                    CHECK(lb[k] == (la[k][0] == 'x' ? la[k] : std::string("a")));
            }
        }
    }
}
