#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ordgram/error.hpp"
#include "ordgram/lexorder.hpp"
#include "ordgram/translate.hpp"
#include "oracles.hpp"

using namespace ordgram;

namespace {

TreeSystem load(const char* name) { return parse_system(oracle::read_data(name)); }

const char* const labeled_ternary = R"(terminals: (s,0) (s,1) (s,2) a
start: F0
F0 -> F1 | (F1,0) a
F1 -> F2 | (F2,0) a
(F1,0) -> (F2,1)
(F2,0) -> (s,0) | (s,2) (F2,0) | (s,2) (F2,1) (F2,0)
(F2,1) -> (s,2) (F2,1) (F2,1)
F2 -> (s,1) a | (s,2) F2 | (s,2) (F2,1) F2
)";

const char* const frontier_ternary = R"(terminals: 0 1 2
start: F0
F0 -> F1 | (F1,0)
F1 -> F2 | (F2,0)
(F1,0) -> (F2,1)
(F2,0) -> 0 | 2 (F2,0) | 2 (F2,1) (F2,0)
(F2,1) -> 2 (F2,1) (F2,1)
F2 -> 1 | 2 F2 | 2 (F2,1) F2
)";

// Letters (s,j) map to j, constants vanish.
Word erase(const Grammar& labeled, const Word& w)
{
    Word out;
    for (char c : w) {
        const auto& name = labeled.alphabet.letters()[static_cast<unsigned char>(c)];
        if (name.front() != '(') continue;
        out.push_back(static_cast<char>(std::stoi(name.substr(name.find(',') + 1))));
    }
    return out;
}

} // namespace

TEST_CASE("labeled alphabet")
{
    auto sys = load("nested.system");
    auto alpha = labeled_alphabet(sys.alphabet);
    CHECK(alpha.letters() == std::vector<std::string>{"(s1,0)", "(s2,0)", "(s1,1)", "(s1,2)", "a", "b"});
    CHECK(pair_name("F2", 1) == "(F2,1)");
}

TEST_CASE("grammars of the worked example")
{
    auto sys = load("ternary.system");
    CHECK(format_grammar(build_labeled_grammar(sys)) == format_grammar(parse_grammar(labeled_ternary)));
    CHECK(format_grammar(build_frontier_grammar(sys)) == format_grammar(parse_grammar(frontier_ternary)));
    CHECK(build_labeled_grammar(sys).nonterminals.size() == 6);
    CHECK(labeled_rules(sys).productions.size() == build_labeled_grammar(sys).productions.size());
}

TEST_CASE("other systems")
{
    auto g = build_labeled_grammar(load("unary_chain.system"));
    CHECK(format_grammar(g) == format_grammar(parse_grammar(R"(terminals: (g,0) (f,0) (g,1) a
start: F0
F0 -> F | (F,0) a
(F,0) -> (g,0) | (g,1) (F,0) (f,0)
F -> (g,1) F
)")));

    auto constant = build_frontier_grammar(parse_system("ops: a:0\nF0 = a"));
    CHECK(constant.empty_word);
    CHECK(enumerate_words(constant, 4).words == std::vector<Word>{Word{}});

    // A bare variable body gives an epsilon rule that erasure removes.
    auto id = parse_system("ops: g:2 a:0\nF0 = g(I(a), a)\nI(x0) = x0");
    CHECK(labeled_rules(id).productions.size() == 4);
    auto gi = build_frontier_grammar(id);
    CHECK(enumerate_words(gi, 4).words == std::vector<Word>{oracle::bits("0"), oracle::bits("1")});

    auto mixed = parse_system("ops: g:2 a:0\nF0 = H(a, a)\nH(x0, x1) = g(x0, H(x1, a))");
    CHECK_NOTHROW(build_frontier_grammar(mixed));
}

TEST_CASE("verify_translation passes on the examples")
{
    auto bin3 = binarize(load("nested.system"));
    for (const auto& sys : {load("ternary.system"), load("unary_chain.system"), bin3, load("omega_omega.system")}) {
        auto report = verify_translation(sys, 6, 8);
        CHECK(report.pass);
        CHECK(report.discrepancies.empty());
        CHECK(report.words_checked > 0);
    }
    CHECK(verify_translation(load("nested.system"), 5, 8).pass);
}

TEST_CASE("verify_translation detects a damaged grammar")
{
    auto sys = load("ternary.system");
    auto g = build_labeled_grammar(sys);
    auto f2 = g.id("F2");
    auto it = std::find_if(g.productions.begin(), g.productions.end(), [&](const Production& p) {
        return p.lhs == f2 && p.rhs.size() == 2;
    });
    REQUIRE(it != g.productions.end());
    g.productions.erase(it);
    auto report = verify_translation(sys, 6, 8, &g);
    CHECK_FALSE(report.pass);
    REQUIRE_FALSE(report.discrepancies.empty());
    CHECK(report.discrepancies.front().kind == "missing_from_grammar");

    auto extra = build_labeled_grammar(sys);
    extra.add_production(extra.id("F2"), {Symbol{true, *extra.alphabet.find("a")}});
    auto r2 = verify_translation(sys, 6, 8, &extra);
    CHECK_FALSE(r2.pass);
    CHECK(std::any_of(r2.discrepancies.begin(), r2.discrepancies.end(), [](const Discrepancy& d) {
        return d.nonterminal == "F2" && d.word == "a" && d.kind == "missing_from_iterate";
    }));
}

TEST_CASE("erasing letters commutes with the construction")
{
    for (const char* name : {"ternary.system", "unary_chain.system", "nested.system", "omega_omega.system"}) {
        auto sys = load(name);
        auto gl = build_labeled_grammar(sys);
        auto gf = build_frontier_grammar(sys);
        auto ll = enumerate_languages(gl, 8);
        auto lf = enumerate_languages(gf, 7);
        for (std::size_t x = 0; x < gl.nonterminals.size(); ++x) {
            std::set<Word> image;
            for (const auto& w : ll.words[x]) {
                auto e = erase(gl, w);
                if (e.size() <= 7) image.insert(e);
            }
            auto y = gf.find(gl.nonterminals[x]);
            REQUIRE(y);
            CHECK(std::vector<Word>(image.begin(), image.end()) == lf.words[*y]);
        }
    }
}

TEST_CASE("frontier grammars are clean prefix grammars")
{
    for (const char* name : {"ternary.system", "unary_chain.system", "nested.system", "omega_omega.system"}) {
        auto g = normalize(build_frontier_grammar(binarize(load(name))));
        CHECK(check_prefix(g, Bounds{10, 20000, 32}).clean());
        auto probes = check_wellorder_probes(g, Bounds{10, 20000, 32});
        CHECK(probes.clean() == (std::string(name) != "nested.system"));
    }
}

TEST_CASE("the nested example is not well-ordered")
{
    auto g = normalize(build_frontier_grammar(binarize(load("nested.system"))));
    auto probes = check_wellorder_probes(g, Bounds{10, 20000, 32});
    REQUIRE_FALSE(probes.clean());
    CHECK(probes.violations.front().kind == "hierarchy");
    CHECK(probes.violations.front().nonterminal == "(F2,1)");

    // w -> 10 w 11 descends from 11 inside L((F2,1)).
    auto lang = enumerate_languages(g, 13).words[g.id("(F2,1)")];
    Word w = oracle::bits("11");
    std::vector<Word> chain{w};
    for (int i = 0; i < 2; ++i) {
        w = oracle::bits("10") + w + oracle::bits("11");
        chain.push_back(w);
    }
    for (std::size_t i = 0; i < chain.size(); ++i) {
        CHECK(std::binary_search(lang.begin(), lang.end(), chain[i]));
        if (i) CHECK(lex_less(chain[i], chain[i - 1]));
    }
    CHECK(descending_chain_search(lang).has_value());
}

TEST_CASE("frontier agreement")
{
    for (const char* name : {"ternary.system", "unary_chain.system", "omega_omega.system"}) {
        auto fa = check_frontier_agreement(load(name), 8);
        CHECK(fa.pass);
        CHECK(fa.frontier_words == fa.grammar_words);
        CHECK_FALSE(fa.witness);
    }
    auto fa = check_frontier_agreement(binarize(load("nested.system")), 8);
    CHECK(fa.pass);
    CHECK(fa.frontier_words.size() > 3);
}

TEST_CASE("frontier ordinal bounds")
{
    // The bound is w^(w^h) for the height h of the start symbol.
    CHECK(frontier_ordinal_bound(load("unary_chain.system")) == parse_ordinal("w^w"));
    CHECK(frontier_ordinal_bound(parse_system("ops: a:0\nF0 = a")) == parse_ordinal("w"));
    CHECK(frontier_ordinal_bound(load("ternary.system")) == parse_ordinal("w^(w^3)"));
    // Classes {F0} > {(G,0)} > {(F,0)} give height 2.
    CHECK(frontier_ordinal_bound(load("omega_omega.system")) == parse_ordinal("w^(w^2)"));
}
