#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ordgram/error.hpp"
#include "ordgram/lexorder.hpp"
#include "ordgram/synthesis.hpp"
#include "oracles.hpp"

using namespace ordgram;
using oracle::bits;

namespace {

CnfOrdinal ord(const char* s) { return parse_ordinal(s); }

std::vector<Word> language(const SynthesizedGrammar& sg, std::size_t maxlen = 12)
{
    return enumerate_words(sg.grammar, maxlen).words;
}

} // namespace

TEST_CASE("base grammars")
{
    CHECK(language(grammar_one()) == std::vector<Word>{bits("0")});
    CHECK(language(grammar_finite(3)) == std::vector<Word>{bits("0"), bits("10"), bits("110")});
    CHECK(language(grammar_zero()).empty());
    CHECK(grammar_zero().grammar.is_canonical_empty());
    CHECK(grammar_zero().order_type == CnfOrdinal::zero());
    CHECK(grammar_finite(3).order_type == CnfOrdinal::finite(3));
    CHECK(format_grammar(grammar_omega().grammar) == "terminals: 0 1\nstart: Omega\nOmega -> 0 | 1 Omega\n");
}

TEST_CASE("large finite grammars decompose")
{
    auto sg = grammar_finite(100);
    CHECK(sg.order_type == CnfOrdinal::finite(100));
    auto ws = enumerate_words(sg.grammar, 64, 1000).words;
    CHECK(ws.size() == 100);
    for (std::size_t i = 0; i < ws.size(); ++i) CHECK(rank(sg, ws[i]) == CnfOrdinal::finite(i));
}

TEST_CASE("sum_grammar")
{
    auto w = grammar_omega();
    CHECK(sum_grammar(grammar_one(), grammar_one()).order_type == CnfOrdinal::finite(2));
    CHECK(sum_grammar(w, grammar_one()).order_type == ord("w+1"));
    CHECK(sum_grammar(grammar_one(), w).order_type == ord("w"));
    auto z = sum_grammar(grammar_zero(), w);
    CHECK(z.order_type == ord("w"));
    CHECK(language(z) == language(w));
    auto s = sum_grammar(w, grammar_one());
    CHECK(format_grammar(s.grammar) ==
          "terminals: 0 1\nstart: Sum\nSum -> 0 Omega_0 | 1 One_1\nOmega_0 -> 0 | 1 Omega_0\nOne_1 -> 0\n");
}

TEST_CASE("product_grammar")
{
    auto w = grammar_omega();
    auto w2 = product_grammar(w, w);
    CHECK(w2.order_type == ord("w^2"));
    std::vector<Word> expected;
    for (const auto& x : oracle::lex_sorted(oracle::derive(w2.grammar, w2.grammar.start, 12))) expected.push_back(x);
    CHECK(language(w2) == expected);
    for (const auto& x : language(w2)) {
        // 1^k 0 1^n 0
        auto z = x.find('\0');
        CHECK(x.find('\0', z + 1) == x.size() - 1);
    }
    CHECK(product_grammar(grammar_finite(2), w).order_type == ord("w"));
    CHECK(product_grammar(w, grammar_finite(2)).order_type == ord("w*2"));
    CHECK(product_grammar(w, grammar_zero()).grammar.is_canonical_empty());
}

TEST_CASE("omega_power_grammar")
{
    auto p = omega_power_grammar(grammar_omega());
    CHECK(p.order_type == ord("w^w"));
    CHECK(format_grammar(p.grammar) ==
          "terminals: 0 1\nstart: Pow\nPow -> 0 | 1 Pow Omega_0\nOmega_0 -> 0 | 1 Omega_0\n");
    CHECK(omega_power_grammar(grammar_finite(2)).order_type == ord("w"));
    try {
        omega_power_grammar(grammar_one());
        FAIL("expected base_too_small");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::base_too_small);
    }
    CHECK_THROWS_AS(omega_power_grammar(grammar_zero()), Error);
}

TEST_CASE("from_cnf")
{
    CHECK(format_grammar(from_cnf(ord("w")).grammar) == format_grammar(grammar_omega().grammar));
    CHECK(format_grammar(from_cnf(ord("w^w")).grammar) == format_grammar(omega_power_grammar(grammar_omega()).grammar));
    auto a = from_cnf(ord("w^2*2+3"));
    CHECK(a.order_type == ord("w^2*2+3"));
    CHECK(verify_monotone_rank(a, 10).pass);
    CHECK(from_cnf(ord("w^(w^2)")).order_type == ord("w^(w^2)"));
    CHECK(from_cnf(CnfOrdinal::zero()).grammar.is_canonical_empty());
    CHECK(from_cnf(ord("1")).order_type == ord("1"));
}

TEST_CASE("rank")
{
    auto w = grammar_omega();
    CHECK(rank(w, bits("1110")) == CnfOrdinal::finite(3));
    auto w2 = product_grammar(w, w);
    CHECK(rank(w2, bits("11010")) == ord("w*2+1"));

    // Oracle: the position of 1^k 0 1^n 0 among sorted words is w*k+n.
    auto sorted = oracle::lex_sorted(oracle::derive(w2.grammar, w2.grammar.start, 7));
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const auto& x = sorted[i];
        const auto k = x.find('\0');
        const auto n = x.size() - k - 2;
        CHECK(rank(w2, x) == CnfOrdinal::omega() * CnfOrdinal::finite(k) + CnfOrdinal::finite(n));
        if (i) CHECK(rank(w2, sorted[i - 1]) < rank(w2, x));
    }

    auto p = omega_power_grammar(w);
    CHECK(rank(p, bits("0")) == CnfOrdinal::zero());

    try {
        rank(w, bits("111"));
        FAIL("expected not_a_member");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_a_member);
        CHECK(e.position() == 3);
    }
    CHECK_THROWS_AS(rank(w, bits("00")), Error);
    CHECK_THROWS_AS(rank(grammar_finite(3), bits("1110")), Error);
}

TEST_CASE("rank is an order embedding on random recipes")
{
    std::mt19937 rng(17);
    for (int i = 0; i < 25; ++i) {
        auto sg = from_cnf(oracle::random_ordinal(rng, 2, 3, 3));
        auto ws = language(sg, 9);
        if (!ws.empty()) CHECK(is_zero(rank(sg, ws.front())));
        auto report = verify_monotone_rank(sg, 9);
        CHECK(report.pass);
        if (sg.order_type.is_finite()) {
            CHECK(CnfOrdinal::finite(ws.size()) == sg.order_type);
            for (std::size_t k = 0; k < ws.size(); ++k) CHECK(rank(sg, ws[k]) == CnfOrdinal::finite(k));
        }
    }
}

TEST_CASE("omega power language structure")
{
    auto base = from_cnf(ord("w+1"));
    auto p = omega_power_grammar(base);
    for (const auto& x : language(p, 10)) {
        std::size_t n = 0;
        while (x[n] == 1) ++n;
        CHECK(x[n] == 0);
        // Decoding the n blocks with the base recipe consumes the rest.
        std::size_t at = n + 1, blocks = 0;
        while (at < x.size()) {
            bool ok = false;
            for (std::size_t end = at + 1; end <= x.size(); ++end) {
                try {
                    rank(base, x.substr(at, end - at));
                    at = end;
                    ok = true;
                    break;
                } catch (const Error&) {
                }
            }
            REQUIRE(ok);
            ++blocks;
        }
        CHECK(blocks == n);
    }
}

TEST_CASE("recipe text and reload")
{
    auto sg = from_cnf(ord("w^(w+1)*2 + w^2 + 5"));
    auto text = format_recipe(sg.recipe);
    CHECK(format_recipe(parse_recipe(text)) == text);
    CHECK(parse_recipe(text)->order_type == sg.order_type);
    auto file = format_synthesized(sg);
    CHECK(file.find("# recipe: ") != std::string::npos);
    auto back = parse_synthesized(file);
    CHECK(back.order_type == sg.order_type);
    CHECK(format_grammar(back.grammar) == format_grammar(sg.grammar));
    CHECK_THROWS_AS(parse_synthesized(format_grammar(sg.grammar)), Error);
    CHECK_THROWS_AS(parse_recipe("(sum omega)"), Error);
    CHECK_THROWS_AS(parse_recipe("(pow one)"), Error);
    CHECK(format_recipe(parse_recipe("(sum zero omega)")) == "omega");
}

TEST_CASE("closure constructions match CNF arithmetic")
{
    std::mt19937 rng(23);
    for (int i = 0; i < 12; ++i) {
        auto a = from_cnf(oracle::random_ordinal(rng, 2, 2, 2));
        auto b = from_cnf(oracle::random_ordinal(rng, 2, 2, 2));
        auto s = sum_grammar(a, b);
        auto p = product_grammar(a, b);
        CHECK(s.order_type == a.order_type + b.order_type);
        CHECK(p.order_type == a.order_type * b.order_type);
        CHECK(verify_monotone_rank(s, 8).pass);
        CHECK(verify_monotone_rank(p, 8).pass);
        if (a.order_type >= CnfOrdinal::finite(2)) {
            auto q = omega_power_grammar(a);
            CHECK(q.order_type == omega_power(a.order_type));
            CHECK(verify_monotone_rank(q, 8).pass);
        }
    }
}
