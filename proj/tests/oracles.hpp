#pragma once

// Independent reference implementations used to derive expected values.

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ordgram/cnf_ordinal.hpp"
#include "ordgram/grammar.hpp"

namespace oracle {

using ordgram::Grammar;
using ordgram::Symbol;
using ordgram::Word;

inline std::string read_data(const std::string& name)
{
    std::ifstream in(std::string(ORDGRAM_TEST_DATA) + "/" + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Words from "0101"-style text over the binary alphabet.
inline Word bits(const std::string& s)
{
    Word w;
    for (char c : s) w.push_back(static_cast<char>(c - '0'));
    return w;
}

inline std::string text(const Word& w)
{
    std::string s;
    for (char c : w) s.push_back(static_cast<char>('0' + c));
    return s;
}

/// Leftmost derivations over sentential forms; every symbol yields at
/// least one letter, so forms longer than maxlen are pruned.
inline std::set<Word> derive(const Grammar& g, std::size_t x, std::size_t maxlen)
{
    std::set<Word> out;
    std::set<std::vector<Symbol>> seen;
    std::vector<std::vector<Symbol>> todo{{Symbol::nonterm(x)}};
    while (!todo.empty()) {
        auto form = todo.back();
        todo.pop_back();
        if (form.size() > maxlen || !seen.insert(form).second) continue;
        auto it = std::find_if(form.begin(), form.end(), [](const Symbol& s) { return !s.terminal; });
        if (it == form.end()) {
            Word w;
            for (const auto& s : form) w.push_back(static_cast<char>(s.index));
            out.insert(w);
            continue;
        }
        const auto pos = static_cast<std::size_t>(it - form.begin());
        for (const auto& p : g.productions) {
            if (p.lhs != it->index) continue;
            std::vector<Symbol> next(form.begin(), form.begin() + static_cast<long>(pos));
            next.insert(next.end(), p.rhs.begin(), p.rhs.end());
            next.insert(next.end(), form.begin() + static_cast<long>(pos) + 1, form.end());
            todo.push_back(std::move(next));
        }
    }
    return out;
}

/// <_l by explicit case analysis on the first difference.
inline bool lex_before(const Word& u, const Word& v)
{
    for (std::size_t i = 0; i < u.size() && i < v.size(); ++i)
        if (u[i] != v[i]) return static_cast<unsigned char>(u[i]) < static_cast<unsigned char>(v[i]);
    return u.size() < v.size();
}

inline std::vector<Word> lex_sorted(const std::set<Word>& words)
{
    std::vector<Word> out(words.begin(), words.end());
    // Insertion sort keeps the oracle free of library comparators.
    for (std::size_t i = 1; i < out.size(); ++i)
        for (std::size_t j = i; j > 0 && lex_before(out[j], out[j - 1]); --j) std::swap(out[j], out[j - 1]);
    return out;
}

/// Transitive closure by Warshall's algorithm; height = number of
/// mutual-reachability classes strictly below.
inline std::vector<std::size_t> heights(const Grammar& g)
{
    const std::size_t n = g.nonterminals.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (const auto& p : g.productions)
        for (const auto& s : p.rhs)
            if (!s.terminal) r[p.lhs][s.index] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (r[i][k] && r[k][j]) r[i][j] = true;
    std::vector<std::size_t> out(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        std::set<std::size_t> reps;
        for (std::size_t y = 0; y < n; ++y) {
            if (!r[x][y] || r[y][x]) continue;
            std::size_t rep = y;
            for (std::size_t z = 0; z < n; ++z)
                if (r[y][z] && r[z][y]) rep = std::min(rep, z);
            reps.insert(rep);
        }
        out[x] = reps.size();
    }
    return out;
}

/// Random ordinal below w^(w^max_power): at most max_terms terms,
/// coefficients in [1, max_coef].
inline ordgram::CnfOrdinal random_ordinal(std::mt19937& rng, unsigned max_power, unsigned max_terms, unsigned max_coef)
{
    using namespace ordgram;
    std::uniform_int_distribution<unsigned> coef(1, max_coef), terms(0, max_terms), bit(0, 1);
    auto random_exponent = [&]() {
        std::vector<ExponentTerm> t;
        for (int p = static_cast<int>(max_power) - 1; p >= 0; --p)
            if (bit(rng) && t.size() < 2) t.push_back({p, coef(rng)});
        return CnfExponent(t);
    };
    std::vector<CnfExponent> exps;
    const unsigned k = terms(rng);
    for (unsigned i = 0; i < k; ++i) exps.push_back(random_exponent());
    std::sort(exps.begin(), exps.end(), [](const CnfExponent& a, const CnfExponent& b) { return b < a; });
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<CnfOrdinal::Term> out;
    for (auto& e : exps) out.push_back({e, coef(rng)});
    return CnfOrdinal(out);
}

} // namespace oracle
