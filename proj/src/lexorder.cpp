#include "ordgram/lexorder.hpp"

#include <algorithm>
#include <set>

#include "ordgram/error.hpp"
#include "ordgram/synthesis.hpp"

namespace ordgram {

const char* to_string(OrderClass c)
{
    switch (c) {
    case OrderClass::equal: return "equal";
    case OrderClass::prefix_less: return "prefix_less";
    case OrderClass::strict_less: return "strict_less";
    case OrderClass::prefix_greater: return "prefix_greater";
    case OrderClass::strict_greater: return "strict_greater";
    }
    return "?";
}

OrderClass lex_classify(const Word& u, const Word& v)
{
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] != v[i])
            return static_cast<unsigned char>(u[i]) < static_cast<unsigned char>(v[i]) ? OrderClass::strict_less
                                                                                        : OrderClass::strict_greater;
    }
    if (u.size() == v.size()) return OrderClass::equal;
    return u.size() < v.size() ? OrderClass::prefix_less : OrderClass::prefix_greater;
}

OrderClass lex_classify(const TerminalAlphabet& alphabet, const Word& u, const Word& v)
{
    auto check = [&](const Word& w) {
        for (char c : w)
            if (static_cast<unsigned char>(c) >= alphabet.size())
                throw Error(ErrorKind::alphabet_mismatch, "word uses a letter outside the alphabet");
    };
    check(u);
    check(v);
    return lex_classify(u, v);
}

bool BoundedLanguages::any_truncated() const
{
    return std::any_of(truncated.begin(), truncated.end(), [](bool t) { return t; });
}

void sort_lex(std::vector<Word>& words)
{
    std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) { return lex_less(a, b); });
}

BoundedLanguages enumerate_languages(const Grammar& g, std::size_t maxlen, std::size_t cap)
{
    const std::size_t n = g.nonterminals.size();
    // layers[X][l] holds the words of L(X) of length exactly l.
    std::vector<std::vector<std::set<Word>>> layers(n, std::vector<std::set<Word>>(maxlen + 1));
    std::vector<std::size_t> count(n, 0);
    BoundedLanguages out;
    out.truncated.assign(n, false);

    auto insert = [&](std::size_t x, std::size_t len, const Word& w) {
        if (layers[x][len].count(w)) return false;
        if (count[x] >= cap) {
            out.truncated[x] = true;
            return false;
        }
        layers[x][len].insert(w);
        ++count[x];
        return true;
    };

    if (g.empty_word) insert(g.start, 0, Word{});

    for (std::size_t len = 1; len <= maxlen; ++len) {
        for (const auto& p : g.productions) {
            const auto& rhs = p.rhs;
            if (rhs.size() == 1 && !rhs[0].terminal) continue;
            if (rhs.size() > len) continue;
            // Every part of a non-unit rhs is nonempty, hence strictly shorter than len.
            auto expand = [&](auto&& self, std::size_t i, std::size_t remaining, Word& acc) -> void {
                if (i == rhs.size()) {
                    if (remaining == 0) insert(p.lhs, len, acc);
                    return;
                }
                const std::size_t reserve = rhs.size() - i - 1;
                if (remaining < reserve + 1) return;
                const auto& s = rhs[i];
                if (s.terminal) {
                    acc.push_back(static_cast<char>(s.index));
                    self(self, i + 1, remaining - 1, acc);
                    acc.pop_back();
                    return;
                }
                for (std::size_t m = 1; m + reserve <= remaining && m < len; ++m) {
                    for (const auto& w : layers[s.index][m]) {
                        const auto mark = acc.size();
                        acc += w;
                        self(self, i + 1, remaining - m, acc);
                        acc.resize(mark);
                    }
                }
            };
            Word acc;
            expand(expand, 0, len, acc);
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& p : g.productions) {
                if (p.rhs.size() != 1 || p.rhs[0].terminal) continue;
                const auto from = p.rhs[0].index;
                std::vector<Word> copy(layers[from][len].begin(), layers[from][len].end());
                for (const auto& w : copy)
                    if (insert(p.lhs, len, w)) changed = true;
            }
        }
    }

    out.words.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (const auto& layer : layers[x]) out.words[x].insert(out.words[x].end(), layer.begin(), layer.end());
        sort_lex(out.words[x]);
    }
    return out;
}

Enumeration enumerate_words(const Grammar& g, std::size_t maxlen, std::size_t cap)
{
    auto langs = enumerate_languages(g, maxlen, cap);
    return {std::move(langs.words[g.start]), langs.truncated[g.start]};
}

std::optional<std::vector<Word>> descending_chain_search(const std::vector<Word>& words, const WordPredicate& suspect)
{
    std::vector<Word> pool;
    for (const auto& w : words)
        if (!suspect || suspect(w)) pool.push_back(w);
    std::stable_sort(pool.begin(), pool.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });
    std::vector<std::size_t> best(pool.size(), 1), prev(pool.size(), npos);
    std::size_t top = npos;
    for (std::size_t j = 0; j < pool.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (pool[i].size() < pool[j].size() && strict_less(pool[j], pool[i]) && best[i] + 1 > best[j]) {
                best[j] = best[i] + 1;
                prev[j] = i;
            }
        }
        if (top == npos || best[j] > best[top]) top = j;
    }
    if (top == npos || best[top] < 2) return std::nullopt;
    std::vector<Word> chain;
    for (auto k = top; k != npos; k = prev[k]) chain.push_back(pool[k]);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

MonotoneReport verify_monotone_rank(const SynthesizedGrammar& sg, std::size_t maxlen, std::size_t cap)
{
    MonotoneReport report;
    const auto en = enumerate_words(sg.grammar, maxlen, cap);
    report.truncated = en.truncated;
    std::optional<CnfOrdinal> last;
    for (std::size_t i = 0; i < en.words.size(); ++i) {
        const auto& w = en.words[i];
        CnfOrdinal r;
        try {
            r = rank(sg, w);
        } catch (const Error& e) {
            report.pass = false;
            report.first = w;
            report.reason = std::string("enumerated word is not decodable: ") + e.what();
            return report;
        }
        ++report.checked;
        if (!(r < sg.order_type)) {
            report.pass = false;
            report.first = w;
            report.first_rank = r;
            report.reason = "rank is not below the order type";
            return report;
        }
        if (last && !(*last < r)) {
            report.pass = false;
            report.first = en.words[i - 1];
            report.second = w;
            report.first_rank = *last;
            report.second_rank = r;
            report.reason = "rank does not increase along <_l";
            return report;
        }
        last = r;
    }
    return report;
}

} // namespace ordgram
