#include <algorithm>

#include "ordgram/cnf_ordinal.hpp"
#include "ordgram/error.hpp"
#include "ordgram/grammar.hpp"
#include "ordgram/lexorder.hpp"

namespace ordgram {

CnfOrdinal height_bound(const Grammar& g, std::size_t nonterminal)
{
    return CnfOrdinal::omega_tower(height(g, nonterminal));
}

ViolationReport check_prefix(const Grammar& g, const Bounds& bounds)
{
    ViolationReport report;
    const auto langs = enumerate_languages(g, bounds.maxlen, bounds.cap);
    report.truncated = langs.any_truncated();
    for (std::size_t x = 0; x < g.nonterminals.size(); ++x) {
        const auto& words = langs.words[x];
        // Extensions of u follow u contiguously in <_l order.
        for (std::size_t i = 0; i < words.size(); ++i) {
            for (std::size_t j = i + 1; j < words.size() && words[j].starts_with(words[i]); ++j)
                report.violations.push_back({"prefix", g.name(x), words[i], words[j],
                                             "the first word is a proper prefix of the second"});
        }
    }
    return report;
}

ViolationReport check_wellorder_probes(const Grammar& g, const Bounds& bounds)
{
    ViolationReport report;
    const auto langs = enumerate_languages(g, bounds.maxlen, bounds.cap);
    report.truncated = langs.any_truncated();
    for (std::size_t x = 0; x < g.nonterminals.size(); ++x) {
        if (!is_recursive(g, x)) continue;
        const auto pumps = cycle_pump_words(g, x, bounds.cycle_limit);
        if (pumps.empty()) {
            report.violations.push_back({"empty_pump", g.name(x), {}, {},
                                         "every cycle has an empty terminal prefix"});
            continue;
        }
        for (std::size_t i = 0; i < pumps.size(); ++i) {
            for (std::size_t j = i + 1; j < pumps.size(); ++j) {
                const auto& u = pumps[i].size() <= pumps[j].size() ? pumps[i] : pumps[j];
                const auto& v = pumps[i].size() <= pumps[j].size() ? pumps[j] : pumps[i];
                if (!v.starts_with(u))
                    report.violations.push_back({"incomparable_pumps", g.name(x), u, v,
                                                 "pump words of the same nonterminal are not prefix-comparable"});
            }
        }
        for (const auto& u : pumps) {
            for (const auto& v : langs.words[x]) {
                if (v == u) continue;
                if (strict_less(v, u) || prefix_less(u, v)) continue;
                report.violations.push_back({"hierarchy", g.name(x), v, u,
                                             "word is neither strictly below the pump word nor an extension of it"});
            }
        }
    }
    return report;
}

Stratum stratum(const Grammar& g, std::size_t nonterminal, std::size_t n, const Bounds& bounds)
{
    Word root;
    try {
        root = u0(g, nonterminal);
    } catch (const Error& e) {
        throw Error(ErrorKind::u0_unavailable, e.what());
    }
    Stratum out;
    out.u0 = root;
    const auto langs = enumerate_languages(g, bounds.maxlen, bounds.cap);
    const auto& words = langs.words[nonterminal];
    if (words.size() < 2) {
        out.status = StratumStatus::degenerate;
        return out;
    }
    for (const auto& w : words)
        if (stratum_index(w, root) == n) out.words.push_back(w);
    return out;
}

} // namespace ordgram
