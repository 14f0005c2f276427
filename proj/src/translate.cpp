#include "ordgram/translate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ordgram/error.hpp"
#include "ordgram/lexorder.hpp"

namespace ordgram {

std::string pair_name(const std::string& name, std::size_t j)
{
    return "(" + name + "," + std::to_string(j) + ")";
}

TerminalAlphabet labeled_alphabet(const RankedAlphabet& alphabet)
{
    std::vector<std::string> letters;
    const std::size_t k = alphabet.max_arity();
    for (std::size_t j = 0; j < k; ++j)
        for (const auto& s : alphabet.symbols)
            if (j < s.arity) letters.push_back(pair_name(s.name, j));
    for (const auto& s : alphabet.symbols)
        if (s.arity == 0) letters.push_back(s.name);
    return TerminalAlphabet(std::move(letters));
}

namespace {

void push_raw(Grammar& g, std::size_t lhs, std::vector<Symbol> rhs)
{
    Production p{lhs, std::move(rhs)};
    if (std::find(g.productions.begin(), g.productions.end(), p) == g.productions.end())
        g.productions.push_back(std::move(p));
}

void declare_nonterminals(const TreeSystem& sys, Grammar& g)
{
    for (const auto& eq : sys.equations) {
        g.add_nonterminal(eq.name);
        for (std::size_t j = 0; j < eq.arity; ++j) g.add_nonterminal(pair_name(eq.name, j));
    }
    g.start = 0;
}

/// Erases nonterminals whose language is {eps}.
Grammar erase_epsilon(const Grammar& raw)
{
    const std::size_t n = raw.nonterminals.size();
    std::vector<bool> productive(n, false), nullable(n, false);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& p : raw.productions) {
            bool prod = std::all_of(p.rhs.begin(), p.rhs.end(), [&](const Symbol& s) { return s.terminal || productive[s.index]; });
            bool null = std::all_of(p.rhs.begin(), p.rhs.end(), [&](const Symbol& s) { return !s.terminal && nullable[s.index]; });
            if (prod && !productive[p.lhs]) productive[p.lhs] = changed = true;
            if (null && !nullable[p.lhs]) nullable[p.lhs] = changed = true;
        }
    }
    auto usable = [&](const Production& p) {
        return std::all_of(p.rhs.begin(), p.rhs.end(), [&](const Symbol& s) { return s.terminal || productive[s.index]; });
    };
    std::vector<bool> eps_only = nullable;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& p : raw.productions) {
            if (!eps_only[p.lhs] || !usable(p)) continue;
            bool only = std::all_of(p.rhs.begin(), p.rhs.end(), [&](const Symbol& s) { return !s.terminal && eps_only[s.index]; });
            if (!only) {
                eps_only[p.lhs] = false;
                changed = true;
            }
        }
    }
    std::vector<bool> accessible(n, false);
    std::vector<std::size_t> stack{raw.start};
    accessible[raw.start] = true;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (const auto& p : raw.productions) {
            if (p.lhs != x || !usable(p)) continue;
            for (const auto& s : p.rhs)
                if (!s.terminal && !accessible[s.index]) {
                    accessible[s.index] = true;
                    stack.push_back(s.index);
                }
        }
    }
    for (std::size_t x = 0; x < n; ++x)
        if (accessible[x] && nullable[x] && !eps_only[x])
            throw Error(ErrorKind::epsilon_production,
                        raw.name(x) + " derives the empty word and nonempty words");

    Grammar out;
    out.alphabet = raw.alphabet;
    if (eps_only[raw.start]) {
        out.nonterminals = {raw.name(raw.start)};
        out.start = 0;
        out.empty_word = true;
        return out;
    }
    out.start = out.add_nonterminal(raw.name(raw.start));
    for (const auto& p : raw.productions) {
        if (eps_only[p.lhs]) continue;
        std::vector<Symbol> rhs;
        for (const auto& s : p.rhs) {
            if (s.terminal) rhs.push_back(s);
            else if (!eps_only[s.index]) rhs.push_back(Symbol::nonterm(out.add_nonterminal(raw.name(s.index))));
        }
        const auto lhs = out.add_nonterminal(raw.name(p.lhs));
        if (!rhs.empty()) out.add_production(lhs, std::move(rhs));
    }
    return out;
}

std::vector<Symbol> hat_of(const Grammar& g, const PartialTree& body, const Position& u)
{
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const Label& anc = body.at(u.substr(0, i));
        const std::size_t c = static_cast<unsigned char>(u[i]);
        if (anc.kind == Label::Kind::function) {
            out.push_back(Symbol::nonterm(g.id(pair_name(anc.name, c))));
        } else {
            out.push_back(Symbol::term(*g.alphabet.find(pair_name(anc.name, c))));
        }
    }
    return out;
}

} // namespace

Grammar labeled_rules(const TreeSystem& sys)
{
    Grammar g;
    g.alphabet = labeled_alphabet(sys.alphabet);
    declare_nonterminals(sys, g);
    for (const auto& eq : sys.equations) {
        const PartialTree body = to_tree(eq.body);
        const std::size_t self = g.id(eq.name);
        for (const auto& [u, label] : body) {
            auto rhs = hat_of(g, body, u);
            switch (label.kind) {
            case Label::Kind::variable:
                push_raw(g, g.id(pair_name(eq.name, label.var)), std::move(rhs));
                break;
            case Label::Kind::function:
                rhs.push_back(Symbol::nonterm(g.id(label.name)));
                push_raw(g, self, std::move(rhs));
                break;
            case Label::Kind::symbol:
                if (label.arity == 0) {
                    rhs.push_back(Symbol::term(*g.alphabet.find(label.name)));
                    push_raw(g, self, std::move(rhs));
                }
                break;
            }
        }
    }
    return g;
}

Grammar build_labeled_grammar(const TreeSystem& sys)
{
    return erase_epsilon(labeled_rules(sys));
}

Grammar build_frontier_grammar(const TreeSystem& sys)
{
    const Grammar gl = labeled_rules(sys);
    const std::size_t k = std::max<std::size_t>(1, sys.alphabet.max_arity());
    std::vector<std::string> digits;
    for (std::size_t j = 0; j < k; ++j) digits.push_back(std::to_string(j));

    // Letter i of G_L maps to a child index, or to nothing for constants.
    std::vector<std::optional<std::size_t>> image(gl.alphabet.size());
    for (const auto& s : sys.alphabet.symbols)
        for (std::size_t j = 0; j < s.arity; ++j) image[*gl.alphabet.find(pair_name(s.name, j))] = j;

    Grammar raw;
    raw.alphabet = TerminalAlphabet(digits);
    raw.nonterminals = gl.nonterminals;
    raw.start = gl.start;
    for (const auto& p : gl.productions) {
        std::vector<Symbol> rhs;
        for (const auto& s : p.rhs) {
            if (!s.terminal) rhs.push_back(s);
            else if (image[s.index]) rhs.push_back(Symbol::term(*image[s.index]));
        }
        push_raw(raw, p.lhs, std::move(rhs));
    }
    return erase_epsilon(raw);
}

// --------------------------------------------------------- verification

namespace {

using WordSets = std::vector<std::set<Word>>;

/// Words of length <= maxlen derivable with derivation trees of height <= depth.
WordSets height_bounded_languages(const Grammar& g, const std::vector<std::optional<std::size_t>>& letter_map,
                                  std::size_t depth, std::size_t maxlen)
{
    const std::size_t n = g.nonterminals.size();
    WordSets current(n);
    if (g.empty_word) current[g.start].insert(Word{});
    for (std::size_t d = 0; d < depth; ++d) {
        WordSets next = current;
        for (const auto& p : g.productions) {
            auto expand = [&](auto&& self, std::size_t i, Word& acc) -> void {
                if (acc.size() > maxlen) return;
                if (i == p.rhs.size()) {
                    next[p.lhs].insert(acc);
                    return;
                }
                const auto& s = p.rhs[i];
                if (s.terminal) {
                    acc.push_back(static_cast<char>(*letter_map[s.index]));
                    self(self, i + 1, acc);
                    acc.pop_back();
                    return;
                }
                for (const auto& w : current[s.index]) {
                    const auto mark = acc.size();
                    acc += w;
                    self(self, i + 1, acc);
                    acc.resize(mark);
                }
            };
            Word acc;
            expand(expand, 0, acc);
        }
        current = std::move(next);
    }
    return current;
}

} // namespace

TranslationReport verify_translation(const TreeSystem& sys, std::size_t depth, std::size_t maxlen, const Grammar* grammar)
{
    const Grammar constructed = labeled_rules(sys);
    const Grammar& g = grammar ? *grammar : constructed;
    const TerminalAlphabet& letters = constructed.alphabet;

    std::vector<std::optional<std::size_t>> letter_map(g.alphabet.size());
    for (std::size_t i = 0; i < g.alphabet.size(); ++i) {
        letter_map[i] = letters.find(g.alphabet.letter(i));
        if (!letter_map[i])
            throw Error(ErrorKind::alphabet_mismatch, "terminal '" + g.alphabet.letter(i) + "' is not a labeled letter");
    }
    const WordSets derivable = height_bounded_languages(g, letter_map, depth, maxlen);
    const auto trees = kleene_expand(sys, depth, maxlen);

    TranslationReport report;
    auto compare = [&](const std::string& name, const std::set<Word>& from_tree) {
        static const std::set<Word> none;
        auto id = g.find(name);
        const std::set<Word>& from_grammar = id ? derivable[*id] : none;
        report.words_checked += from_tree.size();
        for (const auto& w : from_tree)
            if (!from_grammar.count(w)) report.discrepancies.push_back({name, letters.format(w), "missing_from_grammar"});
        for (const auto& w : from_grammar)
            if (!from_tree.count(w)) report.discrepancies.push_back({name, letters.format(w), "missing_from_iterate"});
    };

    for (std::size_t i = 0; i < sys.equations.size(); ++i) {
        const auto& eq = sys.equations[i];
        const PartialTree& t = trees[i];
        std::set<Word> leaves;
        std::vector<std::set<Word>> vars(eq.arity);
        for (const auto& [u, label] : t) {
            if (label.kind == Label::Kind::function) continue;
            if (label.kind == Label::Kind::symbol && label.arity > 0) continue;
            Word hat;
            for (std::size_t k = 0; k < u.size(); ++k)
                hat.push_back(static_cast<char>(*letters.find(pair_name(t.at(u.substr(0, k)).name,
                                                                      static_cast<unsigned char>(u[k])))));
            if (label.kind == Label::Kind::variable) {
                if (hat.size() <= maxlen) vars[label.var].insert(hat);
            } else if (hat.size() + 1 <= maxlen) {
                hat.push_back(static_cast<char>(*letters.find(label.name)));
                leaves.insert(hat);
            }
        }
        compare(eq.name, leaves);
        for (std::size_t j = 0; j < eq.arity; ++j) compare(pair_name(eq.name, j), vars[j]);
    }
    report.pass = report.discrepancies.empty();
    return report;
}

FrontierAgreement check_frontier_agreement(const TreeSystem& sys, std::size_t maxlen, std::size_t max_depth,
                                           std::size_t confirm, std::size_t cap)
{
    FrontierAgreement out;
    const Grammar g = normalize(build_frontier_grammar(sys));
    const auto en = enumerate_words(g, maxlen, cap);
    out.grammar_words = en.words;
    if (en.truncated) {
        out.detail = "grammar enumeration truncated at the cap";
        return out;
    }
    const std::set<Word> target(en.words.begin(), en.words.end());

    std::vector<PartialTree> bodies;
    for (const auto& eq : sys.equations) bodies.push_back(to_tree(eq.body));
    std::vector<PartialTree> current(sys.equations.size());
    std::optional<std::size_t> matched;
    std::set<Word> positions;
    for (std::size_t d = 1; d <= max_depth; ++d) {
        SubstitutionMap images;
        for (std::size_t k = 0; k < sys.equations.size(); ++k) images[sys.equations[k].name] = current[k];
        std::vector<PartialTree> next;
        for (const auto& body : bodies) next.push_back(substitute(body, images, maxlen));
        current = std::move(next);

        positions.clear();
        for (const auto& [u, label] : frontier(current[0])) positions.insert(u);
        if (positions == target) {
            if (!matched) matched = d;
            if (d - *matched >= confirm) break;
        } else if (matched) {
            break;
        }
    }
    out.frontier_words.assign(positions.begin(), positions.end());
    sort_lex(out.frontier_words);
    if (positions == target && matched) {
        out.pass = true;
        out.depth = *matched;
        return out;
    }
    for (const auto& w : target)
        if (!positions.count(w)) {
            out.witness = w;
            out.detail = "grammar word missing from the bounded frontier";
            return out;
        }
    for (const auto& w : positions)
        if (!target.count(w)) {
            out.witness = w;
            out.detail = "frontier position not derivable in the grammar";
            return out;
        }
    out.detail = "frontier did not stabilize";
    return out;
}

CnfOrdinal frontier_ordinal_bound(const TreeSystem& sys)
{
    const Grammar g = normalize(build_frontier_grammar(binarize(sys)));
    return height_bound(g, g.start);
}

} // namespace ordgram
