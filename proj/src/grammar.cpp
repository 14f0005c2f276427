#include "ordgram/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

#include "ordgram/error.hpp"

namespace ordgram {

// ------------------------------------------------------------- alphabet

TerminalAlphabet::TerminalAlphabet(std::vector<std::string> letters) : letters_(std::move(letters))
{
    if (letters_.empty()) throw Error(ErrorKind::invalid_argument, "terminal alphabet is empty");
    if (letters_.size() > 127) throw Error(ErrorKind::invalid_argument, "terminal alphabet too large");
    std::set<std::string> seen;
    for (const auto& l : letters_) {
        if (l.empty() || !seen.insert(l).second)
            throw Error(ErrorKind::invalid_argument, "terminal letters must be distinct and nonempty");
    }
}

std::optional<std::size_t> TerminalAlphabet::find(std::string_view letter) const
{
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i] == letter) return i;
    return std::nullopt;
}

bool TerminalAlphabet::compact() const
{
    return std::all_of(letters_.begin(), letters_.end(), [](const std::string& l) { return l.size() == 1; });
}

std::string TerminalAlphabet::format(const Word& w) const
{
    std::string out;
    const bool tight = compact();
    for (char c : w) {
        if (!tight && !out.empty()) out += ' ';
        out += letter(static_cast<unsigned char>(c));
    }
    return out;
}

Word TerminalAlphabet::parse_word(std::string_view text) const
{
    Word w;
    if (compact()) {
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            auto i = find(std::string_view(&c, 1));
            if (!i) throw Error(ErrorKind::unknown_terminal, std::string("unknown terminal '") + c + "'");
            w.push_back(static_cast<char>(*i));
        }
        return w;
    }
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        auto i = find(tok);
        if (!i) throw Error(ErrorKind::unknown_terminal, "unknown terminal '" + tok + "'");
        w.push_back(static_cast<char>(*i));
    }
    return w;
}

// -------------------------------------------------------------- grammar

std::optional<std::size_t> Grammar::find(std::string_view n) const
{
    for (std::size_t i = 0; i < nonterminals.size(); ++i)
        if (nonterminals[i] == n) return i;
    return std::nullopt;
}

std::size_t Grammar::id(std::string_view n) const
{
    if (auto i = find(n)) return *i;
    throw Error(ErrorKind::unknown_nonterminal, "unknown nonterminal '" + std::string(n) + "'");
}

std::size_t Grammar::add_nonterminal(std::string_view n)
{
    if (auto i = find(n)) return *i;
    nonterminals.emplace_back(n);
    return nonterminals.size() - 1;
}

void Grammar::add_production(std::size_t lhs, std::vector<Symbol> rhs)
{
    if (rhs.empty()) throw Error(ErrorKind::epsilon_production, "empty right-hand side for " + name(lhs));
    Production p{lhs, std::move(rhs)};
    if (std::find(productions.begin(), productions.end(), p) == productions.end())
        productions.push_back(std::move(p));
}

bool Grammar::is_canonical_empty() const
{
    return nonterminals.size() == 1 && productions.empty() && !empty_word;
}

std::vector<const Production*> Grammar::productions_of(std::size_t nonterminal) const
{
    std::vector<const Production*> out;
    for (const auto& p : productions)
        if (p.lhs == nonterminal) out.push_back(&p);
    return out;
}

// ---------------------------------------------------------------- parse

namespace {

std::vector<std::string> split_ws(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

bool is_identifier(std::string_view s)
{
    if (s.empty() || !is_ident_start(s.front())) return false;
    return std::all_of(s.begin(), s.end(), is_ident_char);
}

/// "(Name,digits)" names a single nonterminal.
bool is_pair_token(std::string_view s)
{
    if (s.size() < 5 || s.front() != '(' || s.back() != ')') return false;
    auto comma = s.find(',');
    if (comma == std::string_view::npos) return false;
    auto name = s.substr(1, comma - 1);
    auto idx = s.substr(comma + 1, s.size() - comma - 2);
    return is_identifier(name) && !idx.empty() &&
           std::all_of(idx.begin(), idx.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_nonterminal_token(std::string_view s) { return is_identifier(s) || is_pair_token(s); }

[[noreturn]] void line_error(ErrorKind kind, std::size_t line, const std::string& msg)
{
    throw Error(kind, "line " + std::to_string(line) + ": " + msg, line);
}

} // namespace

Grammar parse_grammar(std::string_view text)
{
    Grammar g;
    std::optional<TerminalAlphabet> alphabet;
    std::optional<std::string> start;
    bool empty_word = false;
    struct RawAlt {
        std::size_t line;
        std::string lhs;
        std::vector<std::string> tokens;
    };
    std::vector<RawAlt> alts;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.starts_with("terminals:")) {
            if (alphabet) line_error(ErrorKind::syntax, line_no, "duplicate terminals line");
            auto letters = split_ws(line.substr(10));
            if (letters.empty()) line_error(ErrorKind::syntax, line_no, "no terminals declared");
            try {
                alphabet = TerminalAlphabet(letters);
            } catch (const Error& e) {
                line_error(ErrorKind::syntax, line_no, e.what());
            }
            continue;
        }
        if (line.starts_with("start:")) {
            auto toks = split_ws(line.substr(6));
            if (toks.size() != 1) line_error(ErrorKind::syntax, line_no, "expected one start symbol");
            start = toks[0];
            continue;
        }
        if (line.starts_with("empty-word:")) {
            auto toks = split_ws(line.substr(11));
            if (toks.size() != 1 || (toks[0] != "yes" && toks[0] != "no"))
                line_error(ErrorKind::syntax, line_no, "expected 'empty-word: yes|no'");
            empty_word = toks[0] == "yes";
            continue;
        }
        auto arrow = line.find("->");
        if (arrow == std::string_view::npos) line_error(ErrorKind::syntax, line_no, "expected 'LHS -> alternatives'");
        auto lhs_toks = split_ws(line.substr(0, arrow));
        if (lhs_toks.size() != 1) line_error(ErrorKind::syntax, line_no, "expected a single left-hand side");
        std::string_view rest = line.substr(arrow + 2);
        std::size_t from = 0;
        while (true) {
            auto bar = rest.find('|', from);
            auto alt = rest.substr(from, bar == std::string_view::npos ? std::string_view::npos : bar - from);
            alts.push_back({line_no, lhs_toks[0], split_ws(alt)});
            if (bar == std::string_view::npos) break;
            from = bar + 1;
        }
    }

    if (!alphabet) throw Error(ErrorKind::syntax, "missing 'terminals:' line", 0);
    if (!start) throw Error(ErrorKind::syntax, "missing 'start:' line", 0);
    g.alphabet = *alphabet;
    if (g.alphabet.find(*start) || !is_nonterminal_token(*start))
        throw Error(ErrorKind::syntax, "start symbol '" + *start + "' is not a nonterminal", 0);
    g.start = g.add_nonterminal(*start);
    g.empty_word = empty_word;

    for (const auto& alt : alts) {
        if (g.alphabet.find(alt.lhs) || !is_nonterminal_token(alt.lhs))
            line_error(ErrorKind::syntax, alt.line, "left-hand side '" + alt.lhs + "' is not a nonterminal");
        if (alt.tokens.empty())
            line_error(ErrorKind::epsilon_production, alt.line, "empty alternative for " + alt.lhs);
        std::size_t lhs = g.add_nonterminal(alt.lhs);
        std::vector<Symbol> rhs;
        for (const auto& tok : alt.tokens) {
            if (auto t = g.alphabet.find(tok)) {
                rhs.push_back(Symbol::term(*t));
            } else if (is_nonterminal_token(tok)) {
                rhs.push_back(Symbol::nonterm(g.add_nonterminal(tok)));
            } else {
                line_error(ErrorKind::unknown_terminal, alt.line, "unknown terminal '" + tok + "'");
            }
        }
        g.add_production(lhs, std::move(rhs));
    }
    if (g.empty_word && !g.productions.empty())
        throw Error(ErrorKind::syntax, "an empty-word grammar has no productions", 0);
    return g;
}

// --------------------------------------------------------------- format

std::string format_symbol(const Grammar& g, Symbol s)
{
    return s.terminal ? g.alphabet.letter(s.index) : g.name(s.index);
}

std::string format_rhs(const Grammar& g, const std::vector<Symbol>& rhs)
{
    std::string out;
    for (const auto& s : rhs) {
        if (!out.empty()) out += ' ';
        out += format_symbol(g, s);
    }
    return out;
}

namespace {

/// Rank of each nonterminal in canonical first-use order.
std::vector<std::size_t> first_use_rank(const Grammar& g)
{
    const std::size_t n = g.nonterminals.size();
    // Order-independent key for the discovery pass: nonterminals by name.
    auto name_key = [&](const std::vector<Symbol>& rhs) {
        std::vector<std::pair<int, std::string>> key;
        for (const auto& s : rhs) {
            if (s.terminal) key.emplace_back(0, std::string(1, static_cast<char>(s.index)));
            else key.emplace_back(1, g.name(s.index));
        }
        return key;
    };
    std::vector<std::size_t> rank(n, npos);
    std::size_t next = 0;
    std::queue<std::size_t> queue;
    rank[g.start] = next++;
    queue.push(g.start);
    while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop();
        auto prods = g.productions_of(x);
        std::sort(prods.begin(), prods.end(),
                  [&](const Production* a, const Production* b) { return name_key(a->rhs) < name_key(b->rhs); });
        for (const auto* p : prods) {
            for (const auto& s : p->rhs) {
                if (!s.terminal && rank[s.index] == npos) {
                    rank[s.index] = next++;
                    queue.push(s.index);
                }
            }
        }
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (rank[i] == npos) rest.push_back(i);
    std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) { return g.name(a) < g.name(b); });
    for (auto i : rest) rank[i] = next++;
    return rank;
}

} // namespace

std::string format_grammar(const Grammar& g)
{
    std::string out = "terminals:";
    for (const auto& l : g.alphabet.letters()) out += " " + l;
    out += "\nstart: " + g.name(g.start) + "\n";
    if (g.empty_word) out += "empty-word: yes\n";

    const auto rank = first_use_rank(g);
    auto token_key = [&](const std::vector<Symbol>& rhs) {
        std::vector<std::pair<int, std::size_t>> key;
        for (const auto& s : rhs) key.emplace_back(s.terminal ? 0 : 1, s.terminal ? s.index : rank[s.index]);
        return key;
    };
    std::vector<std::size_t> order(g.nonterminals.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
    for (auto x : order) {
        auto prods = g.productions_of(x);
        if (prods.empty()) continue;
        std::sort(prods.begin(), prods.end(),
                  [&](const Production* a, const Production* b) { return token_key(a->rhs) < token_key(b->rhs); });
        out += g.name(x) + " ->";
        for (std::size_t i = 0; i < prods.size(); ++i) {
            out += i == 0 ? " " : " | ";
            out += format_rhs(g, prods[i]->rhs);
        }
        out += "\n";
    }
    return out;
}

// ------------------------------------------------------------ normalize

namespace {

std::vector<bool> productive_set(const Grammar& g)
{
    std::vector<bool> productive(g.nonterminals.size(), false);
    if (g.empty_word) productive[g.start] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions) {
            if (productive[p.lhs]) continue;
            bool ok = std::all_of(p.rhs.begin(), p.rhs.end(),
                                  [&](const Symbol& s) { return s.terminal || productive[s.index]; });
            if (ok) {
                productive[p.lhs] = true;
                changed = true;
            }
        }
    }
    return productive;
}

} // namespace

Grammar normalize(const Grammar& g)
{
    const auto productive = productive_set(g);
    Grammar out;
    out.alphabet = g.alphabet;
    out.empty_word = g.empty_word;
    if (!productive[g.start]) {
        out.nonterminals = {g.name(g.start)};
        out.start = 0;
        return out;
    }
    auto usable = [&](const Production& p) {
        return std::all_of(p.rhs.begin(), p.rhs.end(), [&](const Symbol& s) { return s.terminal || productive[s.index]; });
    };
    std::vector<bool> accessible(g.nonterminals.size(), false);
    std::vector<std::size_t> stack{g.start};
    accessible[g.start] = true;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (const auto& p : g.productions) {
            if (p.lhs != x || !usable(p)) continue;
            for (const auto& s : p.rhs) {
                if (!s.terminal && !accessible[s.index]) {
                    accessible[s.index] = true;
                    stack.push_back(s.index);
                }
            }
        }
    }
    std::vector<std::size_t> remap(g.nonterminals.size(), npos);
    for (std::size_t i = 0; i < g.nonterminals.size(); ++i) {
        if (accessible[i] && productive[i]) {
            remap[i] = out.nonterminals.size();
            out.nonterminals.push_back(g.nonterminals[i]);
        }
    }
    out.start = remap[g.start];
    for (const auto& p : g.productions) {
        if (remap[p.lhs] == npos || !usable(p)) continue;
        std::vector<Symbol> rhs;
        for (const auto& s : p.rhs) rhs.push_back(s.terminal ? s : Symbol::nonterm(remap[s.index]));
        out.add_production(remap[p.lhs], std::move(rhs));
    }
    return out;
}

// ------------------------------------------------------------- classes

OccurrenceClasses occurrence_classes(const Grammar& g)
{
    const std::size_t n = g.nonterminals.size();
    std::vector<std::vector<std::size_t>> succ(n);
    for (const auto& p : g.productions)
        for (const auto& s : p.rhs)
            if (!s.terminal) succ[p.lhs].push_back(s.index);
    for (auto& v : succ) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    OccurrenceClasses oc;
    oc.class_of.assign(n, npos);

    // Tarjan: components are emitted sinks-first, which gives bottom-up ids.
    std::vector<std::size_t> index(n, npos), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    std::size_t counter = 0;
    auto strongconnect = [&](auto&& self, std::size_t v) -> void {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (auto w : succ[v]) {
            if (index[w] == npos) {
                self(self, w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                oc.class_of[w] = oc.members.size();
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            oc.members.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (index[v] == npos) strongconnect(strongconnect, v);

    oc.reach.assign(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<std::size_t> todo{x};
        oc.reach[x][x] = true;
        while (!todo.empty()) {
            auto v = todo.back();
            todo.pop_back();
            for (auto w : succ[v]) {
                if (!oc.reach[x][w]) {
                    oc.reach[x][w] = true;
                    todo.push_back(w);
                }
            }
        }
    }

    oc.below.assign(oc.members.size(), {});
    for (std::size_t c = 0; c < oc.members.size(); ++c) {
        std::set<std::size_t> below;
        for (auto x : oc.members[c])
            for (std::size_t y = 0; y < n; ++y)
                if (oc.reach[x][y] && oc.class_of[y] != c) below.insert(oc.class_of[y]);
        oc.below[c].assign(below.begin(), below.end());
    }
    return oc;
}

namespace {

void check_index(const Grammar& g, std::size_t x)
{
    if (x >= g.nonterminals.size())
        throw Error(ErrorKind::unknown_nonterminal, "nonterminal index " + std::to_string(x) + " out of range");
}

} // namespace

std::size_t height(const OccurrenceClasses& classes, std::size_t nonterminal)
{
    return classes.below.at(classes.class_of.at(nonterminal)).size();
}

std::size_t height(const Grammar& g, std::size_t nonterminal)
{
    check_index(g, nonterminal);
    return height(occurrence_classes(g), nonterminal);
}

long sentential_height(const OccurrenceClasses& classes, const std::vector<Symbol>& form)
{
    long h = -1;
    for (const auto& s : form)
        if (!s.terminal) h = std::max(h, static_cast<long>(height(classes, s.index)));
    return h;
}

bool is_recursive(const Grammar& g, std::size_t nonterminal)
{
    check_index(g, nonterminal);
    const auto oc = occurrence_classes(g);
    for (const auto& p : g.productions) {
        if (p.lhs != nonterminal) continue;
        for (const auto& s : p.rhs)
            if (!s.terminal && oc.reach[s.index][nonterminal]) return true;
    }
    return false;
}

// ------------------------------------------------------------ witnesses

namespace {

bool shorter_or_lex_less(const Word& a, const Word& b)
{
    return a.size() != b.size() ? a.size() < b.size() : a < b;
}

} // namespace

std::vector<std::optional<Word>> shortest_witnesses(const Grammar& g)
{
    std::vector<std::optional<Word>> best(g.nonterminals.size());
    if (g.empty_word) best[g.start] = Word{};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : g.productions) {
            Word cand;
            bool ok = true;
            for (const auto& s : p.rhs) {
                if (s.terminal) {
                    cand.push_back(static_cast<char>(s.index));
                } else if (best[s.index]) {
                    cand += *best[s.index];
                } else {
                    ok = false;
                    break;
                }
            }
            if (ok && (!best[p.lhs] || shorter_or_lex_less(cand, *best[p.lhs]))) {
                best[p.lhs] = std::move(cand);
                changed = true;
            }
        }
    }
    return best;
}

Word shortest_witness(const Grammar& g, std::size_t nonterminal)
{
    check_index(g, nonterminal);
    auto best = shortest_witnesses(g);
    if (!best[nonterminal])
        throw Error(ErrorKind::invalid_argument, "nonterminal " + g.name(nonterminal) + " generates no word");
    return *best[nonterminal];
}

// ---------------------------------------------------------------- pumps

namespace {

struct ClassEdge {
    std::size_t from;
    std::size_t to;
    Word label;
};

/// Edges Y -> Z inside the class of X, one per occurrence of Z in a
/// Y-production, labelled by the terminal image of the rhs prefix.
std::vector<ClassEdge> class_edges(const Grammar& g, const OccurrenceClasses& oc, std::size_t x,
                                   const std::vector<std::optional<Word>>& witnesses)
{
    const auto cls = oc.class_of[x];
    std::vector<ClassEdge> edges;
    for (const auto& p : g.productions) {
        if (oc.class_of[p.lhs] != cls) continue;
        Word prefix;
        for (const auto& s : p.rhs) {
            if (s.terminal) {
                prefix.push_back(static_cast<char>(s.index));
                continue;
            }
            if (oc.class_of[s.index] == cls) edges.push_back({p.lhs, s.index, prefix});
            if (!witnesses[s.index]) break;
            prefix += *witnesses[s.index];
        }
    }
    return edges;
}

} // namespace

Word pump_word(const Grammar& g, std::size_t nonterminal)
{
    check_index(g, nonterminal);
    if (!is_recursive(g, nonterminal))
        throw Error(ErrorKind::u0_unavailable, g.name(nonterminal) + " is not recursive");
    const auto oc = occurrence_classes(g);
    const auto edges = class_edges(g, oc, nonterminal, shortest_witnesses(g));

    // Dijkstra over (node, label nonempty yet) keyed by (length, word).
    using Key = std::pair<std::size_t, Word>;
    using State = std::pair<std::size_t, bool>;
    using Item = std::tuple<std::size_t, Word, std::size_t, bool>;
    auto greater = [](const Item& a, const Item& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) > std::tie(std::get<0>(b), std::get<1>(b));
    };
    std::priority_queue<Item, std::vector<Item>, decltype(greater)> queue(greater);
    std::map<State, Key> settled;
    queue.push({0, Word{}, nonterminal, false});
    bool first = true;
    while (!queue.empty()) {
        auto [len, word, node, positive] = queue.top();
        queue.pop();
        if (!first) {
            if (node == nonterminal && positive) return word;
            if (settled.count({node, positive})) continue;
            settled[{node, positive}] = {len, word};
        }
        first = false;
        for (const auto& e : edges) {
            if (e.from != node) continue;
            Word next = word + e.label;
            queue.push({next.size(), next, e.to, positive || !e.label.empty()});
        }
    }
    throw Error(ErrorKind::empty_pump,
                "every cycle through " + g.name(nonterminal) + " has an empty terminal prefix, so " +
                    g.name(nonterminal) + " =>* " + g.name(nonterminal) + " q and the grammar is not a prefix grammar");
}

std::vector<Word> cycle_pump_words(const Grammar& g, std::size_t nonterminal, std::size_t limit)
{
    check_index(g, nonterminal);
    const auto oc = occurrence_classes(g);
    const auto edges = class_edges(g, oc, nonterminal, shortest_witnesses(g));
    std::set<Word> found;
    std::size_t cycles = 0;
    std::vector<bool> on_path(g.nonterminals.size(), false);
    auto dfs = [&](auto&& self, std::size_t node, const Word& label) -> void {
        for (const auto& e : edges) {
            if (cycles >= limit) return;
            if (e.from != node) continue;
            if (e.to == nonterminal) {
                ++cycles;
                Word w = label + e.label;
                if (!w.empty()) found.insert(std::move(w));
            } else if (!on_path[e.to]) {
                on_path[e.to] = true;
                self(self, e.to, label + e.label);
                on_path[e.to] = false;
            }
        }
    };
    on_path[nonterminal] = true;
    dfs(dfs, nonterminal, Word{});
    std::vector<Word> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), shorter_or_lex_less);
    return out;
}

Word primitive_root(const Word& v)
{
    if (v.empty()) throw Error(ErrorKind::empty_word, "primitive root of the empty word");
    const std::size_t n = v.size();
    std::vector<std::size_t> border(n, 0);
    for (std::size_t j = 1, k = 0; j < n; ++j) {
        while (k > 0 && v[j] != v[k]) k = border[k - 1];
        if (v[j] == v[k]) ++k;
        border[j] = k;
    }
    const std::size_t period = n - border[n - 1];
    return n % period == 0 ? v.substr(0, period) : v;
}

Word u0(const Grammar& g, std::size_t nonterminal)
{
    return primitive_root(pump_word(g, nonterminal));
}

std::vector<NonterminalReport> analyze(const Grammar& g)
{
    const auto oc = occurrence_classes(g);
    std::vector<NonterminalReport> out;
    for (std::size_t x = 0; x < g.nonterminals.size(); ++x) {
        NonterminalReport r;
        r.name = g.name(x);
        r.class_id = oc.class_of[x];
        r.height = height(oc, x);
        r.recursive = is_recursive(g, x);
        if (r.recursive) {
            try {
                r.pump_word = pump_word(g, x);
                r.u0 = primitive_root(*r.pump_word);
            } catch (const Error& e) {
                r.pump_error = e.what();
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

// --------------------------------------------------------------- strata

std::optional<std::size_t> stratum_index(const Word& w, const Word& root)
{
    if (root.empty()) return std::nullopt;
    std::size_t n = 0;
    std::size_t at = 0;
    while (w.compare(at, root.size(), root) == 0 && at + root.size() <= w.size()) {
        at += root.size();
        ++n;
    }
    for (std::size_t i = 0; i < root.size() && at + i < w.size(); ++i) {
        if (w[at + i] != root[i]) {
            if (static_cast<unsigned char>(w[at + i]) < static_cast<unsigned char>(root[i])) return n;
            return std::nullopt;
        }
    }
    return std::nullopt;
}

} // namespace ordgram
