#include "ordgram/tree_system.hpp"

#include <algorithm>
#include <cctype>

#include "ordgram/error.hpp"

namespace ordgram {

std::optional<std::size_t> RankedAlphabet::find(std::string_view name) const
{
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i].name == name) return i;
    return std::nullopt;
}

std::size_t RankedAlphabet::max_arity() const
{
    std::size_t m = 0;
    for (const auto& s : symbols) m = std::max(m, s.arity);
    return m;
}

std::optional<std::size_t> TreeSystem::find(std::string_view name) const
{
    for (std::size_t i = 0; i < equations.size(); ++i)
        if (equations[i].name == name) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------- parse

namespace {

struct RawTerm {
    std::string name;
    bool call = false;
    std::vector<RawTerm> args;
    std::size_t offset = 0;
};

class TermLexer {
public:
    TermLexer(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorKind::syntax, "line " + std::to_string(line_) + ": " + msg, line_);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end()
    {
        skip_ws();
        return pos_ >= text_.size();
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string ident()
    {
        skip_ws();
        auto start = pos_;
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_' || text_[pos_] == '\''))
                ++pos_;
        }
        if (start == pos_) fail("expected an identifier");
        return std::string(text_.substr(start, pos_ - start));
    }

    RawTerm term()
    {
        RawTerm t;
        skip_ws();
        t.offset = pos_;
        t.name = ident();
        if (accept('(')) {
            t.call = true;
            if (!accept(')')) {
                do {
                    t.args.push_back(term());
                } while (accept(','));
                if (!accept(')')) fail("expected ')' or ','");
            }
        }
        return t;
    }

    std::size_t line() const { return line_; }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

std::optional<std::size_t> variable_index(std::string_view name)
{
    if (name.size() < 2 || name[0] != 'x') return std::nullopt;
    std::size_t j = 0;
    for (char c : name.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        j = j * 10 + static_cast<std::size_t>(c - '0');
    }
    return j;
}

struct Statement {
    std::string text;
    std::size_t line;
};

} // namespace

TreeSystem parse_system(std::string_view text)
{
    std::vector<Statement> statements;
    std::optional<std::string> ops_text;
    std::size_t ops_line = 0;
    {
        std::size_t line_no = 0, pos = 0;
        while (pos <= text.size()) {
            auto nl = text.find('\n', pos);
            std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            std::size_t from = 0;
            while (from <= line.size()) {
                auto semi = line.find(';', from);
                auto piece = line.substr(from, semi == std::string_view::npos ? std::string_view::npos : semi - from);
                from = semi == std::string_view::npos ? line.size() + 1 : semi + 1;
                std::string s(piece);
                auto first = s.find_first_not_of(" \t\r");
                if (first == std::string::npos) continue;
                s = s.substr(first);
                if (s.starts_with("ops:")) {
                    if (ops_text) throw Error(ErrorKind::syntax, "line " + std::to_string(line_no) + ": duplicate ops line", line_no);
                    ops_text = s.substr(4);
                    ops_line = line_no;
                } else {
                    statements.push_back({s, line_no});
                }
            }
        }
    }

    TreeSystem sys;
    const bool declared = ops_text.has_value();
    if (declared) {
        std::string_view ops = *ops_text;
        std::size_t i = 0;
        while (i < ops.size()) {
            while (i < ops.size() && std::isspace(static_cast<unsigned char>(ops[i]))) ++i;
            if (i >= ops.size()) break;
            auto end = i;
            while (end < ops.size() && !std::isspace(static_cast<unsigned char>(ops[end]))) ++end;
            std::string tok(ops.substr(i, end - i));
            i = end;
            auto colon = tok.rfind(':');
            if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size() ||
                !std::all_of(tok.begin() + static_cast<long>(colon) + 1, tok.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw Error(ErrorKind::syntax, "line " + std::to_string(ops_line) + ": expected name:arity, got '" + tok + "'",
                            ops_line);
            std::string name = tok.substr(0, colon);
            if (sys.alphabet.find(name))
                throw Error(ErrorKind::syntax, "line " + std::to_string(ops_line) + ": duplicate symbol '" + name + "'", ops_line);
            sys.alphabet.symbols.push_back({name, std::stoul(tok.substr(colon + 1))});
        }
    }

    // Left-hand sides first, so bodies may refer to later equations.
    struct Pending {
        std::string body;
        std::size_t line;
    };
    std::vector<Pending> bodies;
    for (const auto& st : statements) {
        auto eq = st.text.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorKind::syntax, "line " + std::to_string(st.line) + ": expected 'F(x0,...) = term'", st.line);
        TermLexer lhs(std::string_view(st.text).substr(0, eq), st.line);
        RawTerm head = lhs.term();
        if (!lhs.at_end()) lhs.fail("unexpected text in equation head");
        for (std::size_t j = 0; j < head.args.size(); ++j) {
            const auto& a = head.args[j];
            if (a.call || variable_index(a.name) != j)
                lhs.fail("parameters must be x0, x1, ... in order");
        }
        if (sys.find(head.name)) lhs.fail("duplicate equation '" + head.name + "'");
        if (sys.alphabet.find(head.name)) lhs.fail("'" + head.name + "' is declared as a symbol");
        if (variable_index(head.name)) lhs.fail("'" + head.name + "' is a variable name");
        sys.equations.push_back({head.name, head.args.size(), {}});
        bodies.push_back({st.text.substr(eq + 1), st.line});
    }
    if (sys.equations.empty()) throw Error(ErrorKind::syntax, "system has no equations");
    if (sys.equations[0].arity != 0)
        throw Error(ErrorKind::principal_arity,
                    "principal equation " + sys.equations[0].name + " must have arity 0", bodies[0].line);

    for (std::size_t i = 0; i < sys.equations.size(); ++i) {
        TermLexer lex(bodies[i].body, bodies[i].line);
        RawTerm raw = lex.term();
        if (!lex.at_end()) lex.fail("unexpected text after term");
        const std::size_t arity = sys.equations[i].arity;
        const std::size_t line = bodies[i].line;
        auto where = [&](const std::string& msg) { return "line " + std::to_string(line) + ": " + msg; };
        auto resolve = [&](auto&& self, const RawTerm& r) -> Term {
            Term t;
            if (auto j = variable_index(r.name); j && !sys.find(r.name) && !sys.alphabet.find(r.name)) {
                if (r.call) throw Error(ErrorKind::syntax, where("variable " + r.name + " takes no arguments"), line);
                if (*j >= arity)
                    throw Error(ErrorKind::variable_out_of_range,
                                where("variable " + r.name + " out of range in " + sys.equations[i].name), line);
                t.label = Label::variable(*j);
                return t;
            }
            if (auto k = sys.find(r.name)) {
                if (r.args.size() != sys.equations[*k].arity)
                    throw Error(ErrorKind::arity_mismatch,
                                where(r.name + " expects " + std::to_string(sys.equations[*k].arity) + " arguments"), line);
                t.label = Label::function(r.name, r.args.size());
            } else if (auto s = sys.alphabet.find(r.name)) {
                if (r.args.size() != sys.alphabet.symbols[*s].arity)
                    throw Error(ErrorKind::arity_mismatch,
                                where(r.name + " has arity " + std::to_string(sys.alphabet.symbols[*s].arity)), line);
                t.label = Label::symbol(r.name, r.args.size());
            } else if (!declared) {
                sys.alphabet.symbols.push_back({r.name, r.args.size()});
                t.label = Label::symbol(r.name, r.args.size());
            } else {
                throw Error(ErrorKind::undeclared_symbol, where("undeclared symbol '" + r.name + "'"), line);
            }
            for (const auto& a : r.args) t.children.push_back(self(self, a));
            return t;
        };
        sys.equations[i].body = resolve(resolve, raw);
    }
    if (sys.alphabet.symbols.empty()) throw Error(ErrorKind::syntax, "system uses no symbols");
    return sys;
}

// --------------------------------------------------------------- format

std::string format_term(const Term& t)
{
    std::string out = t.label.name;
    if (t.children.empty()) return out;
    out += "(";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += ", ";
        out += format_term(t.children[i]);
    }
    return out + ")";
}

std::string format_system(const TreeSystem& sys)
{
    std::string out = "ops:";
    for (const auto& s : sys.alphabet.symbols) out += " " + s.name + ":" + std::to_string(s.arity);
    out += "\n";
    for (const auto& eq : sys.equations) {
        out += eq.name;
        if (eq.arity > 0) {
            out += "(";
            for (std::size_t j = 0; j < eq.arity; ++j) out += (j ? ", x" : "x") + std::to_string(j);
            out += ")";
        }
        out += " = " + format_term(eq.body) + "\n";
    }
    return out;
}

std::string format_position(const Position& p)
{
    if (p.empty()) return "e";
    std::string out;
    for (char c : p) out += std::to_string(static_cast<unsigned char>(c));
    return out;
}

namespace {

void render(const PartialTree& t, const Position& at, std::string& out)
{
    auto it = t.find(at);
    if (it == t.end()) {
        out += "_";
        return;
    }
    out += it->second.name;
    const auto arity = it->second.kind == Label::Kind::variable ? 0 : it->second.arity;
    if (arity == 0) return;
    out += "(";
    for (std::size_t j = 0; j < arity; ++j) {
        if (j) out += ", ";
        render(t, at + static_cast<char>(j), out);
    }
    out += ")";
}

void to_tree_at(const Term& t, const Position& at, PartialTree& out)
{
    out[at] = t.label;
    for (std::size_t j = 0; j < t.children.size(); ++j) to_tree_at(t.children[j], at + static_cast<char>(j), out);
}

} // namespace

std::string format_tree(const PartialTree& t)
{
    std::string out;
    render(t, Position{}, out);
    return out;
}

PartialTree to_tree(const Term& t)
{
    PartialTree out;
    to_tree_at(t, Position{}, out);
    return out;
}

// --------------------------------------------------------- substitution

namespace {

void substitute_at(const PartialTree& t, const Position& at, const SubstitutionMap& images,
                   const Position& out_at, std::optional<std::size_t> max_length, PartialTree& out)
{
    if (max_length && out_at.size() > *max_length) return;
    auto it = t.find(at);
    if (it == t.end()) return;
    const Label& label = it->second;
    const std::size_t arity = label.kind == Label::Kind::variable ? 0 : label.arity;
    auto image = label.kind == Label::Kind::variable ? images.end() : images.find(label.name);
    if (image == images.end()) {
        out[out_at] = label;
        for (std::size_t j = 0; j < arity; ++j)
            substitute_at(t, at + static_cast<char>(j), images, out_at + static_cast<char>(j), max_length, out);
        return;
    }
    for (const auto& [p, l] : image->second) {
        if (max_length && out_at.size() + p.size() > *max_length) continue;
        if (l.kind == Label::Kind::variable) {
            if (l.var >= arity)
                throw Error(ErrorKind::arity_mismatch,
                            "image of " + label.name + " uses " + l.name + " but the symbol has arity " +
                                std::to_string(arity));
            substitute_at(t, at + static_cast<char>(l.var), images, out_at + p, max_length, out);
        } else {
            out[out_at + p] = l;
        }
    }
}

} // namespace

PartialTree substitute(const PartialTree& t, const SubstitutionMap& images, std::optional<std::size_t> max_length)
{
    PartialTree out;
    substitute_at(t, Position{}, images, Position{}, max_length, out);
    return out;
}

PartialTree truncate(const PartialTree& t, std::size_t max_length)
{
    PartialTree out;
    for (const auto& [p, l] : t)
        if (p.size() <= max_length) out.emplace(p, l);
    return out;
}

bool approximates(const PartialTree& t1, const PartialTree& t2)
{
    for (const auto& [p, l] : t1) {
        auto it = t2.find(p);
        if (it == t2.end() || !(it->second == l)) return false;
    }
    return true;
}

std::vector<PartialTree> kleene_expand(const TreeSystem& sys, std::size_t depth, std::optional<std::size_t> max_length)
{
    std::vector<PartialTree> bodies;
    for (const auto& eq : sys.equations) bodies.push_back(to_tree(eq.body));
    std::vector<PartialTree> current(sys.equations.size());
    for (std::size_t d = 0; d < depth; ++d) {
        SubstitutionMap images;
        for (std::size_t k = 0; k < sys.equations.size(); ++k) images[sys.equations[k].name] = current[k];
        std::vector<PartialTree> next;
        for (const auto& body : bodies) next.push_back(substitute(body, images, max_length));
        current = std::move(next);
    }
    return current;
}

// ------------------------------------------------------------- frontier

std::vector<std::pair<Position, Label>> frontier(const PartialTree& t)
{
    std::vector<std::pair<Position, Label>> out;
    for (const auto& [p, l] : t)
        if (l.is_constant() || l.kind == Label::Kind::variable) out.emplace_back(p, l);
    return out;
}

std::vector<std::pair<Position, Label>> unresolved_leaves(const PartialTree& t)
{
    std::vector<std::pair<Position, Label>> out;
    for (const auto& [p, l] : t)
        if (l.kind == Label::Kind::function) out.emplace_back(p, l);
    return out;
}

std::vector<FrontierWord> labeled_frontier(const PartialTree& t)
{
    std::vector<FrontierWord> out;
    for (const auto& [p, l] : t) {
        if (!l.is_constant()) continue;
        FrontierWord fw{p, l, {}};
        for (std::size_t i = 0; i < p.size(); ++i) {
            auto parent = t.find(p.substr(0, i));
            fw.hat.emplace_back(parent == t.end() ? "?" : parent->second.name, static_cast<unsigned char>(p[i]));
        }
        out.push_back(std::move(fw));
    }
    return out;
}

// ----------------------------------------------------------- binarize

Term binarize_term(const Term& t, const RankedAlphabet& alphabet)
{
    if (t.label.kind != Label::Kind::symbol) {
        Term out{t.label, {}};
        for (const auto& c : t.children) out.children.push_back(binarize_term(c, alphabet));
        return out;
    }
    const std::size_t k = t.children.size();
    if (k == 0) return Term{Label::symbol("a", 0), {}};
    if (k == 1) return binarize_term(t.children[0], alphabet);
    Term comb = binarize_term(t.children[k - 1], alphabet);
    for (std::size_t i = k - 1; i-- > 0;)
        comb = Term{Label::symbol("g", 2), {binarize_term(t.children[i], alphabet), std::move(comb)}};
    return comb;
}

TreeSystem binarize(const TreeSystem& sys)
{
    TreeSystem out;
    out.alphabet.symbols = {{"g", 2}, {"a", 0}};
    for (const auto& eq : sys.equations) out.equations.push_back({eq.name, eq.arity, binarize_term(eq.body, sys.alphabet)});
    return out;
}

} // namespace ordgram
