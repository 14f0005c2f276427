#include "ordgram/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "ordgram/cnf_ordinal.hpp"
#include "ordgram/error.hpp"
#include "ordgram/grammar.hpp"
#include "ordgram/lexorder.hpp"
#include "ordgram/synthesis.hpp"
#include "ordgram/translate.hpp"
#include "ordgram/tree_system.hpp"

namespace ordgram::cli {

namespace {

CommandResult failure(const Error& e)
{
    return {2, {}, std::string("error[") + to_string(e.kind()) + "]: " + e.what() + "\n"};
}

std::string show(const TerminalAlphabet& a, const Word& w)
{
    return w.empty() ? "eps" : a.format(w);
}

} // namespace

CommandResult cmd_synth(const std::string& expression)
{
    try {
        const auto sg = from_cnf(parse_ordinal(expression));
        return {0, format_synthesized(sg) + "# order_type: " + format_ordinal(sg.order_type) + "\n", {}};
    } catch (const Error& e) {
        return failure(e);
    }
}

CommandResult cmd_analyze(const std::string& grammar_text)
{
    try {
        const Grammar g = normalize(parse_grammar(grammar_text));
        std::ostringstream out;
        out << "start: " << g.name(g.start) << "\n";
        if (g.is_canonical_empty()) {
            out << "language: empty language\n";
            return {0, out.str(), {}};
        }
        if (g.empty_word) {
            out << "language: empty word only\n";
            return {0, out.str(), {}};
        }
        for (const auto& r : analyze(g)) {
            out << "\n[" << r.name << "]\n";
            out << "class: " << r.class_id << "\n";
            out << "height: " << r.height << "\n";
            out << "recursive: " << (r.recursive ? "yes" : "no") << "\n";
            if (r.pump_word) out << "pump_word: " << g.alphabet.format(*r.pump_word) << "\n";
            if (r.u0) out << "u0: " << g.alphabet.format(*r.u0) << "\n";
            if (r.pump_error) out << "pump_error: " << *r.pump_error << "\n";
            out << "bound: " << format_ordinal(CnfOrdinal::omega_tower(r.height)) << "\n";
        }
        out << "\nstart_bound: " << format_ordinal(height_bound(g, g.start)) << "\n";
        return {0, out.str(), {}};
    } catch (const Error& e) {
        return failure(e);
    }
}

CommandResult cmd_enumerate(const std::string& grammar_text, const Limits& limits)
{
    try {
        const Grammar g = normalize(parse_grammar(grammar_text));
        const auto en = enumerate_words(g, limits.maxlen, limits.cap);
        std::string out;
        for (const auto& w : en.words) out += show(g.alphabet, w) + "\n";
        return {0, out, en.truncated ? "warning: enumeration truncated at the cap\n" : ""};
    } catch (const Error& e) {
        return failure(e);
    }
}

CommandResult cmd_rank(const std::string& synthesized_text, const std::string& word)
{
    try {
        const auto sg = parse_synthesized(synthesized_text);
        const Word w = sg.grammar.alphabet.parse_word(word);
        return {0, format_ordinal(rank(sg, w)) + "\n", {}};
    } catch (const Error& e) {
        return failure(e);
    }
}

CommandResult cmd_check(const std::string& grammar_text, const Limits& limits)
{
    try {
        const Grammar g = normalize(parse_grammar(grammar_text));
        Bounds bounds;
        bounds.maxlen = limits.maxlen;
        bounds.cap = limits.cap;
        auto report = check_prefix(g, bounds);
        if (report.clean()) {
            auto probes = check_wellorder_probes(g, bounds);
            report.violations = std::move(probes.violations);
            report.truncated = report.truncated || probes.truncated;
        }
        std::ostringstream out;
        out << (report.clean() ? "PASS" : "FAIL") << "\n";
        for (const auto& v : report.violations)
            out << v.kind << " " << v.nonterminal << ": " << show(g.alphabet, v.first) << " | "
                << show(g.alphabet, v.second) << "  (" << v.detail << ")\n";
        if (report.truncated) out << "note: enumeration truncated at the cap\n";
        return {report.clean() ? 0 : 1, out.str(), {}};
    } catch (const Error& e) {
        return failure(e);
    }
}

CommandResult cmd_translate(const std::string& system_text, TranslateMode mode, bool binarize_first, bool normalize_out)
{
    try {
        TreeSystem sys = parse_system(system_text);
        if (binarize_first) sys = binarize(sys);
        if (mode == TranslateMode::system) return {0, format_system(sys), {}};
        Grammar g = mode == TranslateMode::labeled ? build_labeled_grammar(sys) : build_frontier_grammar(sys);
        if (normalize_out) g = normalize(g);
        return {0, format_grammar(g), {}};
    } catch (const Error& e) {
        return failure(e);
    }
}

CommandResult cmd_verify(const std::string& system_text, const Limits& limits,
                         const std::optional<std::string>& grammar_text)
{
    try {
        const TreeSystem sys = parse_system(system_text);
        std::optional<Grammar> replacement;
        if (grammar_text) replacement = parse_grammar(*grammar_text);
        const auto report = verify_translation(sys, limits.depth, limits.maxlen, replacement ? &*replacement : nullptr);
        std::ostringstream out;
        out << (report.pass ? "PASS" : "FAIL") << "\n";
        out << "words_checked: " << report.words_checked << "\n";
        for (const auto& d : report.discrepancies)
            out << d.kind << " " << d.nonterminal << ": " << (d.word.empty() ? "eps" : d.word) << "\n";
        return {report.pass ? 0 : 1, out.str(), {}};
    } catch (const Error& e) {
        return failure(e);
    }
}

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::invalid_argument, "cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::invalid_argument, "cannot write '" + path + "'");
    out << text;
}

} // namespace

CommandResult run(const std::vector<std::string>& args)
{
    CLI::App app{"Ordinal grammars, Cantor normal forms and frontier translation", "ordgram"};
    app.require_subcommand(1);
    Limits limits;
    std::string out_path, input, word, grammar_path;
    bool labeled = false, frontier_flag = false, binarize_flag = false, normalize_flag = false;

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out,-o", out_path, "Write the result to a file"); };
    auto add_maxlen = [&](CLI::App* sub) {
        sub->add_option("--maxlen", limits.maxlen, "Maximal word length")->check(CLI::Range(0, 64))->capture_default_str();
    };
    auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--cap", limits.cap, "Maximal number of words per nonterminal")
            ->check(CLI::Range(1, 10000000))
            ->capture_default_str();
    };

    auto* synth = app.add_subcommand("synth", "Synthesize an ordinal grammar for an ordinal expression");
    synth->add_option("ordinal", input, "Ordinal expression, e.g. \"w^w + 2\"")->required();
    add_out(synth);

    auto* analyze_cmd = app.add_subcommand("analyze", "Classes, heights, pump words and bounds of a grammar");
    analyze_cmd->add_option("grammar", input, "Grammar file")->required();
    add_out(analyze_cmd);

    auto* enumerate = app.add_subcommand("enumerate", "List the words of L(G) up to maxlen in lexicographic order");
    enumerate->add_option("grammar", input, "Grammar file")->required();
    add_maxlen(enumerate);
    add_cap(enumerate);
    add_out(enumerate);

    auto* rank_cmd = app.add_subcommand("rank", "Ordinal position of a word in a synthesized grammar");
    rank_cmd->add_option("grammar", input, "Synthesized grammar file with a recipe line")->required();
    rank_cmd->add_option("word", word, "Word, e.g. 11010")->required();

    auto* check = app.add_subcommand("check", "Bounded prefix and well-order probes");
    check->add_option("grammar", input, "Grammar file")->required();
    add_maxlen(check);
    add_cap(check);

    auto* translate = app.add_subcommand("translate", "Grammar for the (labeled) frontier of a tree system");
    translate->add_option("system", input, "System file")->required();
    auto* lab = translate->add_flag("--labeled", labeled, "Emit G_L");
    auto* fro = translate->add_flag("--frontier", frontier_flag, "Emit G' (default)");
    lab->excludes(fro);
    translate->add_flag("--binarize", binarize_flag, "Binarize the system first; alone, emit the binarized system");
    translate->add_flag("--normalize", normalize_flag, "Normalize the emitted grammar");
    add_out(translate);

    auto* verify = app.add_subcommand("verify", "Compare Kleene iterates with bounded G_L derivations");
    verify->add_option("system", input, "System file")->required();
    verify->add_option("--depth", limits.depth, "Kleene depth")->check(CLI::Range(0, 64))->capture_default_str();
    verify->add_option("--maxlen", limits.maxlen, "Maximal word length")->check(CLI::Range(0, 64))->default_val(12)->capture_default_str();
    verify->add_option("--grammar", grammar_path, "Use this grammar instead of the constructed G_L");

    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 2, out.str(), err.str()};
    }

    CommandResult result;
    try {
        if (synth->parsed()) {
            result = cmd_synth(input);
            if (result.exit_code == 0 && !out_path.empty()) {
                write_file(out_path, result.out);
                const auto at = result.out.rfind("# order_type: ");
                result.out = "order_type: " + result.out.substr(at + 14);
            }
            return result;
        }
        if (rank_cmd->parsed()) return cmd_rank(read_file(input), word);
        if (analyze_cmd->parsed()) result = cmd_analyze(read_file(input));
        else if (enumerate->parsed()) result = cmd_enumerate(read_file(input), limits);
        else if (check->parsed()) return cmd_check(read_file(input), limits);
        else if (verify->parsed()) {
            std::optional<std::string> replacement;
            if (!grammar_path.empty()) replacement = read_file(grammar_path);
            return cmd_verify(read_file(input), limits, replacement);
        } else if (translate->parsed()) {
            TranslateMode mode = labeled ? TranslateMode::labeled : TranslateMode::frontier;
            if (binarize_flag && !labeled && !frontier_flag) mode = TranslateMode::system;
            result = cmd_translate(read_file(input), mode, binarize_flag, normalize_flag);
        }
        if (result.exit_code == 0 && !out_path.empty()) {
            write_file(out_path, result.out);
            result.out.clear();
        }
        return result;
    } catch (const Error& e) {
        return {2, {}, std::string("error[") + to_string(e.kind()) + "]: " + e.what() + "\n"};
    }
}

} // namespace ordgram::cli
