#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ordgram::cli {

struct CommandResult {
    /// 0 on success/PASS, 1 on FAIL, 2 on usage or input errors.
    int exit_code = 0;
    std::string out;
    std::string err;
};

struct Limits {
    std::size_t maxlen = 12;
    std::size_t cap = 20000;
    std::size_t depth = 6;
};

CommandResult cmd_synth(const std::string& expression);
CommandResult cmd_analyze(const std::string& grammar_text);
CommandResult cmd_enumerate(const std::string& grammar_text, const Limits& limits = {});
CommandResult cmd_rank(const std::string& synthesized_text, const std::string& word);
CommandResult cmd_check(const std::string& grammar_text, const Limits& limits = {});

enum class TranslateMode { labeled, frontier, system };
CommandResult cmd_translate(const std::string& system_text, TranslateMode mode, bool binarize, bool normalize);
CommandResult cmd_verify(const std::string& system_text, const Limits& limits,
                         const std::optional<std::string>& grammar_text = std::nullopt);

/// Full command line without the program name; reads and writes files.
CommandResult run(const std::vector<std::string>& args);

} // namespace ordgram::cli
