#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordgram {

enum class ErrorKind {
    syntax,
    exponent_out_of_range,
    epsilon_production,
    unknown_terminal,
    unknown_nonterminal,
    empty_pump,
    empty_word,
    u0_unavailable,
    base_too_small,
    not_a_member,
    arity_mismatch,
    undeclared_symbol,
    variable_out_of_range,
    principal_arity,
    alphabet_mismatch,
    invalid_argument,
};

const char* to_string(ErrorKind kind);

/// Error raised by every library operation. `position()` is a byte offset
/// for ordinal/word parsing and a 1-based line number for file formats;
/// it is meaningful only for the kinds that carry a location.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::size_t position = 0)
        : std::runtime_error(what), kind_(kind), position_(position) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }

private:
    ErrorKind kind_;
    std::size_t position_;
};

} // namespace ordgram
