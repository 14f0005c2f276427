#include "ordgram/error.hpp"

namespace ordgram {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::syntax: return "syntax error";
    case ErrorKind::exponent_out_of_range: return "exponent out of range";
    case ErrorKind::epsilon_production: return "epsilon production";
    case ErrorKind::unknown_terminal: return "unknown terminal";
    case ErrorKind::unknown_nonterminal: return "unknown nonterminal";
    case ErrorKind::empty_pump: return "empty pump";
    case ErrorKind::empty_word: return "empty word";
    case ErrorKind::u0_unavailable: return "u0 unavailable";
    case ErrorKind::base_too_small: return "base too small";
    case ErrorKind::not_a_member: return "not a member";
    case ErrorKind::arity_mismatch: return "arity mismatch";
    case ErrorKind::undeclared_symbol: return "undeclared symbol";
    case ErrorKind::variable_out_of_range: return "variable out of range";
    case ErrorKind::principal_arity: return "principal arity";
    case ErrorKind::alphabet_mismatch: return "alphabet mismatch";
    case ErrorKind::invalid_argument: return "invalid argument";
    }
    return "error";
}

} // namespace ordgram
