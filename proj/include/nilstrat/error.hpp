#ifndef NILSTRAT_ERROR_HPP
#define NILSTRAT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace nilstrat {

/// Error category. The CLI prints `<kind>: <message>` on failure, so the
/// kind strings are part of the command-line contract.
enum class ErrorKind {
    invalid_part,
    incomparable_sizes,
    empty_input,
    dimension_mismatch,
    domain_mismatch,
    not_square,
    not_nilpotent,
    not_unipotent,
    unsupported_domain,
    singular,
    size_mismatch,
    unknown_point,
    model_violation,
    resource,
    invalid_argument,
    parse,
    io,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_part: return "invalid-part";
    case ErrorKind::incomparable_sizes: return "incomparable-sizes";
    case ErrorKind::empty_input: return "empty-input";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::domain_mismatch: return "domain-mismatch";
    case ErrorKind::not_square: return "not-square";
    case ErrorKind::not_nilpotent: return "not-nilpotent";
    case ErrorKind::not_unipotent: return "not-unipotent";
    case ErrorKind::unsupported_domain: return "unsupported-domain";
    case ErrorKind::singular: return "singular";
    case ErrorKind::size_mismatch: return "size-mismatch";
    case ErrorKind::unknown_point: return "unknown-point";
    case ErrorKind::model_violation: return "model-violation";
    case ErrorKind::resource: return "resource";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::parse: return "parse";
    case ErrorKind::io: return "io";
    }
    return "error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), m_kind(kind) {}

    ErrorKind kind() const noexcept { return m_kind; }

private:
    ErrorKind m_kind;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace nilstrat

#endif
