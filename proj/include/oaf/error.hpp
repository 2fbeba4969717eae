#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace oaf {

enum class ErrorKind {
    invalid_order,
    unsupported_modulus,
    arity,
    improper_ideal,
    not_maximal,
    cross_ring,
    resource_limit,
    ring_axiom,
    module_axiom,
    module_mismatch,
    invalid_argument,
    syntax,
    semantic,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::invalid_order: return "invalid-order";
        case ErrorKind::unsupported_modulus: return "unsupported-modulus";
        case ErrorKind::arity: return "arity";
        case ErrorKind::improper_ideal: return "improper-ideal";
        case ErrorKind::not_maximal: return "not-maximal";
        case ErrorKind::cross_ring: return "cross-ring";
        case ErrorKind::resource_limit: return "resource-limit";
        case ErrorKind::ring_axiom: return "ring-axiom";
        case ErrorKind::module_axiom: return "module-axiom";
        case ErrorKind::module_mismatch: return "module-mismatch";
        case ErrorKind::invalid_argument: return "invalid-argument";
        case ErrorKind::syntax: return "syntax";
        case ErrorKind::semantic: return "semantic";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised when a computation would exceed one of the Config bounds.
class ResourceLimitError : public Error {
public:
    ResourceLimitError(std::string bound_name, std::uint64_t bound, std::uint64_t requested)
        : Error(ErrorKind::resource_limit,
                bound_name + " exceeded (limit " + std::to_string(bound) + ", requested " +
                    std::to_string(requested) + ")"),
          bound_name_(std::move(bound_name)),
          bound_(bound),
          requested_(requested) {}

    const std::string& bound_name() const noexcept { return bound_name_; }
    std::uint64_t bound() const noexcept { return bound_; }
    std::uint64_t requested() const noexcept { return requested_; }

private:
    std::string bound_name_;
    std::uint64_t bound_;
    std::uint64_t requested_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& msg)
        : Error(ErrorKind::syntax,
                std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace oaf
