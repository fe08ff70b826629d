#ifndef MEXT_ERROR_HPP
#define MEXT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mext {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing values from incompatible variable contexts or scalar fields.
struct ContextError : Error {
    explicit ContextError(const std::string& msg) : Error(msg) {}
};

// Invalid mathematical input (zero polynomial where nonzero required, etc).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A structural invariant failed to hold; always indicates a bug.
struct InvariantError : Error {
    explicit InvariantError(const std::string& msg) : Error(msg) {}
};

// Valid input outside the supported range of an operation.
struct UnsupportedError : Error {
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

} // namespace mext

#endif
