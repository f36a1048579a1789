#pragma once

#include <stdexcept>
#include <string>

namespace rdt {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mismatched vector/matrix dimensions or malformed shapes.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// A configured resource cap was exceeded (rank limit, group closure cap).
struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

/// Input data violates a mathematical precondition of the operation.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

}  // namespace rdt
