#pragma once

#include <stdexcept>
#include <string>

namespace subgrowth {

/// Rejection of an argument that violates a documented precondition or
/// domain constraint. The CLI maps this to exit code 2.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Rejection of an input that is valid but exceeds a configured capacity
/// (sieve bound, oracle size, exhaustive-search range). Exit code 3.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace subgrowth
