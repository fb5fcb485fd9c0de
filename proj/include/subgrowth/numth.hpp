#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace subgrowth::numth {

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Trial-division factorization, ascending primes with multiplicities.
/// Intended for the moderate operands this project handles (cyclic factor
/// orders, moduli); cost is O(sqrt(n)/log n).
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Smallest prime strictly greater than n. Throws on 64-bit overflow.
std::uint64_t next_prime(std::uint64_t n);

} // namespace subgrowth::numth
