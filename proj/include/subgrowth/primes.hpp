#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace subgrowth::primes {

struct SieveConfig {
    std::uint64_t max_x = 1000000000; // capacity guard
    std::uint64_t segment_size = 1u << 22;
};

/// Calls fn(p) for every prime p <= x in ascending order. Segmented; exact.
void for_each_prime(std::uint64_t x, const std::function<void(std::uint64_t)>& fn,
                    const SieveConfig& config = {});

/// Sorted list of all primes <= x. x < 2 or x above capacity is rejected.
std::vector<std::uint64_t> sieve_primes(std::uint64_t x, const SieveConfig& config = {});

/// Counts of primes p <= x by residue class mod q (index p % q), with the
/// primes dividing q landing in their own residue classes. Used by the
/// partition consistency checks.
std::vector<std::uint64_t> residue_counts(std::uint64_t x, std::uint64_t q, const SieveConfig& config = {});

/// The primes p <= x with p = 1 (mod q), their count L, log-weight sum M, and
/// the deviation from the expected main terms x/(phi(q) log x) and x/phi(q).
struct PrimeWindowStats {
    std::uint64_t x = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> primes_found;
    std::uint64_t L = 0;
    double M = 0.0;
    double expected_L = 0.0;
    double expected_M = 0.0;
    double rel_dev_L = 0.0;
    double rel_dev_M = 0.0;
};

PrimeWindowStats primes_in_ap(std::uint64_t x, std::uint64_t q, const SieveConfig& config = {});

struct BvScanRow {
    std::uint64_t q = 0;
    std::uint64_t L = 0;
    double M = 0.0;
    double expected_L = 0.0;
    double expected_M = 0.0;
    double rel_dev_L = 0.0;
    double rel_dev_M = 0.0;
};

struct BvScanResult {
    std::uint64_t x = 0;
    double rho = 0.0;
    double window_lo = 0.0; // x^rho / log x
    double window_hi = 0.0; // x^rho
    std::uint64_t best_q = 0;
    PrimeWindowStats best;  // fully populated stats for best_q
    std::vector<BvScanRow> table; // ascending q
};

/// Evaluates primes_in_ap(x, q) for every prime q strictly inside the open
/// window (x^rho/log x, x^rho) and returns the q minimizing
/// max(rel_dev_L, rel_dev_M), ties to the smaller q. An empty window is a
/// domain rejection reporting the endpoints.
BvScanResult bv_window_scan(std::uint64_t x, double rho, unsigned threads = 1,
                            const SieveConfig& config = {});

/// Comparison of the prime count under the joint congruence p = 1 (mod q),
/// p = 1 (mod m) against the main term x/(phi(m) phi(q) log x). For the
/// cyclotomic field of m-th roots of unity, splitting completely is exactly
/// the second congruence; gcd(q, m) = 1 keeps the two conditions disjoint.
struct GrhComparison {
    std::uint64_t x = 0;
    std::uint64_t conductor_m = 0;
    std::uint64_t q = 0;
    std::uint64_t field_degree = 0; // phi(m)
    std::uint64_t observed = 0;
    double main_term = 0.0;
    double deviation = 0.0;
    double grh_envelope = 0.0; // sqrt(x) log x log q
    double envelope_ratio = 0.0; // deviation / grh_envelope
};

GrhComparison pi_k_cyclotomic(std::uint64_t x, std::uint64_t m, std::uint64_t q,
                              const SieveConfig& config = {});

} // namespace subgrowth::primes
