#include "subgrowth/primes.hpp"

#include "subgrowth/errors.hpp"
#include "subgrowth/numth.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace subgrowth::primes {

namespace {

void check_capacity(std::uint64_t x, const SieveConfig& config) {
    if (x > config.max_x)
        throw capacity_error("sieve capacity exceeded: x = " + std::to_string(x) + " is above the limit " +
                             std::to_string(config.max_x));
}

std::vector<std::uint64_t> simple_sieve(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

} // namespace

void for_each_prime(std::uint64_t x, const std::function<void(std::uint64_t)>& fn, const SieveConfig& config) {
    if (x < 2) throw domain_error("sieve: x must be >= 2, got " + std::to_string(x));
    check_capacity(x, config);
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (root > 0 && root * root > x) --root;
    while ((root + 1) * (root + 1) <= x) ++root;
    const auto base = simple_sieve(root + 1);
    for (std::uint64_t p : base) {
        if (p > x) return;
        fn(p);
    }
    const std::uint64_t seg = std::max<std::uint64_t>(config.segment_size, 64);
    std::vector<bool> is_composite;
    for (std::uint64_t lo = root + 2; lo <= x; lo += seg) {
        const std::uint64_t hi = std::min(x, lo + seg - 1);
        is_composite.assign(hi - lo + 1, false);
        for (std::uint64_t p : base) {
            if (p * p > hi) break;
            std::uint64_t start = ((lo + p - 1) / p) * p;
            if (start < p * p) start = p * p;
            for (std::uint64_t j = start; j <= hi; j += p) is_composite[j - lo] = true;
        }
        for (std::uint64_t i = lo; i <= hi; ++i)
            if (!is_composite[i - lo]) fn(i);
        if (hi == x) break; // avoid overflow of lo near the top of the range
    }
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t x, const SieveConfig& config) {
    std::vector<std::uint64_t> out;
    if (x >= 3) out.reserve(static_cast<std::size_t>(static_cast<double>(x) / std::log(static_cast<double>(x))));
    for_each_prime(x, [&](std::uint64_t p) { out.push_back(p); }, config);
    return out;
}

std::vector<std::uint64_t> residue_counts(std::uint64_t x, std::uint64_t q, const SieveConfig& config) {
    if (q < 1) throw domain_error("residue_counts: modulus must be >= 1");
    std::vector<std::uint64_t> counts(q, 0);
    for_each_prime(x, [&](std::uint64_t p) { ++counts[p % q]; }, config);
    return counts;
}

namespace {

PrimeWindowStats stats_from_primes(const std::vector<std::uint64_t>& primes, std::uint64_t x, std::uint64_t q,
                                   bool keep_list) {
    PrimeWindowStats s;
    s.x = x;
    s.q = q;
    for (std::uint64_t p : primes) {
        if (p % q != 1) continue;
        ++s.L;
        s.M += std::log(static_cast<double>(p));
        if (keep_list) s.primes_found.push_back(p);
    }
    const double phi = static_cast<double>(q - 1); // q is prime
    s.expected_L = static_cast<double>(x) / (phi * std::log(static_cast<double>(x)));
    s.expected_M = static_cast<double>(x) / phi;
    s.rel_dev_L = std::abs(static_cast<double>(s.L) - s.expected_L) / s.expected_L;
    s.rel_dev_M = std::abs(s.M - s.expected_M) / s.expected_M;
    return s;
}

} // namespace

PrimeWindowStats primes_in_ap(std::uint64_t x, std::uint64_t q, const SieveConfig& config) {
    if (!numth::is_prime(q)) throw domain_error("primes_in_ap: q = " + std::to_string(q) + " is not prime");
    if (q >= x) throw domain_error("primes_in_ap: require q < x");
    return stats_from_primes(sieve_primes(x, config), x, q, /*keep_list=*/true);
}

BvScanResult bv_window_scan(std::uint64_t x, double rho, unsigned threads, const SieveConfig& config) {
    if (!(rho > 0.0 && rho <= 0.5))
        throw domain_error("bv scan: rho must lie in (0, 1/2], got " + std::to_string(rho));
    if (x < 2) throw domain_error("bv scan: x must be >= 2");

    BvScanResult result;
    result.x = x;
    result.rho = rho;
    const double lx = std::log(static_cast<double>(x));
    result.window_hi = std::pow(static_cast<double>(x), rho);
    result.window_lo = result.window_hi / lx;

    // Candidate moduli: primes in the closed integer range intersected with
    // the open real window.
    std::vector<std::uint64_t> candidates;
    const auto lo = static_cast<std::uint64_t>(std::ceil(result.window_lo));
    const auto hi = static_cast<std::uint64_t>(std::floor(result.window_hi));
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
        if (static_cast<double>(n) <= result.window_lo) continue;
        if (static_cast<double>(n) >= result.window_hi) continue;
        if (numth::is_prime(n)) candidates.push_back(n);
    }
    if (candidates.empty()) {
        std::ostringstream os;
        os << "window contains no prime: (" << result.window_lo << ", " << result.window_hi << ")";
        throw domain_error(os.str());
    }

    const auto primes = sieve_primes(x, config);
    result.table.resize(candidates.size());
    auto run_range = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < candidates.size(); i += stride) {
            const auto s = stats_from_primes(primes, x, candidates[i], /*keep_list=*/false);
            result.table[i] = {s.q, s.L, s.M, s.expected_L, s.expected_M, s.rel_dev_L, s.rel_dev_M};
        }
    };
    if (threads <= 1 || candidates.size() < 2) {
        run_range(0, 1);
    } else {
        const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(candidates.size()));
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(run_range, t, n);
        for (auto& th : pool) th.join();
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < result.table.size(); ++i) {
        const double a = std::max(result.table[i].rel_dev_L, result.table[i].rel_dev_M);
        const double b = std::max(result.table[best].rel_dev_L, result.table[best].rel_dev_M);
        if (a < b) best = i; // ties keep the smaller q (table is ascending)
    }
    result.best_q = result.table[best].q;
    result.best = stats_from_primes(primes, x, result.best_q, /*keep_list=*/true);
    return result;
}

GrhComparison pi_k_cyclotomic(std::uint64_t x, std::uint64_t m, std::uint64_t q, const SieveConfig& config) {
    if (m < 1) throw domain_error("pi_k: conductor m must be >= 1");
    if (!numth::is_prime(q)) throw domain_error("pi_k: q = " + std::to_string(q) + " is not prime");
    if (numth::gcd(q, m) != 1)
        throw domain_error("pi_k: gcd(q, m) must be 1 so the field of q-th roots of unity stays disjoint "
                           "from the field of m-th roots of unity; got q = " +
                           std::to_string(q) + ", m = " + std::to_string(m));
    if (x < 2) throw domain_error("pi_k: x must be >= 2");

    GrhComparison g;
    g.x = x;
    g.conductor_m = m;
    g.q = q;
    g.field_degree = numth::euler_phi(m);
    const std::uint64_t modulus = q * m; // lcm, the factors are coprime
    for_each_prime(x, [&](std::uint64_t p) {
        if (p % modulus == 1) ++g.observed;
    }, config);
    const double lx = std::log(static_cast<double>(x));
    g.main_term = static_cast<double>(x) /
                  (static_cast<double>(g.field_degree) * static_cast<double>(q - 1) * lx);
    g.deviation = std::abs(static_cast<double>(g.observed) - g.main_term);
    g.grh_envelope = std::sqrt(static_cast<double>(x)) * lx * std::log(static_cast<double>(q));
    g.envelope_ratio = g.deviation / g.grh_envelope;
    return g;
}

} // namespace subgrowth::primes
