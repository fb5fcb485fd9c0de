#pragma once

#include "subgrowth/abelian.hpp"
#include "subgrowth/bigint.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace subgrowth::extremal {

/// A configuration achieving (or bounding) the extremal subgroup count:
/// disjoint prime sets P-, P+ and a budget r with r * prod(P- u P+) <= n,
/// where the group is prod_{p in P-} C_{p-1} x prod_{p in P+} C_{p+1}.
struct ExtremalWitness {
    BigInt n;
    std::vector<std::uint64_t> p_minus; // sorted ascending
    std::vector<std::uint64_t> p_plus;  // sorted ascending
    BigInt r;
    BigInt count;
    double normalized = 0.0; // log(count) loglog(n) / (log n)^2; 0 when n < 3
};

struct ExtremalLimits {
    BigInt max_n = 100000;
};

/// log(value) * loglog(n) / (log n)^2, natural logs. Requires n >= 3 and
/// value >= 1.
double normalized_growth(const BigInt& n, const BigInt& value);

/// True maximum over all disjoint prime supports with prod <= n and all
/// admissible r, by exhaustive depth-first search. Ties resolved by smaller
/// support product, then lexicographically smaller (p_minus, p_plus), then
/// smaller r. n above the configured capacity is rejected with a pointer to
/// the heuristic search.
ExtremalWitness extremal_f(const BigInt& n, const ExtremalLimits& limits = {});

/// Beam-limited version of the same level-by-level search. The returned
/// witness always revalidates, so its count is a certified lower bound on
/// f(n). Candidate supports grow one signed prime at a time and clustered
/// seeds (primes = +-1 mod a small q, so the cyclic factors share the factor
/// q) are injected at every level; with the beam wide enough to hold every
/// frontier the result equals extremal_f.
ExtremalWitness extremal_f_heuristic(const BigInt& n, std::size_t beam_width);

/// The group named by a witness.
abelian::FiniteAbelianGroup witness_group(const ExtremalWitness& w);

/// Recomputes count from (p_minus, p_plus, r) and rechecks the budget
/// constraint.
bool revalidate(const ExtremalWitness& w);

/// Empirical report against the abelian growth bound
/// s_r(A) <= n^{(gamma + o(1)) log n / loglog n}: n is set to the smallest
/// hypothesis-compatible value r * |A|^R, the normalized value and the target
/// gamma for this R are reported, and no verdict is asserted.
struct GrowthBoundReport {
    std::string group_signature;
    BigInt r;
    double R = 0.0;
    unsigned mult_bound = 0;
    double log_n = 0.0;
    BigInt subgroup_count;  // s_r of the group
    double actual = 0.0;    // normalized growth of the count at n
    double target_gamma = 0.0;
    double ratio = 0.0;     // actual / target_gamma
};

/// Throws domain_error when a cyclic factor order repeats more than
/// mult_bound times (naming the order), or when n = r |A|^R < 3.
GrowthBoundReport check_growth_bound(const abelian::FiniteAbelianGroup& group, const BigInt& r, double R,
                                     unsigned mult_bound);

} // namespace subgrowth::extremal
