#pragma once

#include "subgrowth/bigint.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace subgrowth::abelian {

/// Weakly decreasing positive exponents of the cyclic p-power factors.
using Partition = std::vector<unsigned>;

/// A finite abelian group, held as prime-indexed partitions. A flat list of
/// cyclic factor orders C_{x_1} x ... x C_{x_t} can be supplied instead and
/// is converted; that multiset (with trivial C_1 factors dropped) is kept so
/// multiplicity hypotheses on the presentation can be checked later. Groups
/// built directly from partitions get the primary cyclic factors p^{lambda_i}
/// as their multiset.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() : order_(1) {} // trivial group

    static FiniteAbelianGroup from_cyclic_orders(const std::vector<std::uint64_t>& orders);
    static FiniteAbelianGroup from_primary_parts(std::map<std::uint64_t, Partition> parts);

    const std::map<std::uint64_t, Partition>& primary_parts() const { return primary_; }
    const std::vector<std::uint64_t>& cyclic_factors() const { return cyclic_; }
    const BigInt& order() const { return order_; }
    bool is_trivial() const { return primary_.empty(); }
    std::size_t num_cyclic_factors() const { return cyclic_.size(); }

    /// Canonical key, e.g. "2^[2,1].3^[1]"; identical iff the groups are
    /// isomorphic.
    std::string signature() const;

private:
    std::map<std::uint64_t, Partition> primary_;
    std::vector<std::uint64_t> cyclic_; // sorted, C_1 dropped
    BigInt order_;
};

/// Number of k-dimensional subspaces of an m-dimensional vector space over a
/// field with q elements, prod_{i=0}^{k-1} (q^{m-i}-1)/(q^{k-i}-1), exactly.
/// k > m yields 0; q < 2 is rejected.
BigInt gaussian_binomial(long long m, long long k, const BigInt& q);

/// Subgroup counts of an abelian p-group of type lambda, by index exponent:
/// entry c is the number of subgroups of index p^c, for c = 0..|lambda|.
/// Evaluated with the classical type-counting formula
///   prod_i p^{mu'_{i+1} (lambda'_i - mu'_i)} * gauss(lambda'_i - mu'_{i+1},
///                                                    mu'_i - mu'_{i+1}, p)
/// summed over subpartitions mu of the co-size.
std::vector<BigInt> subgroup_counts_by_index_exponent(const Partition& lambda, std::uint64_t p);

/// Exact number of subgroups of the given index; 0 when the index does not
/// divide the order. Multiplicative across the coprime primary parts.
BigInt count_subgroups_of_index(const FiniteAbelianGroup& group, const BigInt& index);

/// Number of subgroups of index at most r.
BigInt s_r(const FiniteAbelianGroup& group, const BigInt& r);

/// All divisors of the order that carry subgroups, sorted ascending, with the
/// cumulative subgroup counts. s_r is a binary search in this table.
struct DivisorProfile {
    std::vector<BigInt> divisors;
    std::vector<BigInt> cumulative;
    BigInt count_at_most(const BigInt& r) const;
    BigInt total() const { return cumulative.empty() ? BigInt(1) : cumulative.back(); }
};
DivisorProfile divisor_profile(const FiniteAbelianGroup& group);

struct OracleLimits {
    BigInt max_order = 1000000;
    std::size_t max_factors = 6;
};

/// Independent count of subgroups of the given index: enumerates
/// upper-triangular Hermite-normal-form sublattices of Z^t with the given
/// determinant and keeps those containing the relation lattice spanned by
/// x_i e_i. Rejects groups beyond the configured limits.
BigInt oracle_count_subgroups(const FiniteAbelianGroup& group, const BigInt& index,
                              const OracleLimits& limits = {});

} // namespace subgrowth::abelian
