#include "subgrowth/abelian.hpp"

#include "subgrowth/errors.hpp"
#include "subgrowth/numth.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

namespace subgrowth::abelian {

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const std::vector<std::uint64_t>& orders) {
    FiniteAbelianGroup g;
    for (std::uint64_t x : orders) {
        if (x == 0) throw domain_error("cyclic factor order must be positive");
        if (x == 1) continue; // trivial factor
        g.cyclic_.push_back(x);
        for (const auto& [p, e] : numth::factorize(x)) g.primary_[p].push_back(e);
        g.order_ *= x;
    }
    std::sort(g.cyclic_.begin(), g.cyclic_.end());
    for (auto& [p, lambda] : g.primary_)
        std::sort(lambda.begin(), lambda.end(), std::greater<unsigned>());
    return g;
}

FiniteAbelianGroup FiniteAbelianGroup::from_primary_parts(std::map<std::uint64_t, Partition> parts) {
    FiniteAbelianGroup g;
    for (auto& [p, lambda] : parts) {
        if (!numth::is_prime(p)) throw domain_error("primary part index " + std::to_string(p) + " is not prime");
        if (lambda.empty()) throw domain_error("primary partition for p=" + std::to_string(p) + " is empty");
        std::sort(lambda.begin(), lambda.end(), std::greater<unsigned>());
        if (lambda.back() == 0) throw domain_error("primary partition parts must be positive");
        for (unsigned e : lambda) {
            g.cyclic_.push_back(ipow(BigInt(p), e).convert_to<std::uint64_t>());
            g.order_ *= ipow(BigInt(p), e);
        }
        g.primary_[p] = std::move(lambda);
    }
    std::sort(g.cyclic_.begin(), g.cyclic_.end());
    return g;
}

std::string FiniteAbelianGroup::signature() const {
    std::ostringstream os;
    bool first_p = true;
    for (const auto& [p, lambda] : primary_) {
        if (!first_p) os << ".";
        first_p = false;
        os << p << "^[";
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            if (i) os << ",";
            os << lambda[i];
        }
        os << "]";
    }
    return os.str();
}

BigInt gaussian_binomial(long long m, long long k, const BigInt& q) {
    if (m < 0 || k < 0) throw domain_error("gaussian_binomial: m and k must be nonnegative");
    if (q < 2) throw domain_error("gaussian_binomial: q must be >= 2");
    if (k > m) return 0;
    if (k == 0 || k == m) return 1;
    if (k > m - k) k = m - k;
    std::vector<BigInt> num, den;
    num.reserve(static_cast<std::size_t>(k));
    den.reserve(static_cast<std::size_t>(k));
    for (long long i = 0; i < k; ++i) {
        num.push_back(ipow(q, static_cast<std::uint64_t>(m - i)) - 1);
        den.push_back(ipow(q, static_cast<std::uint64_t>(k - i)) - 1);
    }
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(product_tree(std::move(num)), product_tree(std::move(den)), quotient,
                                     remainder);
    if (remainder != 0) throw std::logic_error("gaussian_binomial: non-integral quotient");
    return quotient;
}

namespace {

Partition conjugate(const Partition& lambda) {
    Partition conj;
    if (lambda.empty()) return conj;
    conj.assign(lambda.front(), 0);
    for (unsigned part : lambda)
        for (unsigned i = 0; i < part; ++i) ++conj[i];
    return conj;
}

// Number of subgroups of type mu inside an abelian p-group of type lambda.
BigInt subgroups_of_type(const Partition& lambda, const Partition& mu, std::uint64_t p) {
    const Partition a = conjugate(lambda);
    const Partition b = conjugate(mu);
    const BigInt bp(p);
    BigInt result = 1;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const long long ai = static_cast<long long>(a.size() > i ? a[i] : 0);
        const long long bi = static_cast<long long>(b[i]);
        const long long bnext = static_cast<long long>(i + 1 < b.size() ? b[i + 1] : 0);
        if (bi > ai) return 0; // mu does not embed
        result *= ipow(bp, static_cast<std::uint64_t>(bnext * (ai - bi)));
        result *= gaussian_binomial(ai - bnext, bi - bnext, bp);
        if (result == 0) return 0;
    }
    return result;
}

// Sum of subgroups_of_type over all partitions mu of s contained in lambda.
BigInt subgroups_of_order_exponent(const Partition& lambda, unsigned s, std::uint64_t p) {
    BigInt total = 0;
    Partition mu;
    std::function<void(unsigned, unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part,
                                                                unsigned depth) {
        if (remaining == 0) {
            total += subgroups_of_type(lambda, mu, p);
            return;
        }
        if (depth >= lambda.size()) return;
        const unsigned cap = std::min({max_part, lambda[depth], remaining});
        for (unsigned part = cap; part >= 1; --part) {
            mu.push_back(part);
            rec(remaining - part, part, depth + 1);
            mu.pop_back();
        }
    };
    if (s == 0) return 1;
    rec(s, s, 0);
    return total;
}

} // namespace

std::vector<BigInt> subgroup_counts_by_index_exponent(const Partition& lambda, std::uint64_t p) {
    Partition sorted = lambda;
    std::sort(sorted.begin(), sorted.end(), std::greater<unsigned>());
    if (!sorted.empty() && sorted.back() == 0) throw domain_error("partition parts must be positive");
    if (!numth::is_prime(p)) throw domain_error("p must be prime, got " + std::to_string(p));
    unsigned size = 0;
    for (unsigned part : sorted) size += part;
    std::vector<BigInt> counts(size + 1);
    for (unsigned c = 0; c <= size; ++c) {
        // index p^c <=> order p^{size-c}; count the cheaper side, the
        // subgroup lattice is self-dual.
        const unsigned s = std::min(c, size - c);
        counts[c] = subgroups_of_order_exponent(sorted, s, p);
    }
    return counts;
}

namespace {

struct PrimeTable {
    std::uint64_t p;
    std::vector<BigInt> counts; // by index exponent
};

std::vector<PrimeTable> prime_tables(const FiniteAbelianGroup& g) {
    std::vector<PrimeTable> tables;
    tables.reserve(g.primary_parts().size());
    for (const auto& [p, lambda] : g.primary_parts())
        tables.push_back({p, subgroup_counts_by_index_exponent(lambda, p)});
    return tables;
}

} // namespace

BigInt count_subgroups_of_index(const FiniteAbelianGroup& group, const BigInt& index) {
    if (index < 1) throw domain_error("subgroup index must be >= 1");
    if (index == 1) return 1;
    BigInt rest = index;
    BigInt result = 1;
    for (const auto& [p, lambda] : group.primary_parts()) {
        unsigned c = 0;
        while (rest % p == 0) {
            rest /= p;
            ++c;
        }
        if (c == 0) continue;
        unsigned size = 0;
        for (unsigned part : lambda) size += part;
        if (c > size) return 0;
        const auto counts = subgroup_counts_by_index_exponent(lambda, p);
        result *= counts[c];
    }
    if (rest != 1) return 0; // a prime outside the group order remains
    return result;
}

DivisorProfile divisor_profile(const FiniteAbelianGroup& group) {
    const auto tables = prime_tables(group);
    std::vector<std::pair<BigInt, BigInt>> entries; // (divisor, count)
    entries.emplace_back(1, 1);
    std::function<void(std::size_t, BigInt, BigInt)> rec = [&](std::size_t idx, BigInt divisor, BigInt count) {
        if (idx == tables.size()) return;
        rec(idx + 1, divisor, count);
        const auto& t = tables[idx];
        BigInt d = divisor;
        for (std::size_t c = 1; c < t.counts.size(); ++c) {
            d *= t.p;
            const BigInt cnt = count * t.counts[c];
            entries.emplace_back(d, cnt);
            rec(idx + 1, d, cnt);
        }
    };
    rec(0, 1, 1);
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    DivisorProfile profile;
    profile.divisors.reserve(entries.size());
    profile.cumulative.reserve(entries.size());
    BigInt running = 0;
    for (auto& [d, c] : entries) {
        running += c;
        profile.divisors.push_back(std::move(d));
        profile.cumulative.push_back(running);
    }
    return profile;
}

BigInt DivisorProfile::count_at_most(const BigInt& r) const {
    auto it = std::upper_bound(divisors.begin(), divisors.end(), r);
    if (it == divisors.begin()) return 0;
    return cumulative[static_cast<std::size_t>(it - divisors.begin()) - 1];
}

BigInt s_r(const FiniteAbelianGroup& group, const BigInt& r) {
    if (r < 1) throw domain_error("s_r: r must be >= 1");
    const auto tables = prime_tables(group);
    if (r >= group.order()) {
        // Saturated: every divisor is admitted.
        BigInt total = 1;
        for (const auto& t : tables) {
            BigInt sum = 0;
            for (const auto& c : t.counts) sum += c;
            total *= sum;
        }
        return total;
    }
    BigInt total = 0;
    std::function<void(std::size_t, const BigInt&, const BigInt&)> rec = [&](std::size_t idx, const BigInt& divisor,
                                                                             const BigInt& count) {
        if (idx == tables.size()) {
            total += count;
            return;
        }
        const auto& t = tables[idx];
        BigInt d = divisor;
        for (std::size_t c = 0; c < t.counts.size(); ++c) {
            if (c) {
                d *= t.p;
                if (d > r) break;
            }
            rec(idx + 1, d, count * t.counts[c]);
        }
    };
    rec(0, 1, 1);
    return total;
}

namespace {

// Depth-first enumeration of upper-triangular column-style HNF matrices with
// the requested determinant whose lattice contains every relation x_j e_j.
// Columns are fixed left to right; after column j the membership of x_j e_j
// only involves columns 1..j, so failures prune the subtree immediately.
// Diagonal entries must divide the matching x_j, and the undecided columns
// must still be able to absorb the rest of the determinant.
class HnfCounter {
public:
    HnfCounter(std::vector<std::int64_t> orders, std::int64_t target)
        : x_(std::move(orders)), t_(x_.size()), h_(t_, std::vector<std::int64_t>(t_, 0)) {
        divisors_.resize(t_);
        for (std::size_t j = 0; j < t_; ++j) {
            for (std::int64_t d = 1; d * d <= x_[j]; ++d) {
                if (x_[j] % d) continue;
                divisors_[j].push_back(d);
                if (d != x_[j] / d) divisors_[j].push_back(x_[j] / d);
            }
            std::sort(divisors_[j].begin(), divisors_[j].end());
        }
        suffix_.assign(t_ + 1, 1);
        for (std::size_t j = t_; j-- > 0;) suffix_[j] = suffix_[j + 1] * x_[j];
        remaining_ = target;
    }

    std::int64_t count() {
        count_ = 0;
        descend(0);
        return count_;
    }

private:
    // x_col * e_col lies in the lattice of the first (col+1) columns?
    bool contains_relation(std::size_t col) const {
        std::vector<std::int64_t> coeff(col + 1, 0);
        coeff[col] = x_[col] / h_[col][col]; // integral, diagonal divides x_col
        for (std::size_t i = col; i-- > 0;) {
            std::int64_t acc = 0;
            for (std::size_t k = i + 1; k <= col; ++k) acc += h_[i][k] * coeff[k];
            if (acc % h_[i][i]) return false;
            coeff[i] = -acc / h_[i][i];
        }
        return true;
    }

    void fill_column(std::size_t col, std::size_t row) {
        if (row == col) {
            if (contains_relation(col)) descend(col + 1);
            return;
        }
        for (std::int64_t v = 0; v < h_[row][row]; ++v) {
            h_[row][col] = v;
            fill_column(col, row + 1);
        }
        h_[row][col] = 0;
    }

    void descend(std::size_t col) {
        if (col == t_) {
            ++count_; // remaining_ == 1 is guaranteed by the suffix prune
            return;
        }
        for (std::int64_t d : divisors_[col]) {
            if (remaining_ % d) continue;
            const std::int64_t need = remaining_ / d;
            if (need > suffix_[col + 1] || suffix_[col + 1] % need) continue;
            h_[col][col] = d;
            remaining_ = need;
            fill_column(col, 0);
            remaining_ *= d;
        }
        h_[col][col] = 0;
    }

    std::vector<std::int64_t> x_;
    std::size_t t_;
    std::vector<std::vector<std::int64_t>> h_;
    std::vector<std::vector<std::int64_t>> divisors_;
    std::vector<std::int64_t> suffix_;
    std::int64_t remaining_ = 1;
    std::int64_t count_ = 0;
};

} // namespace

BigInt oracle_count_subgroups(const FiniteAbelianGroup& group, const BigInt& index, const OracleLimits& limits) {
    if (index < 1) throw domain_error("subgroup index must be >= 1");
    if (group.order() > limits.max_order)
        throw capacity_error("oracle capacity exceeded: group order " + group.order().str() +
                             " is above the configured limit " + limits.max_order.str());
    if (group.num_cyclic_factors() > limits.max_factors)
        throw capacity_error("oracle capacity exceeded: " + std::to_string(group.num_cyclic_factors()) +
                             " cyclic factors, limit is " + std::to_string(limits.max_factors));
    if (index > group.order() || group.order() % index != 0) return index == 1 ? 1 : 0;
    if (group.is_trivial()) return 1; // index == 1 at this point

    std::vector<std::int64_t> orders;
    orders.reserve(group.cyclic_factors().size());
    for (std::uint64_t x : group.cyclic_factors()) orders.push_back(static_cast<std::int64_t>(x));
    HnfCounter counter(std::move(orders), index.convert_to<std::int64_t>());
    return counter.count();
}

} // namespace subgrowth::abelian
