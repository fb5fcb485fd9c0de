#include "subgrowth/extremal.hpp"

#include "subgrowth/errors.hpp"
#include "subgrowth/numth.hpp"
#include "subgrowth/primes.hpp"
#include "subgrowth/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

namespace subgrowth::extremal {

double normalized_growth(const BigInt& n, const BigInt& value) {
    if (n < 3) throw domain_error("normalized_growth: n must be >= 3 (loglog n must be positive)");
    if (value < 1) throw domain_error("normalized_growth: value must be >= 1");
    const double ln = log_big(n);
    return log_big(value) * std::log(ln) / (ln * ln);
}

namespace {

// One signed support: primes with their sign (false = P-, true = P+).
struct Config {
    std::vector<std::pair<std::uint64_t, bool>> support; // ascending primes
    std::uint64_t prod = 1;
};

std::vector<std::uint64_t> signed_primes(const Config& c, bool plus) {
    std::vector<std::uint64_t> out;
    for (const auto& [p, s] : c.support)
        if (s == plus) out.push_back(p);
    return out;
}

abelian::FiniteAbelianGroup config_group(const Config& c) {
    std::vector<std::uint64_t> orders;
    orders.reserve(c.support.size());
    for (const auto& [p, s] : c.support) orders.push_back(s ? p + 1 : p - 1);
    return abelian::FiniteAbelianGroup::from_cyclic_orders(orders);
}

// Divisor tables are shared across every n and every search; the same group
// shape recurs constantly.
const abelian::DivisorProfile& cached_profile(const abelian::FiniteAbelianGroup& g) {
    static std::unordered_map<std::string, abelian::DivisorProfile> cache;
    auto [it, inserted] = cache.try_emplace(g.signature());
    if (inserted) it->second = abelian::divisor_profile(g);
    return it->second;
}

struct Candidate {
    Config config;
    BigInt r;
    BigInt count;
};

// Maximal count first; then the documented tie-break order.
bool better(const Candidate& a, const Candidate& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.config.prod != b.config.prod) return a.config.prod < b.config.prod;
    const auto am = signed_primes(a.config, false), bm = signed_primes(b.config, false);
    if (am != bm) return am < bm;
    const auto ap = signed_primes(a.config, true), bp = signed_primes(b.config, true);
    if (ap != bp) return ap < bp;
    return a.r < b.r;
}

// Best achievable count for a fixed support: s_r is nondecreasing in r, so
// evaluate at the full budget r_max = n / prod and then report the smallest
// r attaining that count.
Candidate evaluate(const Config& c, std::uint64_t n) {
    Candidate cand;
    cand.config = c;
    const std::uint64_t r_max = n / c.prod;
    const auto& profile = cached_profile(config_group(c));
    cand.count = profile.count_at_most(r_max);
    cand.r = 1;
    for (std::size_t i = 0; i < profile.divisors.size(); ++i) {
        if (profile.cumulative[i] == cand.count) {
            cand.r = profile.divisors[i];
            break;
        }
    }
    return cand;
}

ExtremalWitness to_witness(const Candidate& cand, const BigInt& n) {
    ExtremalWitness w;
    w.n = n;
    w.p_minus = signed_primes(cand.config, false);
    w.p_plus = signed_primes(cand.config, true);
    w.r = cand.r;
    w.count = cand.count;
    w.normalized = (n >= 3 && cand.count >= 1) ? normalized_growth(n, cand.count) : 0.0;
    return w;
}

std::uint64_t to_u64_budget(const BigInt& n) {
    if (n < 1) throw domain_error("extremal: n must be >= 1");
    return n.convert_to<std::uint64_t>();
}

} // namespace

abelian::FiniteAbelianGroup witness_group(const ExtremalWitness& w) {
    std::vector<std::uint64_t> orders;
    for (std::uint64_t p : w.p_minus) orders.push_back(p - 1);
    for (std::uint64_t p : w.p_plus) orders.push_back(p + 1);
    return abelian::FiniteAbelianGroup::from_cyclic_orders(orders);
}

bool revalidate(const ExtremalWitness& w) {
    for (std::uint64_t p : w.p_minus)
        if (!numth::is_prime(p)) return false;
    for (std::uint64_t p : w.p_plus)
        if (!numth::is_prime(p)) return false;
    std::vector<std::uint64_t> joint = w.p_minus;
    joint.insert(joint.end(), w.p_plus.begin(), w.p_plus.end());
    std::sort(joint.begin(), joint.end());
    if (std::adjacent_find(joint.begin(), joint.end()) != joint.end()) return false; // sets not disjoint
    if (w.r < 1) return false;
    BigInt budget = w.r;
    for (std::uint64_t p : joint) budget *= p;
    if (budget > w.n) return false;
    return abelian::s_r(witness_group(w), w.r) == w.count;
}

ExtremalWitness extremal_f(const BigInt& n, const ExtremalLimits& limits) {
    if (n < 1) throw domain_error("extremal_f: n must be >= 1");
    if (n > limits.max_n)
        throw capacity_error("extremal_f: n = " + n.str() + " exceeds the exhaustive-search capacity " +
                             limits.max_n.str() + "; use extremal_f_heuristic for a certified lower bound");
    const std::uint64_t budget = to_u64_budget(n);
    const auto primes = budget >= 2 ? primes::sieve_primes(budget) : std::vector<std::uint64_t>{};

    Candidate best = evaluate(Config{}, budget);
    std::vector<std::pair<std::uint64_t, bool>> support;
    auto dfs = [&](auto&& self, std::size_t first_idx, std::uint64_t prod) -> void {
        for (std::size_t i = first_idx; i < primes.size(); ++i) {
            const std::uint64_t p = primes[i];
            if (p > budget / prod) break;
            for (bool sign : {false, true}) {
                support.emplace_back(p, sign);
                Config c{support, prod * p};
                Candidate cand = evaluate(c, budget);
                if (better(cand, best)) best = cand;
                self(self, i + 1, prod * p);
                support.pop_back();
            }
        }
    };
    dfs(dfs, 0, 1);
    return to_witness(best, n);
}

ExtremalWitness extremal_f_heuristic(const BigInt& n, std::size_t beam_width) {
    if (n < 1) throw domain_error("extremal_f_heuristic: n must be >= 1");
    if (beam_width == 0) beam_width = 1;
    const std::uint64_t budget = to_u64_budget(n);
    const auto primes = budget >= 2 ? primes::sieve_primes(budget) : std::vector<std::uint64_t>{};

    auto config_key = [](const Config& c) {
        std::string key;
        for (const auto& [p, s] : c.support) {
            key += s ? '+' : '-';
            key += std::to_string(p);
            key += '.';
        }
        return key;
    };

    Candidate best = evaluate(Config{}, budget);
    std::vector<Candidate> frontier{best};

    // Clustered seeds: the smallest primes congruent to +-1 mod q make every
    // cyclic factor share the divisor q, the shape the dense witness families
    // take. Returns the seed of the requested level, if the budget allows.
    auto clustered_seed = [&](std::uint64_t q, bool plus_side, std::size_t level) -> std::optional<Config> {
        Config c;
        for (std::uint64_t p : primes) {
            if (p % q != (plus_side ? q - 1 : 1)) continue;
            if (p > budget / c.prod) break;
            c.support.emplace_back(p, plus_side);
            c.prod *= p;
            if (c.support.size() == level) return c;
        }
        return std::nullopt;
    };
    static constexpr std::uint64_t seed_moduli[] = {2, 3, 5, 7, 11, 13};

    for (std::size_t level = 1; !frontier.empty(); ++level) {
        std::vector<Candidate> next;
        std::set<std::string> seen;
        auto consider = [&](const Config& c) {
            if (!seen.insert(config_key(c)).second) return;
            Candidate cand = evaluate(c, budget);
            if (better(cand, best)) best = cand;
            next.push_back(std::move(cand));
        };
        for (const Candidate& cand : frontier) {
            const std::uint64_t last = cand.config.support.empty() ? 0 : cand.config.support.back().first;
            for (std::uint64_t p : primes) {
                if (p <= last) continue;
                if (p > budget / cand.config.prod) break;
                for (bool sign : {false, true}) {
                    Config c = cand.config;
                    c.support.emplace_back(p, sign);
                    c.prod *= p;
                    consider(c);
                }
            }
        }
        for (std::uint64_t q : seed_moduli) {
            for (bool plus_side : {false, true}) {
                if (auto seed = clustered_seed(q, plus_side, level)) consider(*seed);
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end(), better);
        if (next.size() > beam_width) next.resize(beam_width);
        frontier = std::move(next);
    }
    return to_witness(best, n);
}

GrowthBoundReport check_growth_bound(const abelian::FiniteAbelianGroup& group, const BigInt& r, double R,
                                     unsigned mult_bound) {
    if (r < 1) throw domain_error("growth bound check: r must be >= 1");
    if (!(R >= 1.0)) throw domain_error("growth bound check: R must be >= 1");
    if (mult_bound < 1) throw domain_error("growth bound check: multiplicity bound must be >= 1");
    std::map<std::uint64_t, unsigned> mult;
    for (std::uint64_t x : group.cyclic_factors()) ++mult[x];
    for (const auto& [order, count] : mult) {
        if (count > mult_bound)
            throw domain_error("growth bound check: cyclic factor order " + std::to_string(order) +
                               " repeats " + std::to_string(count) + " times, above the bound " +
                               std::to_string(mult_bound));
    }

    GrowthBoundReport rep;
    rep.group_signature = group.signature();
    rep.r = r;
    rep.R = R;
    rep.mult_bound = mult_bound;
    rep.log_n = log_big(r) + R * log_big(group.order());
    if (rep.log_n < std::log(3.0) - 1e-12)
        throw domain_error("growth bound check: n = r |A|^R is below 3, the normalization is undefined");
    rep.subgroup_count = abelian::s_r(group, r);
    rep.actual = log_big(rep.subgroup_count) * std::log(rep.log_n) / (rep.log_n * rep.log_n);
    rep.target_gamma = rootsys::gamma_from_half_coxeter(R);
    rep.ratio = rep.actual / rep.target_gamma;
    return rep;
}

} // namespace subgrowth::extremal
