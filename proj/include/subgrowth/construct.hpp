#pragma once

#include "subgrowth/bigint.hpp"
#include "subgrowth/primes.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace subgrowth::construct {

/// Index of the upper-triangular subgroup of SL_d over the p-element field:
/// prod_{i=2}^{d} (p^i - 1)/(p - 1), the number of complete flags. Exact.
BigInt borel_index(int dim_d, std::uint64_t p);

/// The ratio t = log(index) / log(order of the maximal abelian quotient of
/// coprime order). For the upper-triangular subgroup in characteristic p > 3
/// the commutator subgroup is the unipotent radical, so that quotient is the
/// diagonal torus of order (p-1)^{d-1}; t exceeds d/2 and converges to it as
/// p grows.
struct BorelWitness {
    int dim_d = 0;
    std::uint64_t p = 0;
    BigInt index;
    BigInt abelianization_order; // (p-1)^{d-1}
    double t_value = 0.0;
};

BorelWitness borel_t(int dim_d, std::uint64_t p);

/// Full trace of one run of the lower-bound pipeline for SL_d(Z).
struct ConstructionReport {
    int dim_d = 0;
    std::uint64_t x = 0;
    double rho = 0.0;
    double sigma = 0.0;            // requested sigma
    std::uint64_t q = 0;           // chosen (or forced) window modulus
    primes::PrimeWindowStats window_stats;
    long long space_dim = 0;       // (d-1) L, the F_q-dimension of the diagonal quotient
    long long index_exponent = 0;  // k with sigma' = k / ((d-1) L)
    double sigma_admissible = 0.0; // sigma rounded into (0,1) n (1/((d-1)L)) N
    double log_borel_index = 0.0;  // sum over p in P(x,q) of log of the exact flag count
    double subgroup_count_log = 0.0; // log of the exact Gaussian-binomial count
    double approx_count_log = 0.0;   // sigma'(1-sigma')(d-1)^2 L^2 log q, the coarse model
    double log_n = 0.0;              // log([G_P:B_P] q^k)
    double achieved_exponent = 0.0;  // subgroup_count_log / ((log n)^2 / loglog n)
    double target_gamma = 0.0;       // gamma for type A_{d-1}
};

/// Runs the pipeline: picks q from the window scan (or uses forced_q),
/// collects P(x,q), rounds sigma to the nearest admissible multiple of
/// 1/((d-1)L), counts subgroups of index q^k in the (d-1)L-dimensional space
/// over the q-element field exactly, and normalizes.
ConstructionReport run_construction(int dim_d, std::uint64_t x, double rho, double sigma,
                                    std::optional<std::uint64_t> forced_q = std::nullopt,
                                    unsigned threads = 1);

struct SweepRow {
    std::uint64_t x = 0;
    bool ok = false;
    std::string error; // empty when ok
    std::uint64_t q = 0;
    std::uint64_t L = 0;
    double sigma_admissible = 0.0;
    double log_n = 0.0;
    double achieved_exponent = 0.0;
    double target_gamma = 0.0;
};

/// One run per x; failures are recorded as rows with the diagnostic instead
/// of aborting the sweep.
std::vector<SweepRow> convergence_sweep(int dim_d, const std::vector<std::uint64_t>& x_values, double rho,
                                        double sigma, unsigned threads = 1);

/// The achieved exponent with L and M replaced by their expected main terms
/// (phi(q) = x^rho, log q = rho log x) and the common x-power cancelled
/// analytically:
///   sigma(1-sigma) rho ((1-rho) u + log((d-1)(R + sigma rho)))
///   ------------------------------------------------------------,  u = log x.
///                 u (R + sigma rho)^2
/// Its u -> infinity limit is the rate function at (sigma, rho).
double main_term_exponent(int dim_d, double rho, double sigma, double log_x);

/// The same quantity assembled literally from the main terms, without the
/// cancellation; valid while exp((1-rho) log_x) stays finite in doubles
/// (roughly log_x < 700/(1-rho)).
double main_term_exponent_direct(int dim_d, double rho, double sigma, double log_x);

} // namespace subgrowth::construct
