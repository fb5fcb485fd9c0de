#include "subgrowth/construct.hpp"

#include "subgrowth/abelian.hpp"
#include "subgrowth/errors.hpp"
#include "subgrowth/numth.hpp"
#include "subgrowth/rootsys.hpp"

#include <cmath>
#include <string>

namespace subgrowth::construct {

BigInt borel_index(int dim_d, std::uint64_t p) {
    if (dim_d < 2) throw domain_error("borel_index: dimension must be >= 2");
    if (!numth::is_prime(p)) throw domain_error("borel_index: p = " + std::to_string(p) + " is not prime");
    BigInt index = 1;
    BigInt geometric = 1; // 1 + p + ... + p^{i-1} = (p^i - 1)/(p - 1)
    for (int i = 2; i <= dim_d; ++i) {
        geometric = geometric * p + 1;
        index *= geometric;
    }
    return index;
}

BorelWitness borel_t(int dim_d, std::uint64_t p) {
    if (dim_d < 2) throw domain_error("borel_t: dimension must be >= 2");
    if (!numth::is_prime(p)) throw domain_error("borel_t: p = " + std::to_string(p) + " is not prime");
    if (p <= 3)
        throw domain_error("borel_t: requires characteristic p > 3 (the abelianization is the "
                           "prime-to-p torus only for p > 3), got p = " +
                           std::to_string(p));
    BorelWitness w;
    w.dim_d = dim_d;
    w.p = p;
    w.index = borel_index(dim_d, p);
    w.abelianization_order = ipow(BigInt(p - 1), static_cast<std::uint64_t>(dim_d - 1));
    w.t_value = log_big(w.index) / log_big(w.abelianization_order);
    return w;
}

namespace {

void validate_rate_inputs(int dim_d, double rho, double sigma) {
    if (dim_d < 2) throw domain_error("construction: dimension must be >= 2");
    if (!(rho > 0.0 && rho <= 0.5))
        throw domain_error("construction: rho must lie in (0, 1/2], got " + std::to_string(rho));
    if (!(sigma > 0.0 && sigma < 1.0))
        throw domain_error("construction: sigma must lie in (0, 1), got " + std::to_string(sigma));
}

} // namespace

ConstructionReport run_construction(int dim_d, std::uint64_t x, double rho, double sigma,
                                    std::optional<std::uint64_t> forced_q, unsigned threads) {
    validate_rate_inputs(dim_d, rho, sigma);

    ConstructionReport rep;
    rep.dim_d = dim_d;
    rep.x = x;
    rep.rho = rho;
    rep.sigma = sigma;
    if (forced_q) {
        rep.q = *forced_q;
        rep.window_stats = primes::primes_in_ap(x, rep.q);
    } else {
        auto scan = primes::bv_window_scan(x, rho, threads);
        rep.q = scan.best_q;
        rep.window_stats = std::move(scan.best);
    }

    const long long L = static_cast<long long>(rep.window_stats.L);
    rep.space_dim = static_cast<long long>(dim_d - 1) * L;
    if (rep.space_dim == 0)
        throw domain_error("construction: P(x,q) is empty for x = " + std::to_string(x) + ", q = " +
                           std::to_string(rep.q) + "; the diagonal quotient is trivial");
    if (rep.space_dim < 2)
        throw domain_error("construction: (d-1)L = 1 leaves no admissible sigma in (0,1)");

    long long k = std::llround(sigma * static_cast<double>(rep.space_dim));
    k = std::max<long long>(1, std::min(rep.space_dim - 1, k));
    rep.index_exponent = k;
    rep.sigma_admissible = static_cast<double>(k) / static_cast<double>(rep.space_dim);

    rep.log_borel_index = 0.0;
    for (std::uint64_t p : rep.window_stats.primes_found)
        rep.log_borel_index += log_big(borel_index(dim_d, p));

    const BigInt count = abelian::gaussian_binomial(rep.space_dim, k, BigInt(rep.q));
    rep.subgroup_count_log = log_big(count);
    const double lq = std::log(static_cast<double>(rep.q));
    rep.approx_count_log = rep.sigma_admissible * (1.0 - rep.sigma_admissible) *
                           static_cast<double>(rep.space_dim) * static_cast<double>(rep.space_dim) * lq;
    rep.log_n = rep.log_borel_index + static_cast<double>(k) * lq;
    rep.achieved_exponent = rep.subgroup_count_log * std::log(rep.log_n) / (rep.log_n * rep.log_n);
    rep.target_gamma = rootsys::gamma_of_type({rootsys::Family::A, dim_d - 1});
    return rep;
}

std::vector<SweepRow> convergence_sweep(int dim_d, const std::vector<std::uint64_t>& x_values, double rho,
                                        double sigma, unsigned threads) {
    std::vector<SweepRow> rows;
    rows.reserve(x_values.size());
    for (std::uint64_t x : x_values) {
        SweepRow row;
        row.x = x;
        try {
            const auto rep = run_construction(dim_d, x, rho, sigma, std::nullopt, threads);
            row.ok = true;
            row.q = rep.q;
            row.L = rep.window_stats.L;
            row.sigma_admissible = rep.sigma_admissible;
            row.log_n = rep.log_n;
            row.achieved_exponent = rep.achieved_exponent;
            row.target_gamma = rep.target_gamma;
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double main_term_exponent(int dim_d, double rho, double sigma, double log_x) {
    validate_rate_inputs(dim_d, rho, sigma);
    if (!(log_x > 1.0)) throw domain_error("main_term_exponent: log_x must exceed 1");
    const double R = static_cast<double>(dim_d) / 2.0;
    const double denom = R + sigma * rho;
    const double c = std::log(static_cast<double>(dim_d - 1) * denom);
    return sigma * (1.0 - sigma) * rho * ((1.0 - rho) * log_x + c) / (log_x * denom * denom);
}

double main_term_exponent_direct(int dim_d, double rho, double sigma, double log_x) {
    validate_rate_inputs(dim_d, rho, sigma);
    if (!(log_x > 1.0)) throw domain_error("main_term_exponent: log_x must exceed 1");
    if (2.0 * (1.0 - rho) * log_x > 700.0)
        throw domain_error("main_term_exponent_direct: x^{2(1-rho)} overflows a double at log_x = " +
                           std::to_string(log_x) + "; use main_term_exponent");
    const double u = log_x;
    const double log_q = rho * u;               // q at the top of the window
    const double main_L = std::exp((1.0 - rho) * u) / u; // x / (phi(q) log x)
    const double main_M = std::exp((1.0 - rho) * u);     // x / phi(q)
    const double d = static_cast<double>(dim_d);
    const double log_borel = d * (d - 1.0) / 2.0 * main_M;
    const double log_count = sigma * (1.0 - sigma) * (d - 1.0) * (d - 1.0) * main_L * main_L * log_q;
    const double log_n = log_borel + sigma * (d - 1.0) * main_L * log_q;
    return log_count * std::log(log_n) / (log_n * log_n);
}

} // namespace subgrowth::construct
