#include "subgrowth/rate.hpp"

#include "subgrowth/errors.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace subgrowth::rate {

namespace {

void check_R(double R) {
    if (!(R >= 1.0)) throw domain_error("rate: R must be >= 1, got " + std::to_string(R));
}

void check_unit(double v, const char* name) {
    if (!(v > 0.0 && v < 1.0))
        throw domain_error(std::string("rate: ") + name + " must lie in the open interval (0,1), got " +
                           std::to_string(v));
}

// Maximize a unimodal function on (lo, hi) by golden-section search.
double golden_max(const std::function<double(double)>& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498948482;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

double rate_function(const RateParams& p) {
    check_unit(p.sigma, "sigma");
    check_unit(p.rho, "rho");
    check_R(p.R);
    const double denom = p.sigma * p.rho + p.R;
    return p.sigma * (1.0 - p.sigma) * p.rho * (1.0 - p.rho) / (denom * denom);
}

RateOptimum optimal_params(double R) {
    check_R(R);
    const double s0 = std::sqrt(R * (R + 1.0)) - R;
    return {s0, s0, s0 * s0 / (4.0 * R * R)};
}

RateOptimum numeric_maximize(double R, double tolerance) {
    check_R(R);
    if (!(tolerance > 0.0))
        throw domain_error("rate: tolerance must be positive, got " + std::to_string(tolerance));

    const double eps = 1e-12;
    const double inner_tol = std::min(tolerance, 1e-10) * 1e-2;

    // The function is symmetric in (sigma, rho), so start on the diagonal,
    // then polish each coordinate in turn.
    auto diag = [&](double t) { return rate_function({t, t, R}); };
    double s = golden_max(diag, eps, 1.0 - eps, inner_tol);
    double r = s;
    for (int round = 0; round < 8; ++round) {
        s = golden_max([&](double t) { return rate_function({t, r, R}); }, eps, 1.0 - eps, inner_tol);
        r = golden_max([&](double t) { return rate_function({s, t, R}); }, eps, 1.0 - eps, inner_tol);
    }
    return {s, r, rate_function({s, r, R})};
}

} // namespace subgrowth::rate
