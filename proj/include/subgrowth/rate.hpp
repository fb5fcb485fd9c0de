#pragma once

namespace subgrowth::rate {

struct RateParams {
    double sigma; // in (0,1)
    double rho;   // in (0,1)
    double R;     // >= 1, half the Coxeter number
};

struct RateOptimum {
    double sigma0;
    double rho0;
    double value;
};

/// sigma(1-sigma) rho(1-rho) / (sigma*rho + R)^2. Throws domain_error when
/// the parameters leave the open unit square or R < 1.
double rate_function(const RateParams& params);

/// Closed-form maximizer over (0,1)^2: sigma0 = rho0 = sqrt(R(R+1)) - R,
/// with the maximum value (sqrt(R(R+1)) - R)^2 / (4R^2).
RateOptimum optimal_params(double R);

/// Independent numeric maximization (golden-section along the diagonal, then
/// coordinate-wise refinement). The result agrees with optimal_params within
/// the requested tolerance.
RateOptimum numeric_maximize(double R, double tolerance);

} // namespace subgrowth::rate
