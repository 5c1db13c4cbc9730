#pragma once

#include <optional>
#include <vector>

#include "racah/asympt.hpp"

namespace racah {

// Von Neumann entropy (nats) of the group-averaged state.
double entropy_avg(const DistTable& t);
double entropy_avg(const Params& p);

// Fixed-(k, l) approximation u log n + u + sum_x q(x)(-(x+1/2) log x - log sqrt(2 pi)
// - log q(x)), where the x = 0 summand is just -q(0) log q(0).
double entropy_type1_approx(long n, double xi, long k, long l);

struct Type2Constants {
    double C1, C2, C3, C4, C5, C6;
    double mu, sigma_sq, phi;
    // n C1 + C2 + C3 phi + C4 sigma^2
    double leading(long n) const { return n * C1 + C2 + C3 * phi + C4 * sigma_sq; }
};

// Requires gamma = 0, alpha*beta*delta > 0 and 0 < xi <= 1/2 (alpha = 0 is mirrored).
Type2Constants entropy_type2_constants(const Ratios& r);

struct EntropyProfile {
    double exact_entropy;
    double type1_approx;
    std::optional<double> type2_leading;
    std::optional<Type2Constants> constants;
};
EntropyProfile entropy_profile(const DistTable& t);

// Distinct values of log dim - log p over the support with their masses,
// sorted increasingly.
struct SpectralStep {
    BigRational ratio;  // dim / p
    BigRational mass;
    double value() const { return log_abs(ratio); }
};
std::vector<SpectralStep> spectral_steps(const DistTable& t);

double h_spectral(const DistTable& t, double eps);
double h_spectral(const Params& p, double eps);

struct Bounds {
    double lower, upper;
};
Bounds distinguishability_bounds(double h_lo, double h_hi, double delta1, double delta2);
Bounds distinguishability_bounds(const DistTable& t, double eps, double delta1, double delta2);

}  // namespace racah
