#pragma once

#include <string>
#include <vector>

#include "racah/dist.hpp"

namespace racah {

struct Ratios {
    double alpha = 0, beta = 0, gamma = 0, delta = 0;
    double xi() const { return alpha + beta; }
    double kappa() const { return alpha + gamma; }
    // (alpha, beta, gamma, delta) -> (gamma, delta, alpha, beta), the image of
    // the parameter symmetry m -> n-m, l -> k-l.
    Ratios mirrored() const { return {gamma, delta, alpha, beta}; }
};

struct ExactRatios {
    BigRational alpha, beta, gamma, delta;
    Ratios to_double() const;
};

ExactRatios ratios_from_params(const Params& p);
Ratios make_ratios(double alpha, double beta, double gamma, double delta);
// Ratios from the (m/n, k/n, l/n) description used for plots.
Ratios ratios_from_fractions(double xi, double kappa, double alpha);
// Nearest admissible integer tuple for these ratios at size n.
Params params_for(const Ratios& r, long n);

enum class Regime { GenericA, DegenerateB, UndefinedC };
std::string regime_name(Regime r);

struct LimitProfile {
    Ratios ratios;
    double eta = 0, D = 0, mu = 0, nu = 0;
    bool has_sigma = false, has_phi = false;
    double sigma_sq = 0, phi = 0;
    Regime regime = Regime::GenericA;
};

Regime classify(const ExactRatios& r);
Regime classify(const Ratios& r);
LimitProfile limit_profile(const Ratios& r);
LimitProfile limit_profile(const ExactRatios& r);

// q(x) of the fixed-(k,l) limit: convolution of Bin(k-l, xi) and Bin(l, 1-xi).
double type1_pmf(double xi, long k, long l, long x);
std::vector<double> type1_table(double xi, long k, long l);
double type1_mean(double xi, long k, long l);
double type1_variance(double xi, long k, long l);

double normal_density(long n, const LimitProfile& profile, double x);
double normal_cdf(long n, const LimitProfile& profile, double x);
// sup_y |F_n(y) - Phi(y)| between the exact cdf and the normal approximation.
double clt_kolmogorov(const DistTable& t, const LimitProfile& profile);

// Limit mass at X = n mu - i when beta*delta = 0 and xi != 1/2.
double degenerate_geometric(const Ratios& r, long i);
// Limit mass of (n mu - X)/sqrt(n) in [t_lo, t_hi] when beta*delta = 0 and xi = 1/2.
double degenerate_rayleigh(const Ratios& r, double t_lo, double t_hi);
double rayleigh_cdf(double t);

struct EVApprox {
    double expectation;
    double variance;
    std::string regime;
};
EVApprox ev_asymptotics(const Ratios& r, long n);
EVApprox ev_asymptotics(const ExactRatios& r, long n);

// mu as the Catalan generating series sum_r C_r eta^{r+1}.
double catalan_mu(double eta, int terms = 4000);

double binary_entropy(double t);

// Large-deviation functions for gamma = 0, alpha*beta*delta > 0, xi <= 1/2.
// Ratios with alpha = 0 are mirrored first.
class RateFunctions {
public:
    explicit RateFunctions(const Ratios& r);

    const Ratios& ratios() const { return r_; }
    double mu() const { return mu_; }
    double sigma_sq() const { return sigma_sq_; }
    double t_max() const { return r_.alpha; }

    double f(double t) const;
    double f_prime(double t) const;
    double f_second(double t) const;
    double u(double s) const;
    double argmax_t(double s) const;
    // Legendre transform over s >= 0 (upper tail, R > mu) or s <= 0 (lower tail).
    double rate_upper(double R) const;
    double rate_lower(double R) const;

private:
    Ratios r_;
    double mu_, sigma_sq_;
};

// Golden-section maximum of a unimodal function on [lo, hi].
template <class F>
double golden_max(F&& fn, double lo, double hi, double tol = 1e-12);

}  // namespace racah

#include "racah/detail/golden.hpp"
