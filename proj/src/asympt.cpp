#include "racah/asympt.hpp"

#include <algorithm>
#include <cmath>

namespace racah {

namespace {

constexpr double kZeroTol = 1e-12;
bool is_zero(double v) { return std::fabs(v) <= kZeroTol; }

}  // namespace

Ratios ExactRatios::to_double() const {
    return {racah::to_double(alpha), racah::to_double(beta), racah::to_double(gamma),
            racah::to_double(delta)};
}

ExactRatios ratios_from_params(const Params& p) {
    if (p.n == 0) throw DomainError("ratios need n > 0");
    const BigRational n = p.n;
    return {BigRational(p.l) / n, BigRational(p.M()) / n, BigRational(p.K()) / n,
            BigRational(p.N()) / n};
}

Ratios make_ratios(double alpha, double beta, double gamma, double delta) {
    for (double v : {alpha, beta, gamma, delta})
        if (!(v >= -kZeroTol && v <= 1 + kZeroTol))
            throw DomainError("each ratio must lie in [0, 1]");
    if (std::fabs(alpha + beta + gamma + delta - 1.0) > 1e-9)
        throw DomainError("ratios must sum to 1");
    auto clip = [](double v) { return std::clamp(v, 0.0, 1.0); };
    return {clip(alpha), clip(beta), clip(gamma), clip(delta)};
}

Ratios ratios_from_fractions(double xi, double kappa, double alpha) {
    return make_ratios(alpha, xi - alpha, kappa - alpha, 1.0 - xi - kappa + alpha);
}

Params params_for(const Ratios& r, long n) {
    long m = std::lround(r.xi() * n), k = std::lround(r.kappa() * n);
    long l = std::lround(r.alpha * n);
    m = std::clamp(m, 0L, n);
    k = std::clamp(k, 0L, n);
    l = std::clamp(l, std::max(0L, m + k - n), std::min(m, k));
    return validate_params(n, m, k, l);
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::GenericA: return "generic";
        case Regime::DegenerateB: return "degenerate";
        case Regime::UndefinedC: return "undefined";
    }
    return "?";
}

Regime classify(const ExactRatios& r) {
    const bool bd_zero = r.beta == 0 || r.delta == 0;
    if (bd_zero) return r.alpha + r.beta == BigRational(1, 2) ? Regime::UndefinedC : Regime::DegenerateB;
    if (r.alpha == 0 && r.gamma == 0) return Regime::DegenerateB;
    return Regime::GenericA;
}

Regime classify(const Ratios& r) {
    const bool bd_zero = is_zero(r.beta) || is_zero(r.delta);
    if (bd_zero) return is_zero(r.xi() - 0.5) ? Regime::UndefinedC : Regime::DegenerateB;
    if (is_zero(r.alpha) && is_zero(r.gamma)) return Regime::DegenerateB;
    return Regime::GenericA;
}

namespace {

LimitProfile profile_with(const Ratios& r, Regime regime) {
    LimitProfile p;
    p.ratios = r;
    p.regime = regime;
    p.eta = r.alpha * r.gamma + r.alpha * r.delta + r.beta * r.gamma;
    p.D = std::clamp(1.0 - 4.0 * p.eta, 0.0, 1.0);
    const double root = std::sqrt(p.D);
    p.mu = (1.0 - root) / 2.0;
    p.nu = (1.0 + root) / 2.0;
    if (p.D > 0) {
        p.has_sigma = true;
        p.sigma_sq = r.kappa() * r.beta * r.delta / p.D;
    }
    if (regime == Regime::GenericA) {
        p.has_phi = true;
        p.phi = (p.sigma_sq - p.mu) / (1.0 - 2.0 * p.mu);
    }
    return p;
}

}  // namespace

LimitProfile limit_profile(const Ratios& r) { return profile_with(r, classify(r)); }
LimitProfile limit_profile(const ExactRatios& r) { return profile_with(r.to_double(), classify(r)); }

double type1_pmf(double xi, long k, long l, long x) {
    if (xi < 0 || xi > 1 || l < 0 || l > k) throw DomainError("type1_pmf needs 0<=xi<=1, 0<=l<=k");
    if (x < 0 || x > k) return 0.0;
    // Bin(k-l, xi) convolved with Bin(l, 1-xi); same value as the closed form
    // but without 0^negative powers at the endpoints.
    auto bin = [](long n, double p, long j) {
        if (j < 0 || j > n) return 0.0;
        double lc = std::lgamma(n + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0);
        return std::exp(lc) * std::pow(p, static_cast<double>(j)) *
               std::pow(1.0 - p, static_cast<double>(n - j));
    };
    double acc = 0;
    for (long u = std::max(0L, x - (k - l)); u <= std::min(x, l); ++u)
        acc += bin(k - l, xi, x - u) * bin(l, 1.0 - xi, u);
    return acc;
}

std::vector<double> type1_table(double xi, long k, long l) {
    std::vector<double> out(k + 1);
    for (long x = 0; x <= k; ++x) out[x] = type1_pmf(xi, k, l, x);
    return out;
}

double type1_mean(double xi, long k, long l) { return (k - l) * xi + l * (1.0 - xi); }
double type1_variance(double xi, long k, long) { return k * xi * (1.0 - xi); }

double normal_density(long n, const LimitProfile& pr, double x) {
    if (pr.regime != Regime::GenericA || !pr.has_sigma)
        throw RegimeMismatch("normal approximation needs the generic regime");
    const double var = n * pr.sigma_sq;
    const double z = x - n * pr.mu;
    return std::exp(-z * z / (2.0 * var)) / std::sqrt(2.0 * M_PI * var);
}

double normal_cdf(long n, const LimitProfile& pr, double x) {
    if (pr.regime != Regime::GenericA || !pr.has_sigma)
        throw RegimeMismatch("normal approximation needs the generic regime");
    return 0.5 * std::erfc(-(x - n * pr.mu) / std::sqrt(2.0 * n * pr.sigma_sq));
}

double clt_kolmogorov(const DistTable& t, const LimitProfile& pr) {
    const auto cum = t.cumulative();
    double worst = 0.0, left = 0.0;
    for (long x = 0; x < t.size(); ++x) {
        const double phi = normal_cdf(t.params.n, pr, static_cast<double>(x));
        const double right = to_double(cum[x]);
        worst = std::max({worst, std::fabs(right - phi), std::fabs(left - phi)});
        left = right;
    }
    return worst;
}

double degenerate_geometric(const Ratios& r, long i) {
    if (!(is_zero(r.beta) || is_zero(r.delta)) || is_zero(r.xi() - 0.5))
        throw RegimeMismatch("geometric limit needs beta*delta = 0 and xi != 1/2");
    if (i < 0) return 0.0;
    const double mu = std::min(r.xi(), 1.0 - r.xi());
    return std::pow(mu / (1.0 - mu), static_cast<double>(i)) * (1.0 - 2.0 * mu) / (1.0 - mu);
}

double rayleigh_cdf(double t) { return t <= 0 ? 0.0 : -std::expm1(-2.0 * t * t); }

double degenerate_rayleigh(const Ratios& r, double t_lo, double t_hi) {
    if (!(is_zero(r.beta) || is_zero(r.delta)) || !is_zero(r.xi() - 0.5))
        throw RegimeMismatch("Rayleigh limit needs beta*delta = 0 and xi = 1/2");
    if (t_hi <= t_lo) return 0.0;
    return rayleigh_cdf(t_hi) - rayleigh_cdf(t_lo);
}

namespace {

EVApprox ev_for(const LimitProfile& pr, long n) {
    switch (pr.regime) {
        case Regime::GenericA:
            return {n * pr.mu + pr.phi, n * pr.sigma_sq, regime_name(pr.regime)};
        case Regime::DegenerateB: {
            const double mu = pr.mu, d = 1.0 - 2.0 * mu;
            return {n * mu - mu / d, mu * (1.0 - mu) / (d * d), regime_name(pr.regime)};
        }
        case Regime::UndefinedC:
            return {n / 2.0 - std::sqrt(n * M_PI / 8.0), n * (0.5 - M_PI / 8.0), "rayleigh"};
    }
    throw RegimeMismatch("unknown regime");
}

}  // namespace

EVApprox ev_asymptotics(const Ratios& r, long n) { return ev_for(limit_profile(r), n); }
EVApprox ev_asymptotics(const ExactRatios& r, long n) { return ev_for(limit_profile(r), n); }

double catalan_mu(double eta, int terms) {
    // term_r = C_r eta^{r+1}, updated by its ratio so nothing overflows.
    double term = eta, acc = 0.0;
    for (int r = 0; r < terms && term > 1e-300; ++r) {
        acc += term;
        term *= 2.0 * (2.0 * r + 1.0) / (r + 2.0) * eta;
    }
    return acc;
}

double binary_entropy(double t) {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return -t * std::log(t) - (1.0 - t) * std::log1p(-t);
}

RateFunctions::RateFunctions(const Ratios& input) : r_(input) {
    if (!is_zero(r_.gamma) && is_zero(r_.alpha)) r_ = r_.mirrored();
    if (!is_zero(r_.gamma) || r_.alpha <= kZeroTol || r_.beta <= kZeroTol || r_.delta <= kZeroTol ||
        r_.xi() > 0.5 + kZeroTol)
        throw RegimeMismatch("rate functions need gamma = 0, alpha*beta*delta > 0, xi <= 1/2");
    r_.gamma = 0.0;
    LimitProfile pr = limit_profile(r_);
    mu_ = pr.mu;
    sigma_sq_ = pr.sigma_sq;
}

double RateFunctions::f(double t) const {
    const double a = r_.alpha, b = r_.beta, xi = r_.xi();
    if (t < 0 || t > a) throw DomainError("f(t) is defined for 0 <= t <= alpha");
    return binary_entropy(t) - binary_entropy(xi) + a * binary_entropy(t / a) -
           xi * binary_entropy(t / xi) + (1.0 - a - t) * binary_entropy(b / (1.0 - a - t));
}

double RateFunctions::f_prime(double t) const {
    const double a = r_.alpha, xi = r_.xi();
    if (t <= 0 || t >= a) throw DomainError("f'(t) is defined for 0 < t < alpha");
    return std::log((1 - t) * (1 - xi - t) * (a - t) / (t * (1 - a - t) * (xi - t)));
}

double RateFunctions::f_second(double t) const {
    const double a = r_.alpha, xi = r_.xi();
    if (t <= 0 || t >= a) throw DomainError("f''(t) is defined for 0 < t < alpha");
    return -1 / (1 - t) - 1 / (1 - xi - t) - 1 / (a - t) - 1 / t + 1 / (1 - a - t) + 1 / (xi - t);
}

double RateFunctions::argmax_t(double s) const {
    return golden_max([&](double t) { return s * t + f(t); }, 0.0, r_.alpha);
}

double RateFunctions::u(double s) const {
    const double t = argmax_t(s);
    return s * t + f(t);
}

namespace {

// Maximise the concave map s -> sR - u(s) over s in [0, +inf) times sign.
template <class U, class T>
double legendre(U&& u, T&& tstar, double R, double sign) {
    double hi = 1.0;
    while (hi < 1e6 && sign * (R - tstar(sign * hi)) > 0) hi *= 2.0;
    double s = golden_max([&](double v) { return sign * v * R - u(sign * v); }, 0.0, hi);
    return sign * s * R - u(sign * s);
}

}  // namespace

double RateFunctions::rate_upper(double R) const {
    if (R <= 0 || R >= r_.alpha) throw DomainError("tail level must lie in (0, alpha)");
    if (R <= mu_) return 0.0;
    return legendre([&](double s) { return u(s); }, [&](double s) { return argmax_t(s); }, R, 1.0);
}

double RateFunctions::rate_lower(double R) const {
    if (R <= 0 || R >= r_.alpha) throw DomainError("tail level must lie in (0, alpha)");
    if (R >= mu_) return 0.0;
    return legendre([&](double s) { return u(s); }, [&](double s) { return argmax_t(s); }, R, -1.0);
}

}  // namespace racah
