#include "racah/asymmetry.hpp"

#include <algorithm>
#include <cmath>

namespace racah {

double entropy_avg(const DistTable& t) {
    double s = 0.0;
    for (long x = 0; x < t.size(); ++x) {
        if (t[x] == 0) continue;
        const double logdim = log_abs(two_row_dim(t.params.n, x).value);
        s += to_double(t[x]) * (logdim - log_abs(t[x]));
    }
    return s;
}

double entropy_avg(const Params& p) { return entropy_avg(build_table(p)); }

double entropy_type1_approx(long n, double xi, long k, long l) {
    const auto q = type1_table(xi, k, l);
    const double u = type1_mean(xi, k, l);
    double s = u * std::log(static_cast<double>(n)) + u;
    for (long x = 0; x <= k; ++x) {
        if (q[x] <= 0) continue;
        s -= q[x] * std::log(q[x]);
        // log binom(n, 0) = 0 exactly, so Stirling's correction only enters for x >= 1.
        if (x > 0) s -= q[x] * ((x + 0.5) * std::log(static_cast<double>(x)) + 0.5 * std::log(2 * M_PI));
    }
    return s;
}

Type2Constants entropy_type2_constants(const Ratios& input) {
    Ratios r = input;
    if (r.gamma > 0 && r.alpha == 0) r = r.mirrored();
    if (r.gamma > 1e-12 || r.alpha <= 0 || r.beta <= 0 || r.delta <= 0 || r.xi() > 0.5 + 1e-12)
        throw RegimeMismatch("entropy constants need gamma = 0, alpha*beta*delta > 0, xi <= 1/2");
    const LimitProfile pr = limit_profile(r);
    const double a = r.alpha, b = r.beta, xi = r.xi(), mu = pr.mu;
    auto h = binary_entropy;
    auto h1 = [](double t) { return std::log((1 - t) / t); };
    auto h2 = [](double t) { return -1.0 / (t * (1 - t)); };
    const double rest = 1 - a - mu;
    const double w = b / rest;

    Type2Constants c{};
    c.C1 = h(xi) + xi * h(mu / xi) - a * h(mu / a) - rest * h(w);
    c.C2 = 0.5 * std::log(a * b / (xi * xi * (1 - xi)) * (1 - w));
    c.C3 = h1(mu / xi) - h1(mu / a) + h(w) - w * h1(w);
    c.C4 = h2(mu / xi) / (2 * xi) - h2(mu / a) / (2 * a) - b * b / (2 * rest * rest * rest) * h2(w);
    c.C5 = -0.5 * b / (rest * (rest - b));
    c.C6 = 0.25 * (1 / (rest * rest) - 1 / ((rest - b) * (rest - b)));
    c.mu = mu;
    c.sigma_sq = pr.sigma_sq;
    c.phi = pr.phi;
    return c;
}

EntropyProfile entropy_profile(const DistTable& t) {
    const Params& p = t.params;
    EntropyProfile out{entropy_avg(t), 0.0, std::nullopt, std::nullopt};
    if (p.n > 0) {
        out.type1_approx = entropy_type1_approx(p.n, static_cast<double>(p.m) / p.n, p.k, p.l);
        try {
            auto c = entropy_type2_constants(ratios_from_params(p).to_double());
            out.type2_leading = c.leading(p.n);
            out.constants = c;
        } catch (const RegimeMismatch&) {
        }
    }
    return out;
}

std::vector<SpectralStep> spectral_steps(const DistTable& t) {
    std::vector<SpectralStep> steps;
    for (long x = 0; x < t.size(); ++x) {
        if (t[x] == 0) continue;
        steps.push_back({BigRational(two_row_dim(t.params.n, x).value) / t[x], t[x]});
    }
    std::sort(steps.begin(), steps.end(),
              [](const SpectralStep& a, const SpectralStep& b) { return a.ratio < b.ratio; });
    std::vector<SpectralStep> merged;
    for (auto& s : steps) {
        if (!merged.empty() && merged.back().ratio == s.ratio)
            merged.back().mass += s.mass;
        else
            merged.push_back(s);
    }
    return merged;
}

double h_spectral(const DistTable& t, double eps) {
    if (!(eps > 0 && eps < 1)) throw BadEpsilon("epsilon must lie in (0, 1)");
    const BigRational e(eps);  // exact binary value of the double
    BigRational cum = 0;
    const auto steps = spectral_steps(t);
    for (const auto& s : steps) {
        cum += s.mass;
        if (cum > e) return s.value();
    }
    return steps.back().value();
}

double h_spectral(const Params& p, double eps) { return h_spectral(build_table(p), eps); }

Bounds distinguishability_bounds(double h_lo, double h_hi, double delta1, double delta2) {
    if (!(delta1 > 0 && delta2 > 0)) throw BadDeltas("delta1 and delta2 must be positive");
    return {h_lo - std::log(1.0 / (delta1 * delta2)),
            h_hi + std::log(1.0 / (delta1 * delta2 * delta2))};
}

Bounds distinguishability_bounds(const DistTable& t, double eps, double delta1, double delta2) {
    if (!(delta1 > 0 && delta2 > 0)) throw BadDeltas("delta1 and delta2 must be positive");
    const double lo = eps - delta1 - delta2, hi = eps + delta1 + 2 * delta2;
    if (!(lo > 0 && hi < 1))
        throw BadDeltas("need eps - delta1 - delta2 > 0 and eps + delta1 + 2 delta2 < 1");
    return distinguishability_bounds(h_spectral(t, lo), h_spectral(t, hi), delta1, delta2);
}

}  // namespace racah
