// Acceptance harness: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "racah/asymmetry.hpp"
#include "racah/asympt.hpp"
#include "racah/dist.hpp"
#include "racah/oracle.hpp"
#include "racah/qanalog.hpp"

using namespace racah;
using Q = BigRational;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

std::vector<Params> sample_params(std::size_t count, long n_max, unsigned seed) {
    std::mt19937 gen(seed);
    std::vector<Params> out;
    while (out.size() < count) {
        long n = std::uniform_int_distribution<long>(1, n_max)(gen);
        long m = std::uniform_int_distribution<long>(0, n)(gen);
        long k = std::uniform_int_distribution<long>(0, n)(gen);
        long l = std::uniform_int_distribution<long>(std::max(0L, m + k - n), std::min(m, k))(gen);
        out.push_back(validate_params(n, m, k, l));
    }
    return out;
}

const std::vector<Params>& sample() {
    static const std::vector<Params> s = sample_params(200, 30, 20240611u);
    return s;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

Outcome route_agreement() {
    long tuples = 0, bad = 0;
    for (long n = 0; n <= 8; ++n)
        for (const Params& p : enumerate_params(n)) {
            ++tuples;
            auto brute = pmf_bruteforce_table(p);
            for (long x = 0; x <= n / 2; ++x) {
                Q h = pmf_hahn(p, x), r = pmf_racah(p, x);
                if (h != r || r != brute.at(x)) ++bad;
            }
        }
    return {bad == 0 && tuples >= 495, std::to_string(tuples) + " tuples, " + std::to_string(bad) + " mismatches"};
}

Outcome normalization() {
    long bad = 0;
    for (const Params& p : sample()) {
        DistTable t = build_table(p);
        Q acc = 0;
        for (long x = 0; x < t.size(); ++x) {
            acc += t[x];
            if (cdf(p, x) != acc) ++bad;
        }
        if (acc != 1) ++bad;
        if (cdf(p.canonical(), p.canonical().m) != 1) ++bad;
    }
    return {bad == 0, std::to_string(sample().size()) + " tuples, " + std::to_string(bad) + " failures"};
}

Outcome support_law() {
    long bad = 0, zeros = 0;
    for (const Params& p : sample()) {
        long top = std::min({p.m, p.n - p.m, p.k});
        for (long x = top + 1; x <= p.n / 2; ++x) {
            ++zeros;
            if (pmf_racah(p, x) != 0) ++bad;
        }
    }
    return {bad == 0, std::to_string(zeros) + " zero cells checked, " + std::to_string(bad) + " nonzero"};
}

Outcome recurrence() {
    long bad = 0, cells = 0;
    for (const Params& p : sample()) {
        DistTable t = build_table(p);
        long hi = support_max(p);
        for (long x = 1; x < hi; ++x) {
            ++cells;
            if (recurrence_residual(p, x, t.at(x - 1), t.at(x), t.at(x + 1)) != 0) ++bad;
        }
    }
    Params ref{4, 2, 2, 1};
    Q inverted = recurrence_residual_inverted(ref, 1, Q(1, 3), Q(1, 2), Q(1, 6));
    bool inverted_fails = inverted != 0;
    return {bad == 0 && inverted_fails, std::to_string(cells) + " interior cells, " + std::to_string(bad) +
                                           " nonzero; inverted orientation residual " + to_string(inverted)};
}

Outcome casimir() {
    long bad = 0;
    for (const Params& p : sample()) {
        DistTable t = build_table(p);
        if (casimir_check(t).residual != 0) ++bad;
        Q spectral = 0;
        for (long x = 0; x < t.size(); ++x) spectral += Q((p.n - 2 * x) * (p.n - 2 * x + 2)) * t[x];
        BigInt expect = BigInt(p.n - 2 * p.m) * (p.n - 2 * p.m) + 2 * p.n + 4 * BigInt(p.M()) * p.N();
        if (spectral != Q(expect)) ++bad;
    }
    return {bad == 0, std::to_string(bad) + " failures"};
}

Outcome half_expectation() {
    long cases = 0, bad = 0;
    for (long m = 0; m <= 12; ++m)
        for (long k = 0; k <= 2 * m; ++k)
            for (long l = std::max(0L, k - m); l <= std::min(m, k); ++l) {
                ++cases;
                if (expectation_half(m, k, l) != moments(Params{2 * m, m, k, l}, 1)) ++bad;
            }
    return {bad == 0, std::to_string(cases) + " (m,k,l) triples, " + std::to_string(bad) + " mismatches"};
}

Outcome type1_limit() {
    const double xi = 0.3;
    const long k = 4, l = 2;
    std::vector<double> errs;
    for (long n : {50L, 100L, 200L, 400L}) {
        DistTable t = build_table(validate_params(n, std::lround(xi * n), k, l));
        double e = 0;
        for (long x = 0; x <= k; ++x) e = std::max(e, std::abs(to_double(t.at(x)) - type1_pmf(xi, k, l, x)));
        errs.push_back(e);
    }
    bool ok = true;
    std::ostringstream d;
    d << "ratios";
    for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
        double r = errs[i] / errs[i + 1];
        ok = ok && r >= 1.5 && r <= 2.7;
        d << ' ' << fmt("%.3f", r);
    }
    double mean_err = std::abs(type1_mean(xi, k, l) - ((k - l) * xi + l * (1 - xi)));
    ok = ok && mean_err <= 1e-12;
    d << "; mean error " << fmt("%.1e", mean_err);
    return {ok, d.str()};
}

const Ratios kFig4 = ratios_from_fractions(0.4, 0.6, 0.3);

Outcome clt() {
    LimitProfile lp = limit_profile(kFig4);
    bool consts = std::abs(lp.mu - 0.3) < 1e-12 && std::abs(std::sqrt(lp.sigma_sq) - 0.33541) < 1e-5;
    double ks = clt_kolmogorov(build_table(params_for(kFig4, 1000)), lp);
    return {consts && ks <= 0.05, fmt("mu=%.6f sigma=%.6f KS=%.5f", lp.mu, std::sqrt(lp.sigma_sq), ks)};
}

Outcome beyond_clt() {
    LimitProfile lp = limit_profile(kFig4);
    const long n = 2000;
    DistTable t = build_table(params_for(kFig4, n));
    double e = to_double(moments(t, 1)), v = to_double(variance(t));
    double de = std::abs(e - n * lp.mu - lp.phi), dv = std::abs(v / n - lp.sigma_sq);
    bool ok = std::abs(lp.phi + 0.46875) < 1e-12 && de <= 0.05 && dv <= 0.01;
    return {ok, fmt("|E-n mu-phi|=%.5f |V/n-sigma^2|=%.5f phi=%.5f", de, dv, lp.phi)};
}

Outcome degenerate() {
    // geometric: xi = 1/4 with M = 0
    const long n = 400, m = 100;
    DistTable g = build_table(validate_params(n, m, 200, 100));
    double worst = 0;
    for (long i = 0; i <= 5; ++i) {
        double ratio = to_double(g[m - i] / g[m - i - 1]);
        worst = std::max(worst, std::abs(ratio / 3.0 - 1));
    }
    // Rayleigh: n = 2m with k = l = m
    const long nr = 10000, mr = 5000;
    DistTable r = build_table(validate_params(nr, mr, mr, mr));
    auto probs = r.as_doubles();
    double cdf_err = 0;
    for (double t : {0.5, 1.0, 1.5}) {
        double mass = 0;
        for (long x = 0; x <= mr; ++x)
            if ((mr - x) / std::sqrt(double(nr)) <= t) mass += probs[x];
        cdf_err = std::max(cdf_err, std::abs(mass - rayleigh_cdf(t)));
    }
    double shift = to_double(moments(r, 1)) - nr / 2.0;
    double target = -std::sqrt(nr * M_PI / 8);
    double rel = std::abs(shift / target - 1);
    bool ok = worst <= 0.01 && cdf_err <= 0.02 && rel <= 0.02;
    return {ok, fmt("geometric ratio err %.4f; Rayleigh cdf err %.4f; mean shift rel err %.4f", worst, cdf_err, rel)};
}

Outcome rate_functions() {
    const Ratios r = make_ratios(0.3, 0.2, 0, 0.5);
    RateFunctions rf(r);
    const double mu = rf.mu(), h = 1e-4;
    double f0 = std::abs(rf.f(mu));
    double du = std::abs((rf.u(h) - rf.u(-h)) / (2 * h) - mu);
    double d2u = std::abs((rf.u(h) - 2 * rf.u(0) + rf.u(-h)) / (h * h) - rf.sigma_sq());
    const double R = mu + 0.05, rate = rf.rate_upper(R);
    std::vector<double> emp;
    for (long n : {200L, 400L, 800L}) {
        DistTable t = build_table(params_for(r, n));
        Q tail = 0;
        for (long x = static_cast<long>(std::ceil(R * n - 1e-9)); x < t.size(); ++x) tail += t[x];
        emp.push_back(-log_abs(tail) / n);
    }
    bool monotone = std::abs(emp[0] - rate) > std::abs(emp[1] - rate) && std::abs(emp[1] - rate) > std::abs(emp[2] - rate);
    double rel = std::abs(emp[2] - rate) / rate;
    bool ok = f0 <= 1e-10 && du <= 1e-6 && d2u <= 1e-5 && monotone && rel <= 0.20;
    std::ostringstream d;
    d << fmt("|f(mu)|=%.1e |u'(0)-mu|=%.1e |u''(0)-s2|=%.1e", f0, du, d2u)
      << fmt("; I(R)=%.5f empirical %.5f %.5f", rate, emp[0], emp[1]) << fmt(" %.5f; gap at n=800 %.1f%%", emp[2], 100 * rel)
      << (monotone ? "" : "; not monotone");
    return {ok, d.str()};
}

Outcome q_analogue() {
    long cases = 0, bad = 0;
    for (const Q& q : {Q(1, 2), Q(1), Q(2), Q(3)})
        for (long n = 0; n <= 8; ++n)
            for (const Params& p : enumerate_params(n)) {
                if (!p.reduced()) continue;
                ++cases;
                QContext ctx = make_qcontext(q, p);
                auto hahn = q_table(ctx, QRoute::Hahn), racah = q_table(ctx, QRoute::Racah);
                if (hahn != racah) ++bad;
                if (q_cdf(ctx, p.m) != 1) ++bad;
                Q acc = 0;
                for (const Q& v : racah) acc += v;
                if (acc != 1) ++bad;
                if (q == 1)
                    for (long x = 0; x < static_cast<long>(racah.size()); ++x)
                        if (racah[x] != pmf_racah(p, x)) ++bad;
            }
    return {bad == 0, std::to_string(cases) + " (tuple, q) cases, " + std::to_string(bad) + " failures"};
}

Outcome entropy() {
    double expect = std::log(3.0) / 3 + std::log(6.0) / 2 + std::log(12.0) / 6;
    double e1 = std::abs(entropy_avg(Params{4, 2, 2, 1}) - expect);
    const Ratios r = make_ratios(0.3, 0.2, 0, 0.5);
    double mu = limit_profile(r).mu;
    double lead = std::abs(entropy_avg(params_for(r, 500)) / 500 - binary_entropy(mu));
    double hs = std::abs(h_spectral(Params{4, 2, 2, 1}, 0.4) - std::log(6.0));
    bool ok = e1 <= 1e-12 && lead <= 0.05 && hs <= 1e-12;
    return {ok, fmt("|S-ref|=%.1e |S/n-h(mu)|=%.4f |H-ln6|=%.1e", e1, lead, hs)};
}

}  // namespace

int main() {
    struct Item {
        int id;
        const char* name;
        std::function<Outcome()> fn;
    };
    const std::vector<Item> items{
        {1, "exact route agreement (n <= 8)", route_agreement},
        {2, "normalization and cdf prefix sums", normalization},
        {3, "support law", support_law},
        {4, "corrected three-term recurrence", recurrence},
        {5, "corrected Casimir identity", casimir},
        {6, "n = 2m closed-form expectation", half_expectation},
        {7, "Type I limit", type1_limit},
        {8, "Type II central limit", clt},
        {9, "beyond-CLT constants", beyond_clt},
        {10, "degenerate limits", degenerate},
        {11, "rate functions", rate_functions},
        {12, "q-analogue", q_analogue},
        {13, "entropy", entropy},
    };
    int failed = 0;
    for (const auto& item : items) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = item.fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.ok) ++failed;
        std::printf("[%s] criterion %d: %s -- %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", item.id, item.name,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(items.size()) - failed, items.size());
    return failed == 0 ? 0 : 1;
}
