#include <doctest.h>

#include <cmath>

#include "racah/asympt.hpp"

using namespace racah;
using doctest::Approx;

TEST_CASE("ratio helpers") {
    ExactRatios r = ratios_from_params(Params{10, 4, 6, 3});
    CHECK(r.alpha == BigRational(3, 10));
    CHECK(r.beta == BigRational(1, 10));
    CHECK(r.gamma == BigRational(3, 10));
    CHECK(r.delta == BigRational(3, 10));
    ExactRatios d = ratios_from_params(Params{6, 3, 0, 0});
    CHECK(d.beta == BigRational(1, 2));
    CHECK(d.delta == BigRational(1, 2));
    CHECK(params_for(make_ratios(0.3, 0.1, 0.3, 0.3), 1000) == Params{1000, 400, 600, 300});
    CHECK_THROWS(make_ratios(0.6, 0.6, 0, 0));
}

TEST_CASE("limit profile at the reference ratios") {
    LimitProfile lp = limit_profile(make_ratios(0.3, 0.1, 0.3, 0.3));
    CHECK(lp.regime == Regime::GenericA);
    CHECK(lp.eta == Approx(0.21).epsilon(1e-12));
    CHECK(lp.D == Approx(0.16).epsilon(1e-12));
    CHECK(lp.mu == Approx(0.3).epsilon(1e-12));
    CHECK(std::sqrt(lp.sigma_sq) == Approx(0.335410).epsilon(1e-6));
    CHECK(lp.phi == Approx(-0.46875).epsilon(1e-12));
    CHECK(catalan_mu(lp.eta) == Approx(lp.mu).epsilon(1e-10));

    LimitProfile sw = limit_profile(make_ratios(0.3, 0.3, 0.3, 0.1));
    CHECK(sw.mu == Approx(lp.mu));
    CHECK(sw.sigma_sq == Approx(lp.sigma_sq));

    LimitProfile z = limit_profile(make_ratios(0, 0.5, 0, 0.5));
    CHECK(z.regime == Regime::DegenerateB);
    CHECK(z.eta == 0);
    CHECK(z.D == Approx(1));
    CHECK(z.mu == 0);

    CHECK(classify(make_ratios(0.5, 0, 0, 0.5)) == Regime::UndefinedC);
}

TEST_CASE("profile invariants over a grid") {
    for (int a = 0; a <= 10; ++a)
        for (int b = 0; a + b <= 10; ++b)
            for (int c = 0; a + b + c <= 10; ++c) {
                int d = 10 - a - b - c;
                Ratios r = make_ratios(a / 10.0, b / 10.0, c / 10.0, d / 10.0);
                LimitProfile lp = limit_profile(r);
                // the support law X <= min(m, n - m, k) bounds the limit mean
                double bound = std::min({r.xi(), 1 - r.xi(), r.kappa(), 0.5});
                CHECK(lp.mu <= bound + 1e-12);
                CHECK(lp.D >= -1e-12);
                CHECK(lp.D <= 1 + 1e-12);
                LimitProfile sw = limit_profile(r.mirrored());
                CHECK(sw.mu == Approx(lp.mu));
            }
}

TEST_CASE("type one limit law") {
    auto t = type1_table(0.5, 2, 1);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == Approx(0.25));
    CHECK(t[1] == Approx(0.5));
    CHECK(t[2] == Approx(0.25));
    CHECK(type1_pmf(0.0, 4, 2, 2) == Approx(1));
    CHECK(type1_mean(0.5, 2, 1) == Approx(1));
    double mean = 0, sq = 0, sum = 0;
    for (long x = 0; x <= 4; ++x) {
        double v = type1_pmf(0.3, 4, 2, x);
        sum += v;
        mean += x * v;
        sq += x * x * v;
    }
    CHECK(sum == Approx(1).epsilon(1e-12));
    CHECK(mean == Approx(2 * 0.3 + 2 * 0.7).epsilon(1e-12));
    CHECK(sq - mean * mean == Approx(4 * 0.3 * 0.7).epsilon(1e-12));
}

TEST_CASE("normal approximation") {
    LimitProfile lp = limit_profile(make_ratios(0.3, 0.1, 0.3, 0.3));
    CHECK(normal_density(100, lp, 30) == Approx(1 / std::sqrt(2 * M_PI * 100 * 0.1125)).epsilon(1e-12));
    CHECK(normal_density(100, lp, 33) == Approx(normal_density(100, lp, 27)));
    LimitProfile z = limit_profile(make_ratios(0, 0.5, 0, 0.5));
    CHECK_THROWS_AS(normal_density(100, z, 0), RegimeMismatch);
}

TEST_CASE("degenerate limits") {
    Ratios g = make_ratios(0.25, 0, 0.25, 0.5);
    CHECK(degenerate_geometric(g, 0) == Approx(2.0 / 3));
    CHECK(degenerate_geometric(g, 1) == Approx(2.0 / 9));
    Ratios ray = make_ratios(0, 0.5, 0.5, 0);
    CHECK(degenerate_rayleigh(ray, 0, INFINITY) == Approx(1));
    CHECK(rayleigh_cdf(1.0) == Approx(1 - std::exp(-2.0)));
    CHECK_THROWS_AS(degenerate_geometric(make_ratios(0.3, 0.1, 0.3, 0.3), 0), RegimeMismatch);
}

TEST_CASE("expectation and variance asymptotics") {
    EVApprox a = ev_asymptotics(make_ratios(0.3, 0.1, 0.3, 0.3), 1000);
    CHECK(a.expectation == Approx(300 - 0.46875));
    CHECK(a.variance == Approx(112.5));
    EVApprox g = ev_asymptotics(make_ratios(0.25, 0, 0.25, 0.5), 400);
    CHECK(g.expectation == Approx(100 - 0.5));
}

TEST_CASE("rate functions") {
    RateFunctions rf(make_ratios(0.3, 0.2, 0, 0.5));
    const double mu = rf.mu();
    CHECK(std::abs(rf.f(mu)) <= 1e-10);
    CHECK(std::abs(rf.f_prime(mu)) <= 1e-8);
    const double h = 1e-4;
    double du = (rf.u(h) - rf.u(-h)) / (2 * h);
    double d2u = (rf.u(h) - 2 * rf.u(0) + rf.u(-h)) / (h * h);
    CHECK(std::abs(du - mu) <= 1e-6);
    CHECK(std::abs(d2u - rf.sigma_sq()) <= 1e-5);
    CHECK(std::abs(rf.rate_upper(mu)) <= 1e-9);
    CHECK(rf.rate_upper(mu + 0.05) > 0);
    CHECK(rf.rate_lower(mu - 0.05) > 0);
    // concavity of f, convexity of u
    for (double t = 0.01; t + 0.02 < rf.t_max(); t += 0.01)
        CHECK(rf.f(t - 0.005) - 2 * rf.f(t) + rf.f(t + 0.005) <= 1e-12);
    for (double s = -2; s <= 2; s += 0.25) CHECK(rf.u(s - 0.1) - 2 * rf.u(s) + rf.u(s + 0.1) >= -1e-9);
    CHECK_THROWS_AS(rf.f(rf.t_max() + 0.1), DomainError);
}

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0) == 0);
    CHECK(binary_entropy(0.5) == Approx(std::log(2.0)));
}
