#include <doctest.h>

#include <cmath>

#include "racah/asymmetry.hpp"

using namespace racah;
using doctest::Approx;

TEST_CASE("averaged-state entropy") {
    const double expect = std::log(3.0) / 3 + std::log(6.0) / 2 + std::log(12.0) / 6;
    CHECK(std::abs(entropy_avg(Params{4, 2, 2, 1}) - expect) <= 1e-12);
    CHECK(entropy_avg(Params{8, 3, 0, 0}) == 0);
    CHECK(entropy_avg(Params{6, 3, 3, 3}) == Approx(std::log(20.0)).epsilon(1e-12));
    for (long n = 1; n <= 14; ++n)
        for (const Params& p : enumerate_params(n)) {
            double s = entropy_avg(p);
            CHECK(s >= -1e-15);
            CHECK(s == Approx(entropy_avg(p.mirrored())).epsilon(1e-12));
        }
}

TEST_CASE("type one entropy expansion") {
    CHECK(entropy_type1_approx(100, 0.3, 0, 0) == 0);
    double prev = 1e9;
    for (long n : {50L, 100L, 200L, 400L}) {
        double gap = std::abs(entropy_avg(Params{n, n / 2, 2, 1}) - entropy_type1_approx(n, 0.5, 2, 1));
        CHECK(gap <= prev);
        prev = gap;
    }
    CHECK(prev <= 0.1);
}

TEST_CASE("type two constants") {
    Ratios r = make_ratios(0.3, 0.2, 0, 0.5);
    Type2Constants c = entropy_type2_constants(r);
    CHECK(std::abs(c.C1 - binary_entropy(c.mu)) <= 1e-12);
    double s = entropy_avg(params_for(r, 500));
    CHECK(std::abs(s / 500 - c.C1) <= 0.02);
    Type2Constants small = entropy_type2_constants(make_ratios(1e-6, 0.2, 0, 1 - 0.2 - 1e-6));
    CHECK(small.C1 < 1e-3);
    CHECK_THROWS_AS(entropy_type2_constants(make_ratios(0.3, 0.1, 0.3, 0.3)), RegimeMismatch);
}

TEST_CASE("spectral entropy") {
    DistTable t = build_table(Params{4, 2, 2, 1});
    CHECK(h_spectral(t, 0.4) == Approx(std::log(6.0)));
    CHECK(h_spectral(t, 0.1) == Approx(std::log(3.0)));
    CHECK_THROWS_AS(h_spectral(t, 0.0), BadEpsilon);
    CHECK_THROWS_AS(h_spectral(t, 1.0), BadEpsilon);
    DistTable big = build_table(Params{20, 8, 9, 4});
    double prev = -1;
    for (double eps = 0.01; eps < 1; eps += 0.01) {
        double h = h_spectral(big, eps);
        CHECK(h >= prev);
        prev = h;
    }
}

TEST_CASE("distinguishability bounds") {
    Bounds b = distinguishability_bounds(1.0, 1.0, 0.05, 0.05);
    CHECK(1.0 - b.lower == Approx(std::log(400.0)));
    CHECK(b.upper - 1.0 == Approx(std::log(8000.0)));
    DistTable t = build_table(Params{4, 2, 2, 1});
    Bounds c = distinguishability_bounds(t, 0.5, 0.05, 0.05);
    CHECK(c.lower == Approx(std::log(6.0) - std::log(400.0)));
    CHECK(c.lower <= c.upper);
    CHECK_THROWS_AS(distinguishability_bounds(t, 0.1, 0.05, 0.06), BadDeltas);
    CHECK_THROWS_AS(distinguishability_bounds(1, 2, 0, 0.1), BadDeltas);
}
