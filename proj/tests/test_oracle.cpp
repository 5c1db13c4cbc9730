#include <doctest.h>

#include "racah/oracle.hpp"

using namespace racah;
using Q = BigRational;

namespace {
const CycleType& find_type(const std::vector<CycleType>& types, std::vector<int> parts) {
    for (const auto& c : types)
        if (c.parts == parts) return c;
    throw std::runtime_error("cycle type not found");
}
}  // namespace

TEST_CASE("cycle types of S_4") {
    auto types = cycle_types(4);
    CHECK(types.size() == 5);
    BigInt total = 0;
    for (const auto& c : types) total += c.class_size;
    CHECK(total == 24);
    CHECK(find_type(types, {2, 1, 1}).class_size == 6);
}

TEST_CASE("two-row characters") {
    auto types = cycle_types(4);
    for (const auto& c : types) CHECK(char_two_row(4, 0, c) == 1);
    CHECK(char_two_row(4, 1, find_type(types, {1, 1, 1, 1})) == 3);
    CHECK(char_two_row(4, 2, find_type(types, {2, 1, 1})) == 0);
    for (long n = 1; n <= 7; ++n) {
        auto all = cycle_types(n);
        for (long x = 0; x <= n / 2; ++x)
            for (long y = 0; y <= n / 2; ++y) {
                BigInt s = 0;
                for (const auto& c : all) s += c.class_size * char_two_row(n, x, c) * char_two_row(n, y, c);
                BigInt fact = 1;
                for (long j = 2; j <= n; ++j) fact *= j;
                CHECK(s == (x == y ? fact : BigInt(0)));
            }
    }
}

TEST_CASE("brute-force projector distribution") {
    CHECK(pmf_bruteforce(Params{4, 2, 2, 1}, 1) == Q(1, 2));
    CHECK(pmf_bruteforce(Params{4, 2, 0, 0}, 0) == 1);
    auto t = pmf_bruteforce_table(Params{4, 2, 2, 1});
    Q total = 0;
    for (const auto& v : t) total += v;
    CHECK(total == 1);
    CHECK_THROWS_AS(pmf_bruteforce(Params{10, 5, 2, 1}, 0), TooLarge);
}

TEST_CASE("oracle agrees with the closed forms for n <= 7") {
    for (long n = 1; n <= 7; ++n)
        for (const Params& p : enumerate_params(n)) {
            auto brute = pmf_bruteforce_table(p);
            for (long x = 0; x < static_cast<long>(brute.size()); ++x) CHECK(brute[x] == pmf_racah(p, x));
        }
}

TEST_CASE("Eberlein sums") {
    CHECK(eberlein_direct(4, 2, 1, 1) == 0);
    CHECK(eberlein_direct(4, 2, 1, 2) == -2);
    for (long n = 2; n <= 14; ++n)
        for (long m = 0; m <= n - m; ++m)
            for (long i = 0; i <= m; ++i) {
                CHECK(eberlein_direct(n, m, i, 0) == binom_int(m, i) * binom_int(n - m, i));
                for (long x = 0; x <= m; ++x)
                    CHECK(Q(eberlein_direct(n, m, i, x)) == binom(m, i) * binom(n - m, i) * zonal_omega(n, m, x, i));
            }
}

TEST_CASE("Casimir spectral sums") {
    CHECK(casimir_bruteforce(Params{4, 2, 2, 1}) == 12);
    CHECK(casimir_bruteforce(Params{6, 3, 0, 0}) == 48);
    CHECK(casimir_bruteforce(Params{2, 1, 1, 1}) == 4);
    CHECK(casimir_value(Params{6, 3, 0, 0}) == 48);
}
