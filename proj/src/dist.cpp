#include "racah/dist.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace racah {

std::string Params::str() const {
    return "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(k) + "," +
           std::to_string(l) + ")";
}

Params validate_params(long n, long m, long k, long l) {
    auto fail = [&](const std::string& why) {
        throw OutOfCone("parameters (" + std::to_string(n) + "," + std::to_string(m) + "," +
                        std::to_string(k) + "," + std::to_string(l) + ") violate " + why);
    };
    if (n < 0) fail("n >= 0");
    if (m < 0) fail("m >= 0");
    if (k < 0) fail("k >= 0");
    if (m > n) fail("m <= n");
    if (k > n) fail("k <= n");
    if (l > m) fail("l <= m");
    if (l > k) fail("l <= k");
    if (l < m + k - n) fail("l >= m + k - n");
    if (l < 0) fail("l >= 0");
    return Params{n, m, k, l};
}

std::vector<Params> enumerate_params(long n) {
    std::vector<Params> out;
    for (long m = 0; m <= n; ++m)
        for (long k = 0; k <= n; ++k)
            for (long l = std::max(0L, m + k - n); l <= std::min(m, k); ++l)
                out.push_back(Params{n, m, k, l});
    return out;
}

TwoRowDim two_row_dim(long n, long x) {
    if (n < 0 || x < 0 || 2 * x > n)
        throw BadRow("row length " + std::to_string(x) + " is not in [0, " +
                     std::to_string(n / 2) + "]");
    BigInt v = binom_int(n, x) - binom_int(n, x - 1);
    return {n, x, v};
}

BigRational zonal_omega(long n, long m, long x, long i) {
    if (m > n - m || x < 0 || i < 0 || x > m || i > m)
        throw DomainError("zonal_omega needs m <= n-m and 0 <= x, i <= m");
    return hyp_terminating({{-i, -x, x - n - 1}, {-m, m - n}, 1});
}

long support_max(const Params& p) { return std::min({p.m, p.n - p.m, p.k}); }

namespace {

// binom(n,x)/binom(n,m) * (n-2x+1)/(n-x+1), shared by both routes.
BigRational dim_prefactor(const Params& p, long x) {
    BigRational f = make_rational(binom_int(p.n, x), binom_int(p.n, p.m));
    f *= make_rational(p.n - 2 * x + 1, p.n - x + 1);
    return f;
}

bool outside(const Params& p, long x) { return x < 0 || x > support_max(p); }

}  // namespace

BigRational pmf_hahn(const Params& input, long x) {
    const Params p = input.canonical();
    if (outside(p, x)) return 0;
    BigRational sum = 0;
    for (long i = 0; i <= std::min(p.M(), p.N()); ++i)
        sum += BigRational(binom_int(p.M(), i) * binom_int(p.N(), i)) *
               zonal_omega(p.n, p.m, x, i);
    return dim_prefactor(p, x) * sum;
}

BigRational pmf_racah(const Params& input, long x) {
    const Params p = input.canonical();
    if (outside(p, x)) return 0;
    const long M = p.M(), N = p.N();
    BigRational f = hyp_terminating({{-x, x - p.n - 1, -M, -N}, {-p.m, p.m - p.n, -M - N}, 1});
    return BigRational(binom_int(p.n - p.k, M)) * dim_prefactor(p, x) * f;
}

bool has_special_form(const Params& input) {
    const Params p = input.canonical();
    return p.M() * p.N() == 0 || p.k == p.l || p.l == 0;
}

BigRational pmf_special(const Params& input, long x) {
    const Params p = input.canonical();
    if (!has_special_form(p))
        throw NotSpecialCase(p.str() + " has M*N != 0, k != l and l != 0");
    if (outside(p, x)) return 0;
    const long n = p.n, m = p.m, k = p.k, l = p.l;
    if (p.M() * p.N() == 0)
        return make_rational(binom_int(n, x) - binom_int(n, x - 1), binom_int(n, m));
    if (k == l) {
        BigRational v = dim_prefactor(p, x);
        v *= make_rational(binom_int(l, x), binom_int(m, x));
        return v * BigRational(binom_int(n - l - x, m - l));
    }
    BigRational v = dim_prefactor(p, x);
    v *= make_rational(binom_int(k, x), binom_int(n - m, x));
    return v * BigRational(binom_int(n - k - x, n - m - k));
}

BigRational cdf(const Params& input, long x) {
    const Params p = input.canonical();
    if (x < 0) return 0;
    if (x >= support_max(p)) return 1;
    const long M = p.M(), N = p.N();
    BigRational f = hyp_terminating({{-x, x - p.n, -M, -N}, {-p.m, p.m - p.n, -M - N}, 1});
    return BigRational(binom_int(p.n - p.k, M)) *
           make_rational(binom_int(p.n, x), binom_int(p.n, p.m)) * f;
}

namespace {

BigRational residual_impl(const Params& input, long x, const BigRational& p_minus,
                          const BigRational& p_zero, const BigRational& p_plus, bool inverted) {
    const Params p = input.canonical();
    const long n = p.n, m = p.m, k = p.k;
    if (x < 0 || x > m)
        throw DomainError("recurrence is stated for 0 <= x <= m, got x = " + std::to_string(x));
    // At x = m the coefficient a_x vanishes; when n = 2m it is 0/0 with limit 0.
    BigRational a = 0;
    if (x < m)
        a = make_rational(BigInt(m - x) * (n - m - x) * (n - k - x) * (n - x + 1),
                          BigInt(n - 2 * x) * (n - 2 * x + 1));
    BigRational c = make_rational(BigInt(x) * (x - k - 1) * (m - x + 1) * (n - m - x + 1),
                                  BigInt(n - 2 * x + 1) * (n - 2 * x + 2));
    auto frac = [&](long num, long den) {
        if (den == 0 || num == 0)
            throw DegenerateDenominator("recurrence factor " + std::to_string(num) + "/" +
                                        std::to_string(den) + " at x = " + std::to_string(x));
        return inverted ? make_rational(den, num) : make_rational(num, den);
    };
    BigRational mn = BigRational(p.M() * p.N());
    BigRational out = -(a + c - mn) * frac(n - x + 1, n - 2 * x + 1) /
                      BigRational(binom_int(n, x)) * p_zero;
    if (x < m)
        out += a * frac(n - x, n - 2 * x - 1) / BigRational(binom_int(n, x + 1)) * p_plus;
    if (x > 0)
        out += c * frac(n - x + 2, n - 2 * x + 3) / BigRational(binom_int(n, x - 1)) * p_minus;
    return out;
}

}  // namespace

BigRational recurrence_residual(const Params& p, long x, const BigRational& p_minus,
                                const BigRational& p_zero, const BigRational& p_plus) {
    return residual_impl(p, x, p_minus, p_zero, p_plus, false);
}

BigRational recurrence_residual_inverted(const Params& p, long x, const BigRational& p_minus,
                                         const BigRational& p_zero, const BigRational& p_plus) {
    return residual_impl(p, x, p_minus, p_zero, p_plus, true);
}

BigRational DistTable::at(long x) const {
    if (x < 0 || x >= size()) return 0;
    return probabilities[x];
}

std::vector<BigRational> DistTable::cumulative() const {
    std::vector<BigRational> out(probabilities.size());
    BigRational acc = 0;
    for (size_t i = 0; i < probabilities.size(); ++i) out[i] = acc += probabilities[i];
    return out;
}

std::vector<double> DistTable::as_doubles() const {
    std::vector<double> out;
    out.reserve(probabilities.size());
    for (const auto& v : probabilities) out.push_back(to_double(v));
    return out;
}

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("RACAH_DIST_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
    }
    return hw;
}

void check_table(const DistTable& t) {
    const Params& p = t.params;
    if (t.size() != p.n / 2 + 1) throw InvariantViolation("table length differs from floor(n/2)+1");
    BigRational total = 0;
    for (long x = 0; x < t.size(); ++x) {
        if (sgn(t[x]) < 0)
            throw InvariantViolation("negative probability at x = " + std::to_string(x));
        if (x > support_max(p) && t[x] != 0)
            throw InvariantViolation("nonzero probability above the support at x = " +
                                     std::to_string(x));
        total += t[x];
    }
    if (total != 1) throw InvariantViolation("probabilities sum to " + to_string(total));
}

DistTable build_table(const Params& input) {
    const Params p = validate_params(input.n, input.m, input.k, input.l);
    DistTable t{p, std::vector<BigRational>(p.n / 2 + 1)};
    const long top = support_max(p);
    const bool special = has_special_form(p);
    auto fill = [&](long start, long stride) {
        for (long x = start; x <= top; x += stride)
            t.probabilities[x] = special ? pmf_special(p, x) : pmf_racah(p, x);
    };
    const long workers = std::min<long>(worker_count(), top + 1);
    if (workers <= 1 || top < 64) {
        fill(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (long w = 0; w < workers; ++w) pool.emplace_back(fill, w, workers);
        for (auto& th : pool) th.join();
    }
    check_table(t);
    return t;
}

DistTable build_table_recurrence(const Params& input) {
    const Params p = validate_params(input.n, input.m, input.k, input.l);
    const Params r = p.canonical();
    DistTable t{p, std::vector<BigRational>(p.n / 2 + 1)};
    const long top = support_max(p);
    auto direct = [&](long x) { return has_special_form(r) ? pmf_special(r, x) : pmf_racah(r, x); };
    for (long x = 0; x <= std::min(top, 1L); ++x) t.probabilities[x] = direct(x);
    const long n = r.n, m = r.m, k = r.k;
    for (long x = 1; x < top; ++x) {
        // Solve the recurrence at x for p(x+1); x < top <= m keeps every factor finite.
        BigRational a = make_rational(BigInt(m - x) * (n - m - x) * (n - k - x) * (n - x + 1),
                                      BigInt(n - 2 * x) * (n - 2 * x + 1));
        if (a == 0) {
            t.probabilities[x + 1] = direct(x + 1);
            continue;
        }
        BigRational lead = a * make_rational(n - x, n - 2 * x - 1) / BigRational(binom_int(n, x + 1));
        BigRational rest = recurrence_residual(r, x, t.probabilities[x - 1], t.probabilities[x], 0);
        t.probabilities[x + 1] = -rest / lead;
    }
    check_table(t);
    return t;
}

BigRational moments(const DistTable& t, int order) {
    if (order < 0) throw DomainError("moment order must be non-negative");
    BigRational acc = 0;
    for (long x = 0; x < t.size(); ++x) {
        if (t[x] == 0) continue;
        BigInt w;
        mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(order));
        acc += BigRational(w) * t[x];
    }
    return acc;
}

BigRational moments(const Params& p, int order) { return moments(build_table(p), order); }

BigRational variance(const DistTable& t) {
    BigRational e = moments(t, 1);
    return moments(t, 2) - e * e;
}

CasimirCheck casimir_check(const DistTable& t) {
    const Params& p = t.params;
    if (p.n == 0) return {0, 0};
    const BigRational n = p.n;
    const BigRational n2 = n * n;
    BigRational eta = BigRational(p.m * (p.n - p.m) - p.M() * p.N()) / n2;
    BigRational e = moments(t, 1);
    BigRational v = variance(t);
    BigRational en = e / n;
    BigRational residual = v / n2 - (en * (1 - en) + e / n2 - eta);
    return {eta, residual};
}

CasimirCheck casimir_check(const Params& p) { return casimir_check(build_table(p)); }

BigInt casimir_value(const Params& p) {
    BigInt d = p.n - 2 * p.m;
    return d * d + 2 * p.n + 4 * BigInt(p.M()) * p.N();
}

BigRational expectation_half(long m, long k, long l) {
    const Params p = validate_params(2 * m, m, k, l);
    const long M = p.M(), N = p.N();
    BigRational sum = 0;
    for (long r = 0; r <= std::min(M, N); ++r) {
        BigInt four;
        mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(m - r));
        BigRational term = make_rational(four * binom_int(N, r) * binom_int(M + N - r, N),
                                         binom_int(2 * (m - r), m - r));
        if (r % 2) term = -term;
        sum += term;
    }
    return BigRational(m) + BigRational(1, 2) - sum / 2;
}

}  // namespace racah
