#include "racah/verify.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <thread>

#include "racah/oracle.hpp"
#include "racah/qanalog.hpp"

namespace racah {

namespace {

constexpr long kOracleCap = 8;
constexpr size_t kMaxReported = 20;

class Recorder {
public:
    explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}
    void count(size_t id, long cases = 1) {
        std::lock_guard lock(mu_);
        out_[id].cases += cases;
    }
    void fail(size_t id, const std::string& what) {
        std::lock_guard lock(mu_);
        if (out_[id].failures.size() < kMaxReported) out_[id].failures.push_back(what);
    }
    void expect(size_t id, bool ok, const std::function<std::string()>& what) {
        count(id);
        if (!ok) fail(id, what());
    }

private:
    std::vector<CheckResult>& out_;
    std::mutex mu_;
};

enum Check : size_t {
    kRoutes, kOracle, kNormalization, kCdf, kSupport, kSymmetry, kRecurrence, kCasimir,
    kSpecial, kHalf, kQRoutes, kOrthogonality, kCount
};

const char* kNames[kCount] = {"hahn_equals_racah", "oracle_agreement", "normalization",
                              "cdf_prefix_sums", "support", "symmetry", "recurrence",
                              "casimir", "special_cases", "expectation_half", "q_analogue",
                              "character_orthogonality"};

void check_tuple(const Params& p, Recorder& rec) {
    const std::string id = p.str();
    const DistTable t = build_table(p);
    const long half = p.n / 2;

    for (long x = 0; x <= half; ++x) {
        BigRational h = pmf_hahn(p, x);
        rec.expect(kRoutes, h == t[x], [&] { return id + " x=" + std::to_string(x); });
        if (has_special_form(p))
            rec.expect(kSpecial, pmf_special(p, x) == pmf_racah(p, x),
                       [&] { return id + " x=" + std::to_string(x); });
    }
    if (p.n <= kOracleCap) {
        const auto brute = pmf_bruteforce_table(p);
        for (long x = 0; x <= half; ++x)
            rec.expect(kOracle, brute[x] == t[x], [&] { return id + " x=" + std::to_string(x); });
    }

    BigRational total = 0;
    for (long x = 0; x <= half; ++x) {
        total += t[x];
        rec.expect(kCdf, cdf(p, x) == total, [&] { return id + " x=" + std::to_string(x); });
        if (x > support_max(p))
            rec.expect(kSupport, t[x] == 0, [&] { return id + " x=" + std::to_string(x); });
        rec.expect(kSymmetry, pmf_racah(p.mirrored(), x) == t[x],
                   [&] { return id + " x=" + std::to_string(x); });
    }
    rec.expect(kNormalization, total == 1, [&] { return id + " sums to " + to_string(total); });
    const Params r = p.canonical();
    rec.expect(kCdf, cdf(p, r.m) == 1, [&] { return id + " s(m) != 1"; });

    for (long x = 0; x <= r.m; ++x) {
        BigRational res = recurrence_residual(r, x, t.at(x - 1), t.at(x), t.at(x + 1));
        rec.expect(kRecurrence, res == 0,
                   [&] { return id + " x=" + std::to_string(x) + " residual " + to_string(res); });
    }

    const CasimirCheck cc = casimir_check(t);
    rec.expect(kCasimir, cc.residual == 0, [&] { return id + " residual " + to_string(cc.residual); });
    BigRational spectral = 0;
    for (long x = 0; x <= half; ++x) spectral += BigRational((p.n - 2 * x) * (p.n - 2 * x + 2)) * t[x];
    rec.expect(kCasimir, spectral == BigRational(casimir_value(p)),
               [&] { return id + " spectral sum " + to_string(spectral); });

    if (p.n == 2 * p.m)
        rec.expect(kHalf, expectation_half(p.m, p.k, p.l) == moments(t, 1),
                   [&] { return id + " closed-form mean differs"; });

    if (p.n <= kOracleCap && p.reduced()) {
        for (const BigRational& q : {BigRational(1, 2), BigRational(1), BigRational(2), BigRational(3)}) {
            const QContext ctx = make_qcontext(q, p);
            BigRational s = 0;
            for (long x = 0; x <= p.m; ++x) {
                BigRational a = q_pmf(ctx, x, QRoute::Racah);
                s += a;
                const bool ok = a == q_pmf(ctx, x, QRoute::Hahn) && q_cdf(ctx, x) == s && sgn(a) >= 0 &&
                                (q != 1 || a == t[x]);
                rec.expect(kQRoutes, ok,
                           [&] { return id + " q=" + to_string(q) + " x=" + std::to_string(x); });
            }
            rec.expect(kQRoutes, s == 1, [&] { return id + " q=" + to_string(q) + " not normalized"; });
        }
    }
}

void check_orthogonality(long n, Recorder& rec) {
    const auto classes = cycle_types(n);
    BigInt nfact;
    mpz_fac_ui(nfact.get_mpz_t(), static_cast<unsigned long>(n));
    for (long x = 0; x <= n / 2; ++x)
        for (long y = 0; y <= n / 2; ++y) {
            BigInt acc = 0;
            for (const auto& c : classes)
                acc += c.class_size * char_two_row(n, x, c) * char_two_row(n, y, c);
            rec.expect(kOrthogonality, acc == (x == y ? nfact : BigInt(0)), [&] {
                return "n=" + std::to_string(n) + " x=" + std::to_string(x) + " y=" + std::to_string(y);
            });
        }
}

}  // namespace

std::vector<CheckResult> run_verification(long n_max, unsigned workers) {
    std::vector<CheckResult> out(kCount);
    for (size_t i = 0; i < kCount; ++i) out[i].name = kNames[i];
    Recorder rec(out);

    std::vector<Params> all;
    for (long n = 0; n <= n_max; ++n)
        for (const auto& p : enumerate_params(n)) all.push_back(p);

    auto shard = [&](size_t start, size_t stride) {
        for (size_t i = start; i < all.size(); i += stride) {
            try {
                check_tuple(all[i], rec);
            } catch (const std::exception& e) {
                rec.fail(kRoutes, all[i].str() + " threw: " + e.what());
            }
        }
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(all.size())));
    if (workers == 1) {
        shard(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(shard, w, workers);
        for (auto& th : pool) th.join();
    }

    for (long n = 1; n <= std::min(n_max, 7L); ++n) check_orthogonality(n, rec);

    // With the coefficient fractions inverted the residual must not vanish.
    const Params probe{4, 2, 2, 1};
    const BigRational inverted = recurrence_residual_inverted(probe, 1, BigRational(1, 3),
                                                              BigRational(1, 2), BigRational(1, 6));
    rec.expect(kRecurrence, inverted != 0, [] { return std::string("inverted orientation vanished"); });
    return out;
}

}  // namespace racah
