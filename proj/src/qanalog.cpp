#include "racah/qanalog.hpp"

#include <algorithm>

namespace racah {

QContext make_qcontext(const BigRational& q, const Params& p) {
    require_positive_q(q);
    Params v = validate_params(p.n, p.m, p.k, p.l);
    if (!v.reduced())
        throw Unsupported("q-analogue is defined for m <= n-m only; got " + v.str());
    return {q, v};
}

BigRational q_zonal(const QContext& ctx, long x, long i) {
    const long n = ctx.params.n, m = ctx.params.m;
    if (x < 0 || i < 0 || x > m || i > m) throw DomainError("q_zonal needs 0 <= x, i <= m");
    return q_hyp_terminating({qp(-i), qp(-x), qp(x - n - 1)}, {qp(-m), qp(m - n)}, ctx.q, ctx.q);
}

BigRational q_zonal_eberlein(const QContext& ctx, long x, long i) {
    const long n = ctx.params.n, m = ctx.params.m;
    const BigRational& q = ctx.q;
    if (x < 0 || i < 0 || x > m || i > m) throw DomainError("q_zonal needs 0 <= x, i <= m");
    BigRational acc = 0;
    for (long r = 0; r <= std::min(i, x); ++r) {
        BigRational t = qpow(q, r * (1 - x - 2 * i) + 3 * (r * (r - 1) / 2)) * q_binom(x, r, q) *
                        q_binom(m - x, i - r, q) * q_binom(n - m - x, i - r, q);
        acc += (r % 2) ? -t : t;
    }
    return qpow(q, x * i) * acc / (q_binom(m, i, q) * q_binom(n - m, i, q));
}

namespace {

// q^x [n-2x+1]/[n-x+1] * qbinom(n,x)/qbinom(n,m)
BigRational q_prefactor(const QContext& ctx, long x) {
    const long n = ctx.params.n, m = ctx.params.m;
    const BigRational& q = ctx.q;
    return qpow(q, x) * q_int(n - 2 * x + 1, q) / q_int(n - x + 1, q) * q_binom(n, x, q) /
           q_binom(n, m, q);
}

}  // namespace

BigRational q_pmf(const QContext& ctx, long x, QRoute route) {
    const Params& p = ctx.params;
    const BigRational& q = ctx.q;
    if (x < 0 || x > p.m) return 0;
    const long M = p.M(), N = p.N();
    if (route == QRoute::Hahn) {
        BigRational sum = 0;
        for (long i = 0; i <= std::min(M, N); ++i)
            sum += qpow(q, i * i) * q_binom(M, i, q) * q_binom(N, i, q) * q_zonal(ctx, x, i);
        return q_prefactor(ctx, x) * sum;
    }
    BigRational f = q_hyp_terminating({qp(-x), qp(x - p.n - 1), qp(-M), qp(-N)},
                                      {qp(-p.m), qp(p.m - p.n), qp(-M - N)}, q, q);
    return q_binom(p.n - p.k, M, q) * q_prefactor(ctx, x) * f;
}

BigRational q_cdf(const QContext& ctx, long x) {
    const Params& p = ctx.params;
    const BigRational& q = ctx.q;
    if (x < 0) return 0;
    if (x >= p.m) return 1;
    const long M = p.M(), N = p.N();
    BigRational f = q_hyp_terminating({qp(-x), qp(x - p.n), qp(-M), qp(-N)},
                                      {qp(-p.m), qp(p.m - p.n), qp(-M - N)}, q, q);
    return q_binom(p.n - p.k, M, q) * q_binom(p.n, x, q) / q_binom(p.n, p.m, q) * f;
}

std::vector<BigRational> q_table(const QContext& ctx, QRoute route) {
    std::vector<BigRational> out(ctx.params.n / 2 + 1);
    for (long x = 0; x <= ctx.params.m; ++x) out[x] = q_pmf(ctx, x, route);
    return out;
}

}  // namespace racah
