#pragma once

#include "racah/dist.hpp"

namespace racah {

// q-deformation of the distribution.  Only m <= n-m is accepted: no mirror
// symmetry is assumed on the q side.
struct QContext {
    BigRational q;
    Params params;
};

QContext make_qcontext(const BigRational& q, const Params& p);

enum class QRoute { Hahn, Racah };

// 3phi2(q^-i, q^-x, q^{x-n-1}; q^-m, q^{m-n}; q, q)
BigRational q_zonal(const QContext& ctx, long x, long i);
// The same value from the alternating triple sum.
BigRational q_zonal_eberlein(const QContext& ctx, long x, long i);

BigRational q_pmf(const QContext& ctx, long x, QRoute route = QRoute::Racah);
BigRational q_cdf(const QContext& ctx, long x);
std::vector<BigRational> q_table(const QContext& ctx, QRoute route = QRoute::Racah);

}  // namespace racah
