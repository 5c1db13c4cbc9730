#pragma once

#include <string>
#include <vector>

#include "racah/exact.hpp"

namespace racah {

struct Params {
    long n = 0, m = 0, k = 0, l = 0;

    long M() const { return m - l; }
    long N() const { return n - m - k + l; }
    long K() const { return k - l; }
    bool reduced() const { return m <= n - m; }
    // (n, m, k, l) -> (n, n-m, k, k-l); the distribution is invariant.
    Params mirrored() const { return Params{n, n - m, k, k - l}; }
    Params canonical() const { return reduced() ? *this : mirrored(); }
    std::string str() const;
    bool operator==(const Params&) const = default;
};

Params validate_params(long n, long m, long k, long l);
// Every admissible tuple with the given n, in lexicographic (m, k, l) order.
std::vector<Params> enumerate_params(long n);

struct TwoRowDim {
    long n, x;
    BigInt value;
};
TwoRowDim two_row_dim(long n, long x);

// 3F2(-i, -x, x-n-1; -m, m-n; 1), requires m <= n-m.
BigRational zonal_omega(long n, long m, long x, long i);

long support_max(const Params& p);

BigRational pmf_hahn(const Params& p, long x);
BigRational pmf_racah(const Params& p, long x);
BigRational pmf_special(const Params& p, long x);
bool has_special_form(const Params& p);
BigRational cdf(const Params& p, long x);

// Three-term relation between consecutive pmf values; zero on the true pmf.
BigRational recurrence_residual(const Params& p, long x, const BigRational& p_minus,
                                const BigRational& p_zero, const BigRational& p_plus);
// Same relation with each fraction factor inverted.  Kept only to document
// that this orientation does not annihilate the pmf.
BigRational recurrence_residual_inverted(const Params& p, long x, const BigRational& p_minus,
                                         const BigRational& p_zero, const BigRational& p_plus);

struct DistTable {
    Params params;
    std::vector<BigRational> probabilities;  // x = 0 .. floor(n/2)

    const BigRational& operator[](long x) const { return probabilities.at(x); }
    BigRational at(long x) const;  // zero outside the table
    long size() const { return static_cast<long>(probabilities.size()); }
    std::vector<BigRational> cumulative() const;
    std::vector<double> as_doubles() const;
};

DistTable build_table(const Params& p);
// Same table generated by the three-term recurrence from p(0), p(1); much
// cheaper for large n and still exact.
DistTable build_table_recurrence(const Params& p);
void check_table(const DistTable& t);

BigRational moments(const DistTable& t, int order);
BigRational moments(const Params& p, int order);
BigRational variance(const DistTable& t);

struct CasimirCheck {
    BigRational eta;
    BigRational residual;
};
CasimirCheck casimir_check(const DistTable& t);
CasimirCheck casimir_check(const Params& p);
// Closed form of sum_x (n-2x)(n-2x+2) p(x).
BigInt casimir_value(const Params& p);

BigRational expectation_half(long m, long k, long l);

// Worker count for table building (RACAH_DIST_THREADS, default 1).
unsigned worker_count();

}  // namespace racah
