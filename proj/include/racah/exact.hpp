#pragma once

// Exact integer/rational helpers and terminating hypergeometric sums.
// GMP's mpq_class is kept canonical (lowest terms, positive denominator)
// by every arithmetic operator, so it is used directly as the rational type.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "racah/errors.hpp"

namespace racah {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);
// Accepts "a", "a/b" or a finite decimal such as "0.25".
BigRational parse_rational(const std::string& text);
std::string to_string(const BigRational& r);
double to_double(const BigRational& r);
// Natural log of |r| that stays finite when r is far outside double range.
double log_abs(const BigInt& v);
double log_abs(const BigRational& r);

BigInt binom_int(long a, long r);
BigRational binom(long a, long r);
BigInt rising(long a, long r);
BigInt falling(long a, long r);

struct HypSpec {
    std::vector<long> numerator_params;
    std::vector<long> denominator_params;
    BigRational argument{1};
};

// Index of the last nonzero term, or nullopt if no numerator parameter is a
// non-positive integer.
std::optional<long> termination_index(const std::vector<long>& numerator_params);

BigRational hyp_terminating(const HypSpec& spec);

// ---- q side ----

// A basic-hypergeometric parameter c * q^e.  Using the exponent (instead of
// the evaluated rational) lets q = 1 be handled as a limit.
struct QParam {
    long exponent = 0;
    BigRational coefficient{1};
};
inline QParam qp(long e) { return QParam{e, BigRational(1)}; }

void require_positive_q(const BigRational& q);
BigRational qpow(const BigRational& q, long e);
BigRational q_int(long n, const BigRational& q);
BigRational q_pochhammer(const BigRational& a, long n, const BigRational& q);
// (q^e; q)_n evaluated directly from the exponent.
BigRational q_pochhammer_pow(long e, long n, const BigRational& q);
BigRational q_binom(long n, long m, const BigRational& q);

// r phi s ( a ; b ; q, z ).  The series includes (q;q)_i in the denominator
// and the factor ((-1)^i q^{i(i-1)/2})^{1+s-r}; pass balance_override to
// replace the exponent 1+s-r.
BigRational q_hyp_terminating(const std::vector<QParam>& numerator_params,
                              const std::vector<QParam>& denominator_params,
                              const BigRational& q, const BigRational& z,
                              std::optional<long> balance_override = std::nullopt);

}  // namespace racah
