#include "racah/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace racah {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

BigRational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
    if (s.empty()) throw DomainError("empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return BigRational(BigInt(s));
        std::string intpart = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool neg = !intpart.empty() && intpart[0] == '-';
        if (neg || (!intpart.empty() && intpart[0] == '+')) intpart.erase(0, 1);
        if (intpart.empty()) intpart = "0";
        if (frac.empty()) frac = "0";
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        BigInt num = BigInt(intpart) * scale + BigInt(frac);
        if (neg) num = -num;
        return make_rational(num, scale);
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational literal '" + text + "'");
    }
}

std::string to_string(const BigRational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const BigRational& r) {
    // mpq_get_d truncates; going through the 2exp form keeps tiny values
    // from flushing to zero too early and rounds the mantissa.
    if (r == 0) return 0.0;
    long en = 0, ed = 0;
    double dn = mpz_get_d_2exp(&en, r.get_num_mpz_t());
    double dd = mpz_get_d_2exp(&ed, r.get_den_mpz_t());
    return std::ldexp(dn / dd, static_cast<int>(std::clamp<long>(en - ed, -100000, 100000)));
}

double log_abs(const BigInt& v) {
    if (v == 0) return -std::numeric_limits<double>::infinity();
    long e = 0;
    double d = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(std::fabs(d)) + static_cast<double>(e) * std::log(2.0);
}

double log_abs(const BigRational& r) { return log_abs(r.get_num()) - log_abs(r.get_den()); }

BigInt binom_int(long a, long r) {
    if (r < 0) return 0;
    BigInt out;
    BigInt top(a);
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(r));
    return out;
}

BigRational binom(long a, long r) { return BigRational(binom_int(a, r)); }

BigInt rising(long a, long r) {
    BigInt acc = 1;
    for (long j = 0; j < r; ++j) acc *= a + j;
    return acc;
}

BigInt falling(long a, long r) {
    BigInt acc = 1;
    for (long j = 0; j < r; ++j) acc *= a - j;
    return acc;
}

std::optional<long> termination_index(const std::vector<long>& numerator_params) {
    std::optional<long> t;
    for (long a : numerator_params)
        if (a <= 0) t = t ? std::min(*t, -a) : -a;
    return t;
}

BigRational hyp_terminating(const HypSpec& spec) {
    auto last = termination_index(spec.numerator_params);
    if (!last) throw DomainError("hypergeometric series does not terminate");
    if (spec.argument == 0 || *last == 0) return 1;
    const long T = *last;
    for (long b : spec.denominator_params)
        if (b <= 0 && -b < T)
            throw DenominatorPole("denominator parameter " + std::to_string(b) +
                                  " vanishes before the series terminates at index " +
                                  std::to_string(T));

    // Horner from the innermost term outwards: S = 1 + rho_0 (1 + rho_1 (...)).
    BigRational acc = 1;
    BigInt num, den;
    for (long i = T - 1; i >= 0; --i) {
        num = 1;
        den = i + 1;
        for (long a : spec.numerator_params) num *= a + i;
        for (long b : spec.denominator_params) den *= b + i;
        BigRational rho = make_rational(num, den);
        rho *= spec.argument;
        acc *= rho;
        acc += 1;
    }
    return acc;
}

void require_positive_q(const BigRational& q) {
    if (sgn(q) <= 0) throw InvalidQ("q must be a positive rational, got " + to_string(q));
}

BigRational qpow(const BigRational& q, long e) {
    if (e == 0) return 1;
    if (q == 0) {
        if (e < 0) throw DomainError("0 raised to a negative power");
        return 0;
    }
    unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), ue);
    return e > 0 ? make_rational(n, d) : make_rational(d, n);
}

BigRational q_int(long n, const BigRational& q) {
    require_positive_q(q);
    if (q == 1) return n;
    if (n < 0) return -qpow(q, n) * q_int(-n, q);
    // (1 - q^n) / (1 - q) is one division instead of n additions.
    return (1 - qpow(q, n)) / (1 - q);
}

BigRational q_pochhammer(const BigRational& a, long n, const BigRational& q) {
    require_positive_q(q);
    BigRational acc = 1, qi = 1;
    for (long i = 0; i < n; ++i) {
        acc *= 1 - a * qi;
        qi *= q;
    }
    return acc;
}

BigRational q_pochhammer_pow(long e, long n, const BigRational& q) {
    return q_pochhammer(qpow(q, e), n, q);
}

BigRational q_binom(long n, long m, const BigRational& q) {
    require_positive_q(q);
    if (m < 0) return 0;
    if (q == 1) return binom(n, m);
    BigRational acc = 1;
    for (long j = 1; j <= m; ++j) {
        BigRational top = q_int(n - j + 1, q);
        if (top == 0) return 0;
        acc *= top / q_int(j, q);
    }
    return acc;
}

namespace {

// One Pochhammer factor at index i, with the (1 - q) normalisation removed
// for pure powers of q: (1 - q^{e+i}) / (1 - q) = [e+i]_q.
struct Factor {
    BigRational value;
    bool scaled;
};

Factor q_factor(const QParam& p, long i, const BigRational& q) {
    if (p.coefficient == 1) return {q_int(p.exponent + i, q), true};
    return {1 - p.coefficient * qpow(q, p.exponent + i), false};
}

}  // namespace

BigRational q_hyp_terminating(const std::vector<QParam>& numerator_params,
                              const std::vector<QParam>& denominator_params,
                              const BigRational& q, const BigRational& z,
                              std::optional<long> balance_override) {
    require_positive_q(q);
    std::optional<long> last;
    for (const auto& a : numerator_params)
        if (a.coefficient == 1 && a.exponent <= 0)
            last = last ? std::min(*last, -a.exponent) : -a.exponent;
    if (!last) throw DomainError("basic hypergeometric series does not terminate");
    if (z == 0 || *last == 0) return 1;

    const long r = static_cast<long>(numerator_params.size());
    const long s = static_cast<long>(denominator_params.size());
    const long balance = balance_override ? *balance_override : 1 + s - r;

    std::vector<BigRational> rho(*last);
    for (long i = 0; i < *last; ++i) {
        BigRational num = z, den = q_int(i + 1, q);
        long one_minus_q = -1;  // from (q;q)_i
        for (const auto& a : numerator_params) {
            Factor f = q_factor(a, i, q);
            num *= f.value;
            if (f.scaled) ++one_minus_q;
        }
        for (const auto& b : denominator_params) {
            Factor f = q_factor(b, i, q);
            if (f.value == 0)
                throw DenominatorPole("basic hypergeometric denominator vanishes at index " +
                                      std::to_string(i + 1));
            den *= f.value;
            if (f.scaled) --one_minus_q;
        }
        if (one_minus_q != 0) {
            if (q == 1) {
                if (one_minus_q < 0)
                    throw DomainError("series is singular at q = 1 (unbalanced parameters)");
                num = 0;
            } else {
                num *= qpow(1 - q, one_minus_q);  // qpow handles negative powers
            }
        }
        if (balance != 0) {
            BigRational step = qpow(q, i * balance);
            if (balance % 2 != 0) step = -step;
            num *= step;
        }
        rho[i] = num / den;
    }
    BigRational acc = 1;
    for (long i = *last - 1; i >= 0; --i) {
        acc *= rho[i];
        acc += 1;
    }
    return acc;
}

}  // namespace racah
