#include "racah/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace racah {

namespace {

void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

BigInt factorial(long n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// Fix_j: number of j-subsets invariant under a permutation with these cycle
// lengths, i.e. ways to pick whole cycles whose lengths add up to j.
std::vector<long> invariant_subsets(const std::vector<int>& parts, long n) {
    std::vector<long> ways(n + 1, 0);
    ways[0] = 1;
    for (int len : parts)
        for (long j = n; j >= len; --j) ways[j] += ways[j - len];
    return ways;
}

std::vector<int> cycle_lengths(const std::vector<int>& perm) {
    std::vector<int> parts;
    std::vector<char> seen(perm.size(), 0);
    for (size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (size_t j = s; !seen[j]; j = perm[j]) {
            seen[j] = 1;
            ++len;
        }
        parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

void require_small(long n) {
    if (n > kOracleMaxN)
        throw TooLarge("brute-force oracle limited to n <= " + std::to_string(kOracleMaxN));
}

}  // namespace

std::vector<CycleType> cycle_types(long n) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(static_cast<int>(n), static_cast<int>(n), cur, parts);
    std::vector<CycleType> out;
    const BigInt nfact = factorial(n);
    for (auto& pr : parts) {
        BigInt centralizer = 1;
        std::map<int, long> mult;
        for (int a : pr) {
            centralizer *= a;
            ++mult[a];
        }
        for (auto [len, cnt] : mult) centralizer *= factorial(cnt);
        out.push_back({pr, nfact / centralizer});
    }
    return out;
}

long char_two_row(long n, long x, const CycleType& c) {
    if (x < 0 || 2 * x > n) throw BadRow("two-row shape needs 0 <= x <= n/2");
    auto fix = invariant_subsets(c.parts, n);
    return fix[x] - (x > 0 ? fix[x - 1] : 0);
}

std::vector<BigRational> pmf_bruteforce_table(const Params& input) {
    const Params p = validate_params(input.n, input.m, input.k, input.l);
    require_small(p.n);
    const int n = static_cast<int>(p.n), k = static_cast<int>(p.k), l = static_cast<int>(p.l);
    const long M = p.M();

    // The fixed prefix of every basis ket of the state: 1^l 0^(k-l).
    std::vector<int> prefix(k);
    for (int i = 0; i < k; ++i) prefix[i] = i < l ? 1 : 0;

    // weight[cycle type] = sum over g of #{basis kets W : g.W is again a basis ket}.
    std::map<std::vector<int>, long long> weight;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // A ket with bit s_i at position i is sent to position perm[i].
        bool ok = true;
        int forced_ones = 0, free_slots = 0;
        for (int i = 0; i < n && ok; ++i) {
            int dest = perm[i];
            if (i < k) {
                if (dest < k && prefix[dest] != prefix[i]) ok = false;
            } else if (dest < k) {
                forced_ones += prefix[dest];
            } else {
                ++free_slots;
            }
        }
        if (!ok) continue;
        // Tail bits sent into the prefix are forced; the rest are free.  Once
        // the image prefix matches, total weight forces the image tail to M.
        long need = M - forced_ones;
        if (need < 0 || need > free_slots) continue;
        long long count = mpz_class(binom_int(free_slots, need)).get_si();
        if (count) weight[cycle_lengths(perm)] += count;
    } while (std::next_permutation(perm.begin(), perm.end()));

    const BigInt nfact = factorial(n);
    const BigInt basis = binom_int(p.n - p.k, M);
    std::vector<BigRational> out(p.n / 2 + 1);
    for (long x = 0; x <= p.n / 2; ++x) {
        BigInt acc = 0;
        for (auto& [parts, w] : weight) {
            auto fix = invariant_subsets(parts, p.n);
            long chi = fix[x] - (x > 0 ? fix[x - 1] : 0);
            acc += BigInt(chi) * BigInt(static_cast<long>(w));
        }
        BigInt dim = binom_int(p.n, x) - binom_int(p.n, x - 1);
        out[x] = make_rational(dim * acc, nfact * basis);
    }
    return out;
}

BigRational pmf_bruteforce(const Params& p, long x) {
    if (x < 0 || 2 * x > p.n) {
        validate_params(p.n, p.m, p.k, p.l);
        return 0;
    }
    return pmf_bruteforce_table(p)[x];
}

BigInt eberlein_direct(long n, long m, long i, long x) {
    if (m > n - m || i < 0 || x < 0 || i > m || x > m)
        throw DomainError("Eberlein sum needs m <= n-m and 0 <= i, x <= m");
    BigInt acc = 0;
    for (long r = 0; r <= std::min(i, x); ++r) {
        BigInt t = binom_int(x, r) * binom_int(m - x, i - r) * binom_int(n - m - x, i - r);
        acc += (r % 2) ? -t : t;
    }
    return acc;
}

BigRational casimir_bruteforce(const Params& p) {
    auto table = pmf_bruteforce_table(p);
    BigRational acc = 0;
    for (long x = 0; x < static_cast<long>(table.size()); ++x)
        acc += BigRational((p.n - 2 * x) * (p.n - 2 * x + 2)) * table[x];
    return acc;
}

}  // namespace racah
