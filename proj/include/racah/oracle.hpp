#pragma once

// Brute-force reference values computed straight from the symmetric group,
// sharing no code with the hypergeometric formulas in dist.hpp.

#include <vector>

#include "racah/dist.hpp"

namespace racah {

constexpr long kOracleMaxN = 9;

struct CycleType {
    std::vector<int> parts;  // non-increasing
    BigInt class_size;
};

std::vector<CycleType> cycle_types(long n);
long char_two_row(long n, long x, const CycleType& c);

BigRational pmf_bruteforce(const Params& p, long x);
// All x = 0 .. floor(n/2) with a single pass over the group.
std::vector<BigRational> pmf_bruteforce_table(const Params& p);

BigInt eberlein_direct(long n, long m, long i, long x);
BigRational casimir_bruteforce(const Params& p);

}  // namespace racah
