#pragma once

#include <gmpxx.h>
#include <string>

namespace pigraph {

// Exact integer type for all combinatorial counts. The generator-count
// formula overflows 64 bits quickly once Z_{p^m} sweeps get large, so
// every counting routine returns one of these.
using bignum = mpz_class;

// Binomial coefficient with the convention C(r,s) = 0 whenever r < 0,
// s < 0 or r < s.
bignum binomial(long long r, long long s);

std::string to_string(const bignum& v);

} // namespace pigraph
