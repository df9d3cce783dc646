#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qlattice/errors.hpp"

namespace qlattice {

// All counting is exact. Bound values, LYM sums and thresholds never touch
// floating point.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt big_pow(long base, unsigned long exp) {
    return big_pow(BigInt(base), exp);
}

/// Floor division, correct for negative numerators (unlike C++ '/').
inline long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Parses "a" or "a/b" into an exact rational. Throws ParseError on junk.
BigRat parse_rational(const std::string& text);

/// Canonical decimal rendering: "a" when the denominator is 1, else "a/b".
std::string to_decimal(const BigInt& v);
std::string to_decimal(const BigRat& v);

/// Exact conversion to uint64_t; throws RangeError when out of range.
std::uint64_t to_u64(const BigInt& v);

} // namespace qlattice
