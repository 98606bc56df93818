#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace rgd {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Sign of an exact value: -1, 0 or +1.
inline int sign(const BigInt& x) { return sgn(x); }
inline int sign(const BigRational& x) { return sgn(x); }

/// ceil(q) for an exact rational.
BigInt ceil(const BigRational& q);
/// floor(q) for an exact rational.
BigInt floor(const BigRational& q);

/// Decimal rendering of q with exactly `digits` fractional digits,
/// rounded half away from zero by exact long division.
std::string to_decimal(const BigRational& q, int digits = 7);

/// Decimal with thousands separators, e.g. 1,627,920,000.
std::string to_grouped(const BigInt& x);

}  // namespace rgd
