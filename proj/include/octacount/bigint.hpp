#pragma once

#include <gmpxx.h>

#include <string>

namespace octa {

// Exact arbitrary-precision integers. Tiling counts and determinant
// intermediates exceed 64-bit range already for modest octagons.
using BigNat = mpz_class;  // nonnegative by construction where used
using BigInt = mpz_class;

// Exact rational, kept in lowest terms with positive denominator.
using Rational = mpq_class;

// Exact decimal string, never scientific notation.
inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace octa
