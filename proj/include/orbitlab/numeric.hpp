#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace orbitlab {

// All arithmetic in this project is exact. Orbit products overflow 64 bits
// already at q = 9 and several lemma multipliers are non-dyadic rationals,
// so nothing here may ever round through floating point.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int pow2(std::size_t e);

// Number of decimal digits of n (n >= 0; digits10(0) == 1).
std::size_t digits10(const Int& n);

// Round n >= 0 to `figures` significant decimal digits, ties toward zero.
Int round_significant(const Int& n, unsigned figures);

// Decimal rendering of value / 10^shift without exponent notation,
// trailing fractional zeros trimmed: (98, 2) -> "0.98", (1500, 2) -> "15".
std::string shift_decimal(const Int& value, std::size_t shift);

// Canonical "num/den" string; integral values render without "/1".
std::string rational_str(const Rational& r);

}  // namespace orbitlab
