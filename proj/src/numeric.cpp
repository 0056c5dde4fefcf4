#include "orbitlab/numeric.hpp"

#include <stdexcept>

namespace orbitlab {

Int pow2(std::size_t e) {
  return Int(1) << e;
}

std::size_t digits10(const Int& n) {
  if (n < 0) throw std::invalid_argument("digits10: negative value");
  return n.str().size();
}

Int round_significant(const Int& n, unsigned figures) {
  if (n < 0) throw std::invalid_argument("round_significant: negative value");
  if (figures == 0) throw std::invalid_argument("round_significant: zero figures");
  const std::size_t d = digits10(n);
  if (d <= figures) return n;
  Int unit = 1;
  for (std::size_t i = 0; i < d - figures; ++i) unit *= 10;
  Int quo = n / unit;
  Int rem = n % unit;
  if (rem * 2 > unit) ++quo;  // exact half stays below (ties toward zero)
  return quo * unit;
}

std::string shift_decimal(const Int& value, std::size_t shift) {
  if (value < 0) throw std::invalid_argument("shift_decimal: negative value");
  std::string s = value.str();
  if (shift == 0) return s;
  if (s.size() <= shift) s.insert(0, shift - s.size() + 1, '0');
  std::string whole = s.substr(0, s.size() - shift);
  std::string frac = s.substr(s.size() - shift);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return frac.empty() ? whole : whole + "." + frac;
}

std::string rational_str(const Rational& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace orbitlab
