#include "orbitlab/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orbitlab {

namespace {

void check_params(unsigned p, unsigned q) {
  if (p < 1 || p >= q)
    throw std::invalid_argument("orbit family parameters must satisfy 1 <= p < q");
}

}  // namespace

Int base2_value(const BinaryWord& w) {
  Int v = 0;
  for (std::size_t i = 0; i < w.length(); ++i) v = v * 2 + w.bit(i);
  return v;
}

OrbitVector build_orbit(const BinaryWord& w) {
  OrbitVector o;
  o.words.reserve(w.length());
  for (std::size_t k = 0; k < w.length(); ++k) o.words.push_back(rotate(w, k));
  std::sort(o.words.begin(), o.words.end());
  return o;
}

Base2Orbit base2_orbit(const BinaryWord& w) {
  Base2Orbit o;
  o.values.reserve(w.length());
  for (const BinaryWord& v : build_orbit(w).words) o.values.push_back(base2_value(v));
  return o;
}

std::vector<BinaryWord> enumerate_orbits(unsigned p, unsigned q) {
  check_params(p, q);
  std::vector<std::uint8_t> bits(q - p, 0);
  bits.insert(bits.end(), p, 1);
  std::vector<BinaryWord> reps;
  do {
    BinaryWord w{bits};
    if (least_rotation(w).shift == 0) reps.push_back(std::move(w));
  } while (std::next_permutation(bits.begin(), bits.end()));
  return reps;
}

BinaryWord most_unbalanced(unsigned p, unsigned q) {
  check_params(p, q);
  return word_runs({{0, q - p}, {1, p}});
}

BinaryWord balanced_orbit(unsigned p, unsigned q) {
  check_params(p, q);
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("balanced_orbit: p and q must be coprime");
  std::vector<BinaryWord> balanced;
  for (BinaryWord& rep : enumerate_orbits(p, q)) {
    if (is_balanced(rep)) balanced.push_back(std::move(rep));
  }
  if (balanced.size() != 1)
    throw std::logic_error("balanced_orbit: expected exactly one balanced orbit");
  return balanced.front();
}

}  // namespace orbitlab
