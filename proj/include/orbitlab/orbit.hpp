#pragma once

#include <vector>

#include "orbitlab/numeric.hpp"
#include "orbitlab/word.hpp"

namespace orbitlab {

// (w)_2 = sum_i w_i 2^{q-i}, exact for any length.
Int base2_value(const BinaryWord& w);

// The q iterated cyclic shifts w, sigma(w), ..., sigma^{q-1}(w) arranged in
// lexicographic order. Periodic words keep their duplicates, so the vector
// always has exactly q entries. words.front() is the canonical representative.
struct OrbitVector {
  std::vector<BinaryWord> words;
  const BinaryWord& rep() const { return words.front(); }
};

OrbitVector build_orbit(const BinaryWord& w);

// Base-2 values of the sorted orbit: nondecreasing, sums to (2^q - 1) * ones(w).
struct Base2Orbit {
  std::vector<Int> values;
};

Base2Orbit base2_orbit(const BinaryWord& w);

// Canonical representatives of every orbit of length-q words with exactly p
// ones, in lexicographic order. Reference implementation: walk all C(q,p)
// words in lex order and keep those equal to their own least rotation.
// Requires 1 <= p < q.
std::vector<BinaryWord> enumerate_orbits(unsigned p, unsigned q);

// The word 0^{q-p} 1^p, lexicographically least representative of its family.
BinaryWord most_unbalanced(unsigned p, unsigned q);

// Canonical representative of the unique all-balanced orbit.
// Requires 1 <= p < q and gcd(p, q) == 1 (uniqueness holds only then).
BinaryWord balanced_orbit(unsigned p, unsigned q);

}  // namespace orbitlab
