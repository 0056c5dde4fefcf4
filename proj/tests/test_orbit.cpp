#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "orbitlab/orbit.hpp"

using namespace orbitlab;

namespace {

unsigned long long binomial(unsigned n, unsigned k) {
  unsigned long long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::string> rep_strings(unsigned p, unsigned q) {
  std::vector<std::string> out;
  for (const BinaryWord& w : enumerate_orbits(p, q)) out.push_back(w.str());
  return out;
}

// Independent enumeration oracle: canonicalise every q-bit integer of weight p
// through plain string rotation and deduplicate.
std::vector<std::string> oracle_reps(unsigned p, unsigned q) {
  std::set<std::string> reps;
  for (unsigned long mask = 0; mask < (1ul << q); ++mask) {
    std::string s(q, '0');
    unsigned ones = 0;
    for (unsigned i = 0; i < q; ++i) {
      if (mask & (1ul << i)) {
        s[q - 1 - i] = '1';
        ++ones;
      }
    }
    if (ones != p) continue;
    std::string best = s;
    for (unsigned k = 1; k < q; ++k) {
      std::rotate(s.begin(), s.begin() + 1, s.end());
      best = std::min(best, s);
    }
    reps.insert(best);
  }
  return {reps.begin(), reps.end()};
}

}  // namespace

TEST_CASE("base2_value") {
  CHECK(base2_value(BinaryWord("00101")) == 5);
  CHECK(base2_value(BinaryWord("00000")) == 0);
  CHECK(base2_value(BinaryWord("11000")) == 24);
  // Values beyond 64 bits stay exact.
  std::string big(80, '1');
  CHECK(base2_value(BinaryWord(big)) == pow2(80) - 1);
}

TEST_CASE("build_orbit") {
  const OrbitVector o = build_orbit(BinaryWord("00011"));
  const std::vector<std::string> expected{"00011", "00110", "01100", "10001", "11000"};
  REQUIRE(o.words.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(o.words[i].str() == expected[i]);
  CHECK(o.rep() == BinaryWord("00011"));

  const OrbitVector periodic = build_orbit(BinaryWord("0101"));
  const std::vector<std::string> dup{"0101", "0101", "1010", "1010"};
  REQUIRE(periodic.words.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(periodic.words[i].str() == dup[i]);

  CHECK(build_orbit(BinaryWord("10100")).rep() == BinaryWord("00101"));
}

TEST_CASE("base2_orbit") {
  CHECK(base2_orbit(BinaryWord("00011")).values == std::vector<Int>{3, 6, 12, 17, 24});
  CHECK(base2_orbit(BinaryWord("00101")).values == std::vector<Int>{5, 9, 10, 18, 20});
  CHECK(base2_orbit(BinaryWord("00010101")).values ==
        std::vector<Int>{21, 42, 69, 81, 84, 138, 162, 168});
}

TEST_CASE("base2_orbit entries are the rotation values as a multiset") {
  for (const char* s : {"00101", "0101", "0001011", "111000", "10"}) {
    const BinaryWord w(s);
    std::vector<Int> expected;
    for (std::size_t k = 0; k < w.length(); ++k) expected.push_back(base2_value(rotate(w, k)));
    std::sort(expected.begin(), expected.end());
    CHECK(base2_orbit(w).values == expected);
  }
}

TEST_CASE("enumerate_orbits") {
  CHECK(rep_strings(2, 5) == std::vector<std::string>{"00011", "00101"});
  CHECK(rep_strings(3, 8) ==
        std::vector<std::string>{"00000111", "00001011", "00001101", "00010011", "00010101",
                                 "00011001", "00100101"});
  CHECK(rep_strings(1, 2) == std::vector<std::string>{"01"});
  CHECK_THROWS_AS(enumerate_orbits(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_orbits(6, 5), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_orbits(0, 5), std::invalid_argument);
}

TEST_CASE("enumerate_orbits matches the independent canonicalisation oracle") {
  for (unsigned q = 2; q <= 10; ++q) {
    for (unsigned p = 1; p < q; ++p) CHECK(rep_strings(p, q) == oracle_reps(p, q));
  }
}

TEST_CASE("most_unbalanced") {
  CHECK(most_unbalanced(3, 8) == BinaryWord("00000111"));
  CHECK(most_unbalanced(1, 2) == BinaryWord("01"));
  CHECK(most_unbalanced(2, 5) == BinaryWord("00011"));
  CHECK_THROWS_AS(most_unbalanced(4, 4), std::invalid_argument);
}

TEST_CASE("balanced_orbit") {
  CHECK(balanced_orbit(2, 5) == BinaryWord("00101"));
  CHECK(balanced_orbit(3, 8) == BinaryWord("00100101"));
  CHECK(balanced_orbit(1, 2) == BinaryWord("01"));
  CHECK_THROWS_AS(balanced_orbit(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(balanced_orbit(3, 9), std::invalid_argument);
  // Independent spot check of the two (2,5) orbits.
  CHECK(is_balanced(BinaryWord("00101")));
  CHECK_FALSE(is_balanced(BinaryWord("00011")));
}

TEST_CASE("family invariants up to q = 12") {
  for (unsigned q = 2; q <= 12; ++q) {
    for (unsigned p = 1; p < q; ++p) {
      const auto reps = enumerate_orbits(p, q);
      CHECK(reps.front() == most_unbalanced(p, q));
      CHECK(std::is_sorted(reps.begin(), reps.end(),
                           [](const BinaryWord& a, const BinaryWord& b) { return a < b; }));
      if (std::gcd(p, q) == 1) {
        CHECK(reps.size() * q == binomial(q, p));
      }
      const Int total = (pow2(q) - 1) * p;
      for (const BinaryWord& w : reps) {
        const Base2Orbit o = base2_orbit(w);
        CHECK(std::is_sorted(o.values.begin(), o.values.end()));
        Int sum = 0;
        for (const Int& v : o.values) sum += v;
        CHECK(sum == total);
      }
    }
  }
}
