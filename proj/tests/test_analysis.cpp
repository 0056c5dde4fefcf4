#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "orbitlab/analysis.hpp"

using namespace orbitlab;

namespace {

const std::vector<std::string> kW49Products{
    "17057310054912000000",   "69309861547173120000",   "106107230996504524800",
    "103115999585285683200",  "184709385608811148800",  "294762710705942322432",
    "287935726164372000000",  "288046371229598615040",  "359572755909315080448",
    "225726106934040832512",  "450633542546718000000",  "480928605792476688000",
    "524261153928446022528",  "678501146123915400000"};

}  // namespace

TEST_CASE("partial-sum envelopes") {
  const TheoremReport t4 = verify_theorem4(3, 8);
  CHECK(t4.holds);
  CHECK(t4.in_hypothesis);
  CHECK(t4.orbits_checked == 7);
  CHECK(t4.counterexamples.empty());

  CHECK(verify_theorem4(2, 4).holds);  // no coprimality needed
  CHECK(verify_theorem4(1, 2).holds);

  const TheoremReport t1 = verify_theorem1(3, 8);
  CHECK(t1.holds);
  CHECK(t1.in_hypothesis);

  const TheoremReport t1x = verify_theorem1(2, 4);  // exploratory variant
  CHECK_FALSE(t1x.in_hypothesis);
  CHECK(t1x.checked);
  CHECK(t1x.holds);

  const auto both = verify_sum_extremes(3, 8);
  REQUIRE(both.size() == 2);
  CHECK(both[0].theorem == "t4");
  CHECK(both[1].theorem == "t1");
}

TEST_CASE("whole-product extremes") {
  const TheoremReport t5 = verify_theorem5(4, 9);
  CHECK(t5.holds);
  CHECK(t5.in_hypothesis);
  CHECK(t5.orbits_checked == 14);

  const TheoremReport t2 = verify_theorem2(4, 9);
  CHECK(t2.holds);
  CHECK(t2.in_hypothesis);

  // p >= q-p: still checked, flagged out of hypothesis.
  const TheoremReport t5x = verify_theorem5(3, 5);
  CHECK_FALSE(t5x.in_hypothesis);
  CHECK(t5x.checked);
  CHECK(t5x.holds);

  const TheoremReport t2x = verify_theorem2(2, 4);
  CHECK_FALSE(t2x.in_hypothesis);
  CHECK(t2x.holds);

  CHECK(verify_theorem5(1, 2).holds);
  CHECK(verify_theorem2(1, 2).holds);
}

TEST_CASE("partial-product envelopes and the open upper bound") {
  CHECK(verify_theorem6(3, 8).holds);
  CHECK(verify_theorem6(2, 5).holds);
  CHECK(verify_theorem6(1, 2).holds);

  const TheoremReport c3 = verify_conjecture3(3, 8);
  CHECK(c3.holds);
  CHECK(c3.in_hypothesis);
  CHECK(c3.checked);

  const TheoremReport c3_skip = verify_conjecture3(2, 4);
  CHECK_FALSE(c3_skip.in_hypothesis);
  CHECK_FALSE(c3_skip.checked);

  const auto both = verify_partial_product_extreme(2, 5);
  REQUIRE(both.size() == 2);
  CHECK(both[0].theorem == "t6");
  CHECK(both[1].theorem == "c3");
  CHECK(both[0].holds);
  CHECK(both[1].holds);
}

TEST_CASE("envelope sweeps over small families") {
  for (unsigned q = 2; q <= 11; ++q) {
    for (unsigned p = 1; p < q; ++p) {
      CHECK(verify_theorem4(p, q).holds);
      if (std::gcd(p, q) == 1) {
        CHECK(verify_theorem1(p, q).holds);
        CHECK(verify_theorem2(p, q).holds);
      }
      if (p < q - p) {
        CHECK(verify_theorem5(p, q).holds);
        CHECK(verify_theorem6(p, q).holds);
      }
    }
  }
}

TEST_CASE("lexidynamic permutation") {
  CHECK(lexidynamic_permutation(BinaryWord("01")) == std::vector<std::size_t>{1, 2});
  // Shifts of 00011 sorted: 00011, 00110, 01100, 10001, 11000; the shifts
  // land at ranks 1,2,3,5,4.
  CHECK(lexidynamic_permutation(BinaryWord("00011")) == std::vector<std::size_t>{1, 2, 3, 5, 4});
  // Periodic word: duplicate ranks broken by shift order.
  CHECK(lexidynamic_permutation(BinaryWord("0101")) == std::vector<std::size_t>{1, 3, 2, 4});
}

TEST_CASE("lexidynamic permutation recovers the shift sequence") {
  for (const char* s : {"00011", "0101", "0010011", "1101000", "10"}) {
    const BinaryWord w(s);
    const OrbitVector orbit = build_orbit(w);
    const auto rank = lexidynamic_permutation(w);
    std::vector<std::size_t> seen;
    for (std::size_t i = 0; i < w.length(); ++i) {
      CHECK(orbit.words[rank[i] - 1] == rotate(w, i));
      seen.push_back(rank[i]);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == i + 1);  // bijection
  }
}

TEST_CASE("product ranking") {
  CHECK(assign_product_ranks({Int(5), Int(2), Int(9)}) == std::vector<std::size_t>{2, 1, 3});
  CHECK_THROWS_AS(assign_product_ranks({Int(4), Int(7), Int(4)}), DuplicateProduct);
  try {
    assign_product_ranks({Int(4), Int(7), Int(4)});
  } catch (const DuplicateProduct& dup) {
    CHECK(dup.first() == "1");
    CHECK(dup.second() == "3");
  }
}

TEST_CASE("lexiprod permutation for the 14-orbit family") {
  const LexiProdPermutation perm = lexiprod_permutation(4, 9);
  REQUIRE(perm.size() == 14);
  for (std::size_t i = 0; i < 14; ++i) CHECK(perm.products[i].str() == kW49Products[i]);
  CHECK(perm.product_rank ==
        std::vector<std::size_t>{1, 2, 4, 3, 5, 9, 7, 8, 10, 6, 11, 12, 13, 14});

  std::vector<std::string> over, under;
  for (std::size_t i = 0; i < 14; ++i) {
    if (perm.classes[i] == BalanceClass::over) over.push_back(perm.lex_order[i].str());
    if (perm.classes[i] == BalanceClass::under) under.push_back(perm.lex_order[i].str());
  }
  CHECK(over == std::vector<std::string>{"000011101", "000111001"});
  CHECK(under == std::vector<std::string>{"000011011", "000101011", "000110101"});
}

TEST_CASE("lexiprod permutation small cases") {
  const LexiProdPermutation w25 = lexiprod_permutation(2, 5);
  CHECK(w25.product_rank == std::vector<std::size_t>{1, 2});
  CHECK(w25.products == std::vector<Int>{Int(88128), Int(162000)});
  CHECK(w25.classes == std::vector<BalanceClass>{BalanceClass::equal, BalanceClass::equal});

  const LexiProdPermutation w12 = lexiprod_permutation(1, 2);
  CHECK(w12.size() == 1);
  CHECK(w12.product_rank == std::vector<std::size_t>{1});
  CHECK(w12.classes.front() == BalanceClass::equal);
}

TEST_CASE("lexiprod endpoints are fixed whenever the extremes are proven") {
  for (unsigned q = 2; q <= 12; ++q) {
    for (unsigned p = 1; p < q; ++p) {
      const LexiProdPermutation perm = lexiprod_permutation(p, q);
      std::vector<std::size_t> sorted = perm.product_rank;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i + 1);
      if (p < q - p) CHECK(perm.product_rank.front() == 1);
      if (std::gcd(p, q) == 1) CHECK(perm.product_rank.back() == perm.size());
    }
  }
}

TEST_CASE("balance class names") {
  CHECK(std::string(balance_class_name(BalanceClass::over)) == "over");
  CHECK(std::string(balance_class_name(BalanceClass::under)) == "under");
  CHECK(std::string(balance_class_name(BalanceClass::equal)) == "equal");
}
