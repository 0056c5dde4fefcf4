#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "orbitlab/report.hpp"

using namespace orbitlab;
using nlohmann::json;

TEST_CASE("numeric rendering helpers") {
  CHECK(digits10(Int(0)) == 1);
  CHECK(digits10(Int(999)) == 3);
  CHECK(digits10(Int(1000)) == 4);

  CHECK(round_significant(Int(2744), 2) == 2700);
  CHECK(round_significant(Int(937024), 2) == 940000);
  CHECK(round_significant(Int(875), 2) == 870);  // tie goes toward zero
  CHECK(round_significant(Int(876), 2) == 880);
  CHECK(round_significant(Int(98), 2) == 98);
  CHECK(round_significant(Int(0), 2) == 0);

  CHECK(shift_decimal(Int(98), 2) == "0.98");
  CHECK(shift_decimal(Int(1500), 2) == "15");
  CHECK(shift_decimal(Int(2400), 3) == "2.4");
  CHECK(shift_decimal(Int(7), 0) == "7");
  CHECK(shift_decimal(Int(0), 4) == "0");

  CHECK(rational_str(Rational(21, 8)) == "21/8");
  CHECK(rational_str(Rational(42, 6)) == "7");
  CHECK(rational_str(Rational(0)) == "0");
}

TEST_CASE("enumerate exports") {
  CHECK(enumerate_csv(2, 5) == "rep,I1,I2,I3,I4,I5\n00011,3,6,12,17,24\n00101,5,9,10,18,20\n");

  const json orbit = orbit_json(BinaryWord("00101"));
  CHECK(orbit["rep"] == "00101");
  CHECK(orbit["words"] == json::array({"00101", "01001", "01010", "10010", "10100"}));
  CHECK(orbit["base2"] == json::array({"5", "9", "10", "18", "20"}));

  const json family = enumerate_json(2, 5);
  CHECK(family["p"] == 2);
  CHECK(family["q"] == 5);
  REQUIRE(family["orbits"].size() == 2);
  CHECK(family["orbits"][0]["rep"] == "00011");
  CHECK(family["orbits"][1] == orbit);
}

TEST_CASE("table exports") {
  CHECK(table_csv(1, 2, TableKind::sums) == "rep,I1,I2,S1,S2\n01,1,2,1,3\n");

  const std::string sums38 = table_csv(3, 8, TableKind::sums);
  std::istringstream lines(sums38);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "rep,I1,I2,I3,I4,I5,I6,I7,I8,S1,S2,S3,S4,S5,S6,S7,S8");
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.substr(line.size() - 4) == ",765");
  }
  CHECK(rows == 7);

  const json t = table_json(3, 8, TableKind::products, /*rounded=*/true);
  CHECK(t["kind"] == "products");
  CHECK(t["exponents"] == json::array({0, 2, 4, 6, 8, 10, 12, 14}));
  CHECK(t["orbits"][0]["rep"] == "00000111");
  CHECK(t["orbits"][0]["products"][1] == "98");
  CHECK(t["orbits"][0]["rounded"][1] == "0.98");
  CHECK(t["orbits"][5]["rounded"][1] == "8.7");  // the rounding tie
}

TEST_CASE("rounded presentation") {
  const std::string csv = rounded_products_csv(3, 8);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "i,00000111,00001011,00001101,00010011,00010101,00011001,00100101,x");
  std::getline(lines, line);
  CHECK(line == "1,7,11,13,19,21,25,37,0");
  std::getline(lines, line);
  CHECK(line == "2,0.98,2.4,3.4,7.2,8.8,8.7,15,2");
}

TEST_CASE("poset DOT export") {
  CHECK(poset_dot(build_poset(1, 2, PosetKind::sum)) ==
        "digraph \"W_1_2_sum\" {\n  node [shape=box];\n  \"01\";\n}\n");

  const std::string dot = poset_dot(build_poset(3, 8, PosetKind::sum));
  CHECK(dot.find("\"00100101\" -> \"00011001\";") != std::string::npos);
  CHECK(dot.find("\"00001011\" -> \"00000111\";") != std::string::npos);
  // Edges never point up the order.
  CHECK(dot.find("\"00000111\" -> ") == std::string::npos);
}

TEST_CASE("lexiprod exports") {
  const LexiProdPermutation w12 = lexiprod_permutation(1, 2);
  CHECK(lexiprod_csv(w12) == "lex_rank,orbit,product,product_rank,class\n1,01,2,1,equal\n");
  CHECK(lexiprod_plot_csv(w12) == "lex_rank,product_rank\n1,1\n");

  const LexiProdPermutation w49 = lexiprod_permutation(4, 9);
  const json j = lexiprod_json(w49);
  CHECK(j["mapping"].size() == 14);
  CHECK(j["mapping"][5]["orbit"] == "000101011");
  CHECK(j["mapping"][5]["product_rank"] == 9);
  CHECK(j["mapping"][5]["class"] == "under");
  CHECK(j["mapping"][13]["product"] == "678501146123915400000");

  const std::string plot = lexiprod_plot_csv(w49);
  CHECK(plot.find("6,9\n") != std::string::npos);
  CHECK(plot.find("10,6\n") != std::string::npos);
}

TEST_CASE("verification report JSON") {
  const json t4 = theorem_report_json(verify_theorem4(3, 8));
  CHECK(t4["theorem"] == "t4");
  CHECK(t4["p"] == 3);
  CHECK(t4["q"] == 8);
  CHECK(t4["holds"] == true);
  CHECK(t4["in_hypothesis"] == true);
  CHECK(t4["status"] == "holds");
  CHECK(t4["orbits"] == 7);
  CHECK(t4["counterexamples"].empty());

  const json c3 = theorem_report_json(verify_conjecture3(3, 8));
  CHECK(c3["conjecture"] == true);
  CHECK(c3["counterexample_found"] == false);

  const json skipped = theorem_report_json(verify_conjecture3(2, 4));
  CHECK(skipped["status"] == "skipped");
}

TEST_CASE("lemma report JSON") {
  const json l3 = lemma3_report_json(2, 8, 3, check_lemma3_values(2, 8, 3));
  CHECK(l3["lemma"] == 3);
  CHECK(l3["item"] == 2);
  CHECK(l3["params"]["q"] == 8);
  CHECK(l3["params"]["p"] == 3);
  CHECK(l3["lhs"] == "256");
  CHECK(l3["rhs"] == "217");
  CHECK(l3["holds"] == true);

  const Lemma45Params params{.a = 3, .b = 1};
  const json l4 = lemma45_report_json(4, 3, params, check_lemma4_min_witness(3, params));
  CHECK(l4["lemma"] == 4);
  CHECK(l4["item"] == 3);
  CHECK(l4["lhs"] == "147/4");  // (21/8) * (00001110)_2 = 21 * 14 / 8
  CHECK(l4["rhs"] == "42");
  CHECK(l4["holds"] == true);
  CHECK(l4["vacuous"] == false);
}
