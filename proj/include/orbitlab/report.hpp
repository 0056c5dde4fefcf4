#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orbitlab/analysis.hpp"
#include "orbitlab/lemmas.hpp"

namespace orbitlab {

// All exports are deterministic: fixed orderings, no timestamps, big integers
// as decimal strings (they overflow both JSON numbers and 64-bit fields).

enum class TableKind { sums, products };

nlohmann::json orbit_json(const BinaryWord& rep);
nlohmann::json enumerate_json(unsigned p, unsigned q);
std::string enumerate_csv(unsigned p, unsigned q);

std::string table_csv(unsigned p, unsigned q, TableKind kind);
nlohmann::json table_json(unsigned p, unsigned q, TableKind kind, bool rounded = false);

// Two-significant-figure presentation of partial products with a shared
// per-index power-of-ten column: mantissa = P_i rounded (ties toward zero),
// x_i = 2 * floor((digits10(max_w P_i(w)) - 1) / 2).
struct RoundedPresentation {
  std::vector<std::size_t> exponents;               // x_i per profile index
  std::vector<std::vector<std::string>> mantissas;  // [orbit][index]
};

RoundedPresentation rounded_products(const std::vector<std::vector<Int>>& products_by_orbit);

// Row-per-index layout mirroring the rounded-table presentation.
std::string rounded_products_csv(unsigned p, unsigned q);

std::string poset_dot(const MajorizationPoset& poset);

std::string lexiprod_csv(const LexiProdPermutation& perm);
std::string lexiprod_plot_csv(const LexiProdPermutation& perm);  // staircase data
nlohmann::json lexiprod_json(const LexiProdPermutation& perm);

nlohmann::json theorem_report_json(const TheoremReport& report);
nlohmann::json lemma3_report_json(int item, unsigned q, unsigned p, const Lemma3Values& values);
nlohmann::json lemma45_report_json(int lemma, int item, const Lemma45Params& params,
                                   const LemmaCheck& check);

}  // namespace orbitlab
