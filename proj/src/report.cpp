#include "orbitlab/report.hpp"

#include <sstream>

namespace orbitlab {

namespace {

using nlohmann::json;

struct FamilyTable {
  std::vector<BinaryWord> reps;
  std::vector<std::vector<Int>> values;    // base-2 orbits
  std::vector<std::vector<Int>> profiles;  // sums or products
};

FamilyTable family_table(unsigned p, unsigned q, TableKind kind) {
  FamilyTable t;
  t.reps = enumerate_orbits(p, q);
  for (const BinaryWord& w : t.reps) {
    const Base2Orbit o = base2_orbit(w);
    t.profiles.push_back(kind == TableKind::sums ? sum_profile(o).sums
                                                 : product_profile(o).products);
    t.values.push_back(o.values);
  }
  return t;
}

void append_ints(std::ostringstream& out, const std::vector<Int>& xs) {
  for (const Int& x : xs) out << "," << x.str();
}

json ints_json(const std::vector<Int>& xs) {
  json arr = json::array();
  for (const Int& x : xs) arr.push_back(x.str());
  return arr;
}

}  // namespace

json orbit_json(const BinaryWord& rep) {
  const OrbitVector orbit = build_orbit(rep);
  json words = json::array();
  for (const BinaryWord& w : orbit.words) words.push_back(w.str());
  json base2 = json::array();
  for (const BinaryWord& w : orbit.words) base2.push_back(base2_value(w).str());
  return json{{"rep", orbit.rep().str()}, {"words", words}, {"base2", base2}};
}

json enumerate_json(unsigned p, unsigned q) {
  json orbits = json::array();
  for (const BinaryWord& rep : enumerate_orbits(p, q)) orbits.push_back(orbit_json(rep));
  return json{{"p", p}, {"q", q}, {"orbits", orbits}};
}

std::string enumerate_csv(unsigned p, unsigned q) {
  std::ostringstream out;
  out << "rep";
  for (unsigned i = 1; i <= q; ++i) out << ",I" << i;
  out << "\n";
  for (const BinaryWord& rep : enumerate_orbits(p, q)) {
    out << rep.str();
    append_ints(out, base2_orbit(rep).values);
    out << "\n";
  }
  return out.str();
}

std::string table_csv(unsigned p, unsigned q, TableKind kind) {
  const FamilyTable t = family_table(p, q, kind);
  const char profile_letter = kind == TableKind::sums ? 'S' : 'P';
  std::ostringstream out;
  out << "rep";
  for (unsigned i = 1; i <= q; ++i) out << ",I" << i;
  for (unsigned i = 1; i <= q; ++i) out << "," << profile_letter << i;
  out << "\n";
  for (std::size_t j = 0; j < t.reps.size(); ++j) {
    out << t.reps[j].str();
    append_ints(out, t.values[j]);
    append_ints(out, t.profiles[j]);
    out << "\n";
  }
  return out.str();
}

RoundedPresentation rounded_products(const std::vector<std::vector<Int>>& products_by_orbit) {
  RoundedPresentation pres;
  if (products_by_orbit.empty()) return pres;
  const std::size_t q = products_by_orbit.front().size();
  pres.exponents.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    Int row_max = 0;
    for (const auto& products : products_by_orbit) row_max = std::max(row_max, products[i]);
    pres.exponents.push_back(2 * ((digits10(row_max) - 1) / 2));
  }
  pres.mantissas.reserve(products_by_orbit.size());
  for (const auto& products : products_by_orbit) {
    std::vector<std::string> row;
    row.reserve(q);
    for (std::size_t i = 0; i < q; ++i)
      row.push_back(shift_decimal(round_significant(products[i], 2), pres.exponents[i]));
    pres.mantissas.push_back(std::move(row));
  }
  return pres;
}

std::string rounded_products_csv(unsigned p, unsigned q) {
  const FamilyTable t = family_table(p, q, TableKind::products);
  const RoundedPresentation pres = rounded_products(t.profiles);
  std::ostringstream out;
  out << "i";
  for (const BinaryWord& rep : t.reps) out << "," << rep.str();
  out << ",x\n";
  for (unsigned i = 0; i < q; ++i) {
    out << (i + 1);
    for (std::size_t j = 0; j < t.reps.size(); ++j) out << "," << pres.mantissas[j][i];
    out << "," << pres.exponents[i] << "\n";
  }
  return out.str();
}

json table_json(unsigned p, unsigned q, TableKind kind, bool rounded) {
  const FamilyTable t = family_table(p, q, kind);
  json orbits = json::array();
  for (std::size_t j = 0; j < t.reps.size(); ++j) {
    json row{{"rep", t.reps[j].str()}, {"base2", ints_json(t.values[j])}};
    row[kind == TableKind::sums ? "sums" : "products"] = ints_json(t.profiles[j]);
    orbits.push_back(std::move(row));
  }
  json out{{"p", p}, {"q", q}, {"kind", kind == TableKind::sums ? "sums" : "products"},
           {"orbits", orbits}};
  if (rounded && kind == TableKind::products) {
    const RoundedPresentation pres = rounded_products(t.profiles);
    out["exponents"] = pres.exponents;
    for (std::size_t j = 0; j < t.reps.size(); ++j) out["orbits"][j]["rounded"] = pres.mantissas[j];
  }
  return out;
}

std::string poset_dot(const MajorizationPoset& poset) {
  std::ostringstream out;
  out << "digraph \"W_" << poset.p << "_" << poset.q << "_"
      << (poset.kind == PosetKind::sum ? "sum" : "product") << "\" {\n";
  out << "  node [shape=box];\n";
  for (const BinaryWord& w : poset.nodes) out << "  \"" << w.str() << "\";\n";
  for (const auto& [from, to] : poset.hasse_edges)
    out << "  \"" << poset.nodes[from].str() << "\" -> \"" << poset.nodes[to].str() << "\";\n";
  out << "}\n";
  return out.str();
}

std::string lexiprod_csv(const LexiProdPermutation& perm) {
  std::ostringstream out;
  out << "lex_rank,orbit,product,product_rank,class\n";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out << (i + 1) << "," << perm.lex_order[i].str() << "," << perm.products[i].str() << ","
        << perm.product_rank[i] << "," << balance_class_name(perm.classes[i]) << "\n";
  }
  return out.str();
}

std::string lexiprod_plot_csv(const LexiProdPermutation& perm) {
  std::ostringstream out;
  out << "lex_rank,product_rank\n";
  for (std::size_t i = 0; i < perm.size(); ++i) out << (i + 1) << "," << perm.product_rank[i] << "\n";
  return out.str();
}

json lexiprod_json(const LexiProdPermutation& perm) {
  json rows = json::array();
  for (std::size_t i = 0; i < perm.size(); ++i) {
    rows.push_back(json{{"lex_rank", i + 1},
                        {"orbit", perm.lex_order[i].str()},
                        {"product", perm.products[i].str()},
                        {"product_rank", perm.product_rank[i]},
                        {"class", balance_class_name(perm.classes[i])}});
  }
  return json{{"p", perm.p}, {"q", perm.q}, {"mapping", rows},
              {"note", "duplicate lexicographic ranks are broken by shift order"}};
}

json theorem_report_json(const TheoremReport& report) {
  json counterexamples = json::array();
  for (const Counterexample& c : report.counterexamples) {
    counterexamples.push_back(json{{"orbit", c.orbit},
                                   {"index", c.index},
                                   {"lhs", c.lhs.str()},
                                   {"rhs", c.rhs.str()}});
  }
  json out{{"theorem", report.theorem},
           {"p", report.p},
           {"q", report.q},
           {"in_hypothesis", report.in_hypothesis},
           {"checked", report.checked},
           {"holds", report.holds},
           {"orbits", report.orbits_checked},
           {"status", report.checked ? (report.holds ? "holds" : "fails") : "skipped"},
           {"counterexamples", counterexamples}};
  if (report.theorem == "c3") {
    out["conjecture"] = true;
    out["counterexample_found"] = report.checked && !report.holds;
  }
  return out;
}

json lemma3_report_json(int item, unsigned q, unsigned p, const Lemma3Values& values) {
  json params{{"q", q}};
  if (lemma3_requires_p(item)) params["p"] = p;
  return json{{"lemma", 3},
              {"item", item},
              {"params", params},
              {"lhs", rational_str(values.first)},
              {"rhs", rational_str(values.last)},
              {"holds", values.holds}};
}

json lemma45_report_json(int lemma, int item, const Lemma45Params& params, const LemmaCheck& check) {
  return json{{"lemma", lemma},
              {"item", item},
              {"params", json{{"a", params.a}, {"b", params.b}, {"b1", params.b1},
                              {"b2", params.b2}, {"a1", params.a1}, {"a2", params.a2}}},
              {"lhs", rational_str(check.lhs)},
              {"rhs", rational_str(check.rhs)},
              {"holds", check.outcome != LemmaOutcome::fails},
              {"vacuous", check.outcome == LemmaOutcome::vacuous},
              {"suffixes_checked", check.suffixes_checked}};
}

}  // namespace orbitlab
