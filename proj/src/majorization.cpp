#include "orbitlab/majorization.hpp"

#include <algorithm>

namespace orbitlab {

namespace {

bool dominates(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

}  // namespace

SumProfile sum_profile(const Base2Orbit& o) {
  SumProfile s;
  s.sums.reserve(o.values.size());
  Int acc = 0;
  for (const Int& v : o.values) {
    acc += v;
    s.sums.push_back(acc);
  }
  return s;
}

ProductProfile product_profile(const Base2Orbit& o) {
  ProductProfile pp;
  pp.products.reserve(o.values.size());
  Int acc = 1;
  for (const Int& v : o.values) {
    acc *= v;
    pp.products.push_back(acc);
  }
  return pp;
}

bool sum_majorizes(const SumProfile& a, const SumProfile& b) {
  if (a.sums.empty() || a.sums.size() != b.sums.size() || a.sums.back() != b.sums.back())
    throw std::invalid_argument("sum_majorizes: profiles from different families");
  return dominates(a.sums, b.sums);
}

bool product_majorizes(const ProductProfile& a, const ProductProfile& b) {
  if (a.products.empty() || a.products.size() != b.products.size())
    throw std::invalid_argument("product_majorizes: profiles from different families");
  return dominates(a.products, b.products);
}

ProfileCollision::ProfileCollision(std::string a, std::string b)
    : std::runtime_error("distinct orbits " + a + " and " + b + " share a profile; relation is not antisymmetric"),
      a_(std::move(a)),
      b_(std::move(b)) {}

MajorizationPoset build_poset(unsigned p, unsigned q, PosetKind kind) {
  MajorizationPoset poset;
  poset.kind = kind;
  poset.p = p;
  poset.q = q;
  poset.nodes = enumerate_orbits(p, q);
  const std::size_t n = poset.nodes.size();

  std::vector<std::vector<Int>> profiles;
  profiles.reserve(n);
  for (const BinaryWord& w : poset.nodes) {
    const Base2Orbit o = base2_orbit(w);
    profiles.push_back(kind == PosetKind::sum ? sum_profile(o).sums : product_profile(o).products);
  }

  poset.relation.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) poset.relation[i][j] = dominates(profiles[i], profiles[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (poset.relation[i][j] && poset.relation[j][i])
        throw ProfileCollision(poset.nodes[i].str(), poset.nodes[j].str());
    }
  }

  // Transitive reduction of the strict relation; n stays small at desk scale.
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      if (i == j || !poset.relation[i][j]) continue;
      bool covering = true;
      for (std::size_t k = 0; k < n && covering; ++k) {
        if (k != i && k != j && poset.relation[i][k] && poset.relation[k][j]) covering = false;
      }
      if (covering) poset.hasse_edges.emplace_back(i, j);
    }
  }
  return poset;
}

std::vector<std::pair<std::string, std::string>> hasse_edge_words(const MajorizationPoset& poset) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(poset.hasse_edges.size());
  for (const auto& [from, to] : poset.hasse_edges)
    out.emplace_back(poset.nodes[from].str(), poset.nodes[to].str());
  return out;
}

ExtremalElements extremal_elements(const MajorizationPoset& poset) {
  ExtremalElements ext;
  const std::size_t n = poset.nodes.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool least = true, greatest = true;
    for (std::size_t j = 0; j < n; ++j) {
      least = least && poset.relation[i][j];
      greatest = greatest && poset.relation[j][i];
    }
    if (least) ext.least = poset.nodes[i];
    if (greatest) ext.greatest = poset.nodes[i];
  }
  return ext;
}

std::vector<std::vector<char>> closure_from_edges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = 1;
  for (const auto& [from, to] : edges) reach[from][to] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = 1;
      }
    }
  }
  return reach;
}

}  // namespace orbitlab
