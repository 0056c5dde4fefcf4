#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbitlab/orbit.hpp"

namespace orbitlab {

// Partial sums S_i = I_1 + ... + I_i of a base-2 orbit. Strictly increasing;
// the last entry equals (2^q - 1) * p for every member of the same family.
struct SumProfile {
  std::vector<Int> sums;
};

// Partial products P_i = I_1 * ... * I_i. Exact; these exceed 64 bits early.
struct ProductProfile {
  std::vector<Int> products;
};

SumProfile sum_profile(const Base2Orbit& o);
ProductProfile product_profile(const Base2Orbit& o);

// a precedes b (b majorizes a): true iff S_i(a) >= S_i(b) for every i.
// Profiles must come from the same family; length (and for sums the fixed
// total) are checked.
bool sum_majorizes(const SumProfile& a, const SumProfile& b);
bool product_majorizes(const ProductProfile& a, const ProductProfile& b);

enum class PosetKind { sum, product };

// Two distinct orbits with identical profiles would make the relation fail
// antisymmetry; none are known, and the builder refuses to guess.
class ProfileCollision : public std::runtime_error {
 public:
  ProfileCollision(std::string a, std::string b);
  const std::string& first() const noexcept { return a_; }
  const std::string& second() const noexcept { return b_; }

 private:
  std::string a_, b_;
};

struct MajorizationPoset {
  PosetKind kind;
  unsigned p = 0, q = 0;
  std::vector<BinaryWord> nodes;  // canonical representatives, lex order
  // relation[i][j]: nodes[i] precedes nodes[j] (profile of i dominates j's).
  std::vector<std::vector<char>> relation;
  // Covering pairs (from, to) with nodes[from] preceding nodes[to], listed
  // from the profile-dominant end downward (descending node indices).
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
};

MajorizationPoset build_poset(unsigned p, unsigned q, PosetKind kind);

// Hasse edges as representative strings, in stored order.
std::vector<std::pair<std::string, std::string>> hasse_edge_words(const MajorizationPoset& poset);

struct ExtremalElements {
  std::optional<BinaryWord> least;     // precedes every node
  std::optional<BinaryWord> greatest;  // preceded by every node
};

ExtremalElements extremal_elements(const MajorizationPoset& poset);

// Reflexive-transitive closure of the Hasse edges; used to check that the
// reduction regenerates the full relation.
std::vector<std::vector<char>> closure_from_edges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace orbitlab
