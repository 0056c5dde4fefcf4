#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "orbitlab/majorization.hpp"

namespace orbitlab {

struct Counterexample {
  std::string orbit;      // offending representative (or a short description)
  std::size_t index = 0;  // 1-based profile index; q for whole-product claims
  Int lhs, rhs;           // the two values that violate the claimed inequality
};

// Outcome of one brute-force verification over a whole orbit family.
//
// in_hypothesis: the parameters satisfy the stated side conditions of the
// claim. Out-of-hypothesis parameters are still checked where the check makes
// sense ("exploratory"); such failures are reported but never fatal.
struct TheoremReport {
  std::string theorem;  // "t1", "t2", "t4", "t5", "t6", "c3"
  unsigned p = 0, q = 0;
  bool in_hypothesis = false;
  bool checked = false;
  bool holds = true;  // vacuously true when not checked
  std::size_t orbits_checked = 0;
  std::vector<Counterexample> counterexamples;
};

// t4: the partial sums of 0^{q-p}1^p are a lower envelope for the family
//     (any 1 <= p < q).
// t1: the balanced orbit's partial sums are an upper envelope (coprime p, q;
//     non-coprime parameters get the exploratory least-element variant).
TheoremReport verify_theorem4(unsigned p, unsigned q);
TheoremReport verify_theorem1(unsigned p, unsigned q);
std::vector<TheoremReport> verify_sum_extremes(unsigned p, unsigned q);  // {t4, t1}

// t5: 0^{q-p}1^p uniquely minimises the full orbit product (p < q-p;
//     exploratory otherwise).
// t2: the balanced orbit uniquely maximises it (coprime; exploratory
//     otherwise, then "argmax is unique and balanced").
TheoremReport verify_theorem5(unsigned p, unsigned q);
TheoremReport verify_theorem2(unsigned p, unsigned q);
std::vector<TheoremReport> verify_product_extremes(unsigned p, unsigned q);  // {t5, t2}

// t6: the partial products of 0^{q-p}1^p are a lower envelope (p < q-p;
//     exploratory otherwise).
// c3: the balanced orbit's partial products are an upper envelope. Open
//     conjecture: counterexamples are reportable output, never build-breaking.
TheoremReport verify_theorem6(unsigned p, unsigned q);
TheoremReport verify_conjecture3(unsigned p, unsigned q);
std::vector<TheoremReport> verify_partial_product_extreme(unsigned p, unsigned q);  // {t6, c3}

// Rank (1-based, within the sorted orbit vector) of each iterated shift:
// result[i] is the rank of sigma^i(w). Duplicate ranks from periodic words
// are broken by shift order (this convention is ours, not forced).
std::vector<std::size_t> lexidynamic_permutation(const BinaryWord& w);

enum class BalanceClass { over, under, equal };

// Two distinct orbits with the same full product cannot be ranked; the
// classification refuses to impose an arbitrary secondary order.
class DuplicateProduct : public std::runtime_error {
 public:
  DuplicateProduct(std::string a, std::string b);
  const std::string& first() const noexcept { return a_; }
  const std::string& second() const noexcept { return b_; }

 private:
  std::string a_, b_;
};

// 1-based ascending ranks of the given products; throws DuplicateProduct.
std::vector<std::size_t> assign_product_ranks(const std::vector<Int>& products);

struct LexiProdPermutation {
  unsigned p = 0, q = 0;
  std::vector<BinaryWord> lex_order;        // representatives, lex rank i+1
  std::vector<Int> products;                // full orbit product per lex rank
  std::vector<std::size_t> product_rank;    // 1-based product rank per lex rank
  std::vector<BalanceClass> classes;        // over iff product rank < lex rank
  std::size_t size() const { return lex_order.size(); }
};

LexiProdPermutation lexiprod_permutation(unsigned p, unsigned q);

const char* balance_class_name(BalanceClass c);

}  // namespace orbitlab
