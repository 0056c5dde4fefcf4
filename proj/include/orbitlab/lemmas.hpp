#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "orbitlab/expansion.hpp"
#include "orbitlab/numeric.hpp"
#include "orbitlab/word.hpp"

namespace orbitlab {

// ---------------------------------------------------------------------------
// Chains of generalized-expansion identities and inequalities (11 items).
// Each item is a family indexed by q (items 2 and 3 also take p); checking an
// item evaluates every expansion in its chain exactly and verifies each
// adjacent "=" or ">" step.
// ---------------------------------------------------------------------------

// Smallest q for which an item's digit patterns are well formed.
unsigned lemma3_min_q(int item);

// True for the two items whose right-hand side depends on p.
bool lemma3_requires_p(int item);

struct Lemma3Values {
  Rational first;  // value shared by the leading equality chain
  Rational last;   // value of the final (strictly smaller) expansion
  bool holds;
};

Lemma3Values check_lemma3_values(int item, unsigned q, unsigned p = 0);
bool check_lemma3(int item, unsigned q, unsigned p = 0);

// ---------------------------------------------------------------------------
// Scaled-word inequalities (9 + 9 items):
//     multiplier * (left word)_2  <  (prefix ++ w)_2
// for every binary suffix w making both sides equally long with equal letter
// counts. That pins |w| and |w|_1 exactly; some parameter choices admit no
// suffix at all and are reported as vacuous rather than guessed at.
//
// Two boundary families are equalities rather than strict inequalities and
// are verified as "<=": item 6 of the first table (stated with <=), item 5 of
// the second (the unique admissible suffix always gives exact equality), and
// item 9 of the second at a = 0. Tests pin those boundaries exactly.
// ---------------------------------------------------------------------------

struct Lemma45Params {
  unsigned a = 0, b = 0;    // 1-run / 0-run lengths
  unsigned b1 = 0, b2 = 0;  // leading / trailing 0-runs
  unsigned a1 = 0, a2 = 0;  // leading / trailing 1-runs
};

struct Lemma45Instance {
  Rational multiplier;
  BinaryWord lhs;         // fully determined left word
  BinaryWord rhs_prefix;  // fixed letters preceding the free suffix
  bool strict = true;     // false where equality is attainable
};

// Throws std::invalid_argument when the item's side conditions are violated.
Lemma45Instance lemma4_item(int item, const Lemma45Params& params);
Lemma45Instance lemma5_item(int item, const Lemma45Params& params);

struct SuffixShape {
  std::size_t length;
  unsigned ones;
};

// Dimensions of admissible suffixes; nullopt when none exist.
std::optional<SuffixShape> suffix_shape(const Lemma45Instance& inst);

// Comparison for one explicit suffix (must match suffix_shape; the empty
// suffix is legal when the shape demands length 0).
bool check_lemma4(int item, const Lemma45Params& params, std::span<const std::uint8_t> suffix);
bool check_lemma5(int item, const Lemma45Params& params, std::span<const std::uint8_t> suffix);
bool check_lemma4(int item, const Lemma45Params& params, const BinaryWord& w);
bool check_lemma5(int item, const Lemma45Params& params, const BinaryWord& w);

enum class LemmaOutcome { holds, fails, vacuous };

struct LemmaCheck {
  LemmaOutcome outcome = LemmaOutcome::vacuous;
  std::size_t suffixes_checked = 0;
  Rational lhs;  // multiplier * (left word)_2
  Rational rhs;  // minimal admissible right-hand value
};

// The right-hand side is minimised by w = 0^{zeros} 1^{ones}; checking that
// single witness covers every admissible suffix.
LemmaCheck check_lemma4_min_witness(int item, const Lemma45Params& params);
LemmaCheck check_lemma5_min_witness(int item, const Lemma45Params& params);

// Exhaustive check over all admissible suffixes. Suffixes longer than
// max_suffix_len fall back to the minimal witness (which already bounds the
// rest); suffixes_checked counts the enumerated ones.
LemmaCheck check_lemma4_all(int item, const Lemma45Params& params, std::size_t max_suffix_len = 12);
LemmaCheck check_lemma5_all(int item, const Lemma45Params& params, std::size_t max_suffix_len = 12);

// Grid sweep support: every parameter assignment with values in [0, limit]
// that satisfies an item's side conditions.
std::vector<Lemma45Params> lemma4_param_grid(int item, unsigned limit);
std::vector<Lemma45Params> lemma5_param_grid(int item, unsigned limit);

}  // namespace orbitlab
