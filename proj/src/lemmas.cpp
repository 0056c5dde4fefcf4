#include "orbitlab/lemmas.hpp"

#include <algorithm>
#include <stdexcept>

#include "orbitlab/orbit.hpp"

namespace orbitlab {

namespace {

// ---------------------------------------------------------------------------
// Equality/inequality chains over generalized expansions.
// ---------------------------------------------------------------------------

enum class Rel { eq, gt };

struct Chain {
  std::vector<GenExpansion> exprs;
  std::vector<Rel> rels;  // rels[i] relates exprs[i] to exprs[i+1]
};

GenExpansion expand(std::initializer_list<PatternPiece> pieces) { return from_pattern(pieces); }

// Staircase-sum pattern 0 1 2 ... (m-1) m^k (m-1) ... 2 1; the closed form of
// the first q-p partial sums of the orbit of 0^{q-p} 1^p (m = min(p, q-p)).
GenExpansion pyramid(long m, long plateau) {
  return from_pattern({ramp_up(0, m - 1), run(m, plateau), ramp_down(m - 1, 1)});
}

// Final element of the item-1 chain: 0 1 2 ... (q-2) (2q).
GenExpansion staircase_with_cap(unsigned q) {
  return from_pattern({ramp_up(0, static_cast<long>(q) - 2), run(2L * q)});
}

Chain lemma3_chain(int item, unsigned q, unsigned p) {
  const long n = static_cast<long>(q);
  Chain c;
  switch (item) {
    case 1: {
      // (040^{q-2}) = (0160^{q-3}) = (01280^{q-4}) = ... = (0123...(q-2)(2q))
      for (long t = 1; t <= n - 1; ++t)
        c.exprs.push_back(from_pattern({ramp_up(0, t - 1), run(2 * t + 2), run(0, n - 1 - t)}));
      c.rels.assign(c.exprs.size() - 1, Rel::eq);
      break;
    }
    case 2: {
      if (p < 1 || p > q - p) throw std::invalid_argument("lemma 3 item 2 needs 1 <= p <= q-p");
      c.exprs.push_back(staircase_with_cap(q));
      c.exprs.push_back(pyramid(p, n - 2L * p + 1));
      c.rels = {Rel::gt};
      break;
    }
    case 3: {
      if (p <= q - p || p >= q) throw std::invalid_argument("lemma 3 item 3 needs q-p < p < q");
      c.exprs.push_back(staircase_with_cap(q));
      c.exprs.push_back(pyramid(n - p, 2L * p - n + 1));
      c.rels = {Rel::gt};
      break;
    }
    case 4:
      c.exprs = {expand({run(0), run(4), run(0, n - 2)}),
                 expand({run(0), run(3), run(2), run(0, n - 3)}),
                 expand({run(0), run(3), run(1), run(2), run(0, n - 4)}),
                 expand({run(0), run(2), run(3), run(2), run(0, n - 4)})};
      c.rels = {Rel::eq, Rel::eq, Rel::eq};
      break;
    case 5:
      c.exprs = {expand({run(0), run(2), run(3), run(1), run(1), run(2), run(1), run(0, n - 7)}),
                 expand({run(0), run(2), run(3), run(1), run(2), run(0), run(1), run(0, n - 7)}),
                 expand({run(0), run(2), run(3), run(2), run(0, 2), run(1), run(0, n - 7)}),
                 expand({run(0), run(2), run(3), run(2), run(0, n - 4)})};
      c.rels = {Rel::eq, Rel::eq, Rel::gt};
      break;
    case 6:
      c.exprs = {expand({run(0), run(2), run(2), run(0, n - 3)}),
                 expand({run(0), run(1), run(4), run(0, n - 3)}),
                 expand({run(0), run(1), run(2, n - 3), run(4)}),
                 expand({run(0), run(1), run(2, n - 3), run(1)})};
      c.rels = {Rel::eq, Rel::eq, Rel::gt};
      break;
    case 7:
      c.exprs = {expand({run(0), run(2), run(3), run(1), run(0, n - 4)}),
                 expand({run(0), run(1), run(2), run(7), run(0, n - 4)}),
                 expand({run(0), run(1), run(2), run(3), run(4, n - 5), run(8)}),
                 expand({run(0), run(1), run(2), run(3), run(4, n - 7), run(3), run(2), run(1)})};
      c.rels = {Rel::eq, Rel::eq, Rel::gt};
      break;
    case 8:
      c.exprs = {expand({run(0), run(2), run(2), run(2), run(3), run(2), run(1), run(1), run(0, n - 8)}),
                 expand({run(0), run(2), run(2), run(2), run(4), run(0), run(1), run(1), run(0, n - 8)}),
                 expand({run(0), run(2), run(2), run(2), run(4), run(0, n - 5)}),
                 expand({run(0), run(2), run(2), run(4), run(0), run(0, n - 5)}),
                 expand({run(0), run(2), run(3), run(2), run(0, n - 4)})};
      c.rels = {Rel::eq, Rel::gt, Rel::eq, Rel::eq};
      break;
    case 9:
      c.exprs = {expand({run(0), run(2), run(2), run(2), run(2), run(1), run(1), run(0, n - 7)}),
                 expand({run(0), run(2), run(3), run(0), run(2), run(1), run(1), run(0, n - 7)}),
                 expand({run(0), run(2), run(3), run(1), run(0), run(1), run(1), run(0, n - 7)}),
                 expand({run(0), run(2), run(3), run(1), run(0, n - 4)}),
                 expand({run(0), run(1), run(2), run(3), run(4, n - 7), run(3), run(2), run(1)})};
      c.rels = {Rel::eq, Rel::eq, Rel::gt, Rel::gt};
      break;
    case 10:
      c.exprs = {expand({run(0), run(2), run(2), run(1), run(2), run(1), run(0, n - 6)}),
                 expand({run(0), run(2), run(2), run(1), run(2), run(0, n - 5)}),
                 expand({run(0), run(1), run(5), run(0, n - 3)}),
                 expand({run(0), run(1), run(2), run(3, n - 4), run(6)}),
                 expand({run(0), run(1), run(2), run(3, n - 5), run(2), run(1)})};
      c.rels = {Rel::gt, Rel::eq, Rel::eq, Rel::gt};
      break;
    case 11:
      c.exprs = {expand({run(0), run(2), run(1), run(1), run(2), run(0, n - 5)}),
                 expand({run(0), run(1), run(3), run(1), run(2), run(0, n - 5)}),
                 expand({run(0), run(1), run(4), run(0, 2), run(0, n - 5)}),
                 expand({run(0), run(1), run(2, n - 3), run(4)}),
                 expand({run(0), run(1), run(2, n - 3), run(1)})};
      c.rels = {Rel::eq, Rel::eq, Rel::eq, Rel::gt};
      break;
    default:
      throw std::invalid_argument("lemma 3 item must be in 1..11");
  }
  return c;
}

}  // namespace

unsigned lemma3_min_q(int item) {
  switch (item) {
    case 1: case 2: return 2;
    case 3: case 6: return 3;
    case 4: return 4;
    case 11: return 5;
    case 10: return 6;
    case 5: case 7: case 9: return 7;
    case 8: return 8;
    default: throw std::invalid_argument("lemma 3 item must be in 1..11");
  }
}

bool lemma3_requires_p(int item) { return item == 2 || item == 3; }

Lemma3Values check_lemma3_values(int item, unsigned q, unsigned p) {
  if (q < lemma3_min_q(item))
    throw std::invalid_argument("lemma 3: q too small for this item's patterns");
  const Chain chain = lemma3_chain(item, q, p);
  std::vector<Rational> values;
  values.reserve(chain.exprs.size());
  for (const GenExpansion& e : chain.exprs) values.push_back(evaluate(e));
  bool holds = true;
  for (std::size_t i = 0; i < chain.rels.size(); ++i) {
    if (chain.rels[i] == Rel::eq)
      holds = holds && values[i] == values[i + 1];
    else
      holds = holds && values[i] > values[i + 1];
  }
  return {values.front(), values.back(), holds};
}

bool check_lemma3(int item, unsigned q, unsigned p) {
  return check_lemma3_values(item, q, p).holds;
}

// ---------------------------------------------------------------------------
// Scaled-word inequalities.
// ---------------------------------------------------------------------------

namespace {

using Runs = std::vector<std::pair<std::uint8_t, std::size_t>>;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

Lemma45Instance make_instance(Rational mult, const Runs& lhs, const Runs& prefix, bool strict = true) {
  return {std::move(mult), word_runs(lhs), word_runs(prefix), strict};
}

Lemma45Instance lemma45_item(int lemma, int item, const Lemma45Params& P) {
  const auto [a, b, b1, b2, a1, a2] = P;
  if (lemma == 4) {
    switch (item) {
      case 1:
        require(b1 >= 3, "lemma 4 item 1 needs b1 >= 3");
        return make_instance(2, {{0, b1}, {1, a}, {0, b2}}, {{0, b1 - 2}, {1, 1}});
      case 2:
        require(a + b >= 1, "lemma 4 item 2 needs a+b >= 1");
        return make_instance(4, {{0, 5}, {1, a}, {0, b}}, {{0, 2}, {1, 1}});
      case 3:
        require(a + b >= 1, "lemma 4 item 3 needs a+b >= 1");
        return make_instance(Rational(21, 8), {{0, 4}, {1, a}, {0, b}},
                             {{0, 2}, {1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}});
      case 4:
        require(b1 >= 2, "lemma 4 item 4 needs b1 >= 2");
        return make_instance(1, {{0, b1}, {1, a}, {0, b2}}, {{0, b1 - 1}, {1, 1}});
      case 5:
        require(a + b >= 1, "lemma 4 item 5 needs a+b >= 1");
        return make_instance(Rational(1, 2), {{0, 1}, {1, a}, {0, b}}, {{0, 1}, {1, 1}});
      case 6:
        require(a + b >= 1, "lemma 4 item 6 needs a+b >= 1");
        return make_instance(1, {{1, 1}, {0, b}, {1, a}}, {{1, 1}}, /*strict=*/false);
      case 7:
        require(a + b >= 1, "lemma 4 item 7 needs a+b >= 1");
        return make_instance(Rational(2, 3), {{1, 2}, {0, b}, {1, a}}, {{1, 1}});
      case 8:
        require(a + b >= 1, "lemma 4 item 8 needs a+b >= 1");
        return make_instance(Rational(4, 7), {{1, 3}, {0, b}, {1, a}}, {{1, 1}});
      case 9:
        require(a1 >= 1, "lemma 4 item 9 needs a1 >= 1");
        return make_instance(Rational(1, 2), {{1, a1}, {0, b}, {1, a2}}, {{1, 1}});
      default:
        throw std::invalid_argument("lemma 4 item must be in 1..9");
    }
  }
  switch (item) {
    case 1:
      require(b1 >= 1, "lemma 5 item 1 needs b1 >= 1");
      return make_instance(Rational(3, 2), {{0, b1 + 1}, {1, a}, {0, b2}}, {{0, b1}, {1, 2}});
    case 2:
      require(b1 >= 1, "lemma 5 item 2 needs b1 >= 1");
      return make_instance(Rational(11, 8), {{0, b1 + 1}, {1, a}, {0, b2}},
                           {{0, b1}, {1, 1}, {0, 1}, {1, 2}});
    case 3:
      return make_instance(Rational(8, 3), {{0, 4}, {1, 2}, {0, b}}, {{0, 2}, {1, 1}});
    case 4:
      require(a + b >= 1, "lemma 5 item 4 needs a+b >= 1");
      return make_instance(Rational(13, 8), {{0, 3}, {1, a}, {0, b}},
                           {{0, 2}, {1, 2}, {0, 1}, {1, 1}});
    case 5:
      // Exact boundary: the unique admissible suffix gives equality for every b.
      return make_instance(Rational(5, 3), {{0, 3}, {1, 2}, {0, b}},
                           {{0, 2}, {1, 1}, {0, 1}, {1, 1}}, /*strict=*/false);
    case 6:
      require(a + b >= 1, "lemma 5 item 6 needs a+b >= 1");
      return make_instance(Rational(3, 4), {{0, 1}, {1, a}, {0, b}}, {{0, 1}, {1, 2}});
    case 7:
      return make_instance(Rational(2, 3), {{0, b1}, {1, 2}, {0, b2}, {1, a}}, {{0, b1}, {1, 1}});
    case 8:
      require(a1 >= 1 && b >= 1, "lemma 5 item 8 needs a1 >= 1 and b >= 1");
      return make_instance(Rational(3, 4), {{1, a1}, {0, b}, {1, a2}}, {{1, 2}});
    case 9:
      require(b2 >= 1, "lemma 5 item 9 needs b2 >= 1");
      // Equality at a = 0 (minimal suffix); strict for a >= 1.
      return make_instance(Rational(5, 6), {{0, b1}, {1, 2}, {0, b2}, {1, a}},
                           {{0, b1}, {1, 1}, {0, 1}, {1, 1}}, /*strict=*/a >= 1);
    default:
      throw std::invalid_argument("lemma 5 item must be in 1..9");
  }
}

bool compare(const Lemma45Instance& inst, const Int& rhs_value) {
  const Rational lhs = inst.multiplier * Rational(base2_value(inst.lhs));
  return inst.strict ? lhs < rhs_value : lhs <= rhs_value;
}

Int rhs_value_for(const Lemma45Instance& inst, std::span<const std::uint8_t> suffix) {
  Int v = base2_value(inst.rhs_prefix);
  for (std::uint8_t bit : suffix) v = v * 2 + bit;
  return v;
}

bool check_item(const Lemma45Instance& inst, std::span<const std::uint8_t> suffix) {
  const auto shape = suffix_shape(inst);
  if (!shape) throw std::invalid_argument("lemma check: no admissible suffix for these parameters");
  unsigned ones = 0;
  for (std::uint8_t bit : suffix) {
    if (bit > 1) throw std::invalid_argument("lemma check: suffix letters must be 0 or 1");
    ones += bit;
  }
  if (suffix.size() != shape->length || ones != shape->ones)
    throw std::invalid_argument("lemma check: suffix violates the equal-length/equal-count side condition");
  return compare(inst, rhs_value_for(inst, suffix));
}

LemmaCheck min_witness(const Lemma45Instance& inst) {
  LemmaCheck result;
  result.lhs = inst.multiplier * Rational(base2_value(inst.lhs));
  const auto shape = suffix_shape(inst);
  if (!shape) return result;  // vacuous
  std::vector<std::uint8_t> suffix(shape->length - shape->ones, 0);
  suffix.insert(suffix.end(), shape->ones, 1);
  result.rhs = Rational(rhs_value_for(inst, suffix));
  result.suffixes_checked = 1;
  result.outcome = compare(inst, rhs_value_for(inst, suffix)) ? LemmaOutcome::holds : LemmaOutcome::fails;
  return result;
}

LemmaCheck check_all(const Lemma45Instance& inst, std::size_t max_suffix_len) {
  const auto shape = suffix_shape(inst);
  if (!shape || shape->length > max_suffix_len) return min_witness(inst);
  LemmaCheck result;
  result.lhs = inst.multiplier * Rational(base2_value(inst.lhs));
  std::vector<std::uint8_t> suffix(shape->length - shape->ones, 0);
  suffix.insert(suffix.end(), shape->ones, 1);
  result.rhs = Rational(rhs_value_for(inst, suffix));  // ascending start is the minimal witness
  result.outcome = LemmaOutcome::holds;
  do {
    ++result.suffixes_checked;
    if (!compare(inst, rhs_value_for(inst, suffix))) result.outcome = LemmaOutcome::fails;
  } while (std::next_permutation(suffix.begin(), suffix.end()));
  return result;
}

template <typename Field>
void sweep(std::vector<Lemma45Params>& out, unsigned limit, Field field,
           const std::vector<Lemma45Params>& base) {
  for (const Lemma45Params& p : base) {
    for (unsigned v = 0; v <= limit; ++v) {
      Lemma45Params next = p;
      next.*field = v;
      out.push_back(next);
    }
  }
}

std::vector<Lemma45Params> grid(unsigned limit, const std::vector<unsigned Lemma45Params::*>& fields) {
  std::vector<Lemma45Params> combos{Lemma45Params{}};
  for (auto field : fields) {
    std::vector<Lemma45Params> next;
    sweep(next, limit, field, combos);
    combos = std::move(next);
  }
  return combos;
}

std::vector<Lemma45Params> filter_valid(int lemma, int item, std::vector<Lemma45Params> combos) {
  std::vector<Lemma45Params> valid;
  for (const Lemma45Params& p : combos) {
    try {
      lemma45_item(lemma, item, p);
      valid.push_back(p);
    } catch (const std::invalid_argument&) {
      // side condition violated; not part of the grid
    }
  }
  return valid;
}

std::vector<Lemma45Params> param_grid(int lemma, int item, unsigned limit) {
  using F = unsigned Lemma45Params::*;
  std::vector<F> fields;
  if (lemma == 4) {
    switch (item) {
      case 1: case 4: fields = {&Lemma45Params::a, &Lemma45Params::b1, &Lemma45Params::b2}; break;
      case 9: fields = {&Lemma45Params::a1, &Lemma45Params::b, &Lemma45Params::a2}; break;
      default: fields = {&Lemma45Params::a, &Lemma45Params::b}; break;
    }
  } else {
    switch (item) {
      case 1: case 2: fields = {&Lemma45Params::a, &Lemma45Params::b1, &Lemma45Params::b2}; break;
      case 3: case 5: fields = {&Lemma45Params::b}; break;
      case 7: case 9: fields = {&Lemma45Params::a, &Lemma45Params::b1, &Lemma45Params::b2}; break;
      case 8: fields = {&Lemma45Params::a1, &Lemma45Params::b, &Lemma45Params::a2}; break;
      default: fields = {&Lemma45Params::a, &Lemma45Params::b}; break;
    }
  }
  return filter_valid(lemma, item, grid(limit, fields));
}

}  // namespace

Lemma45Instance lemma4_item(int item, const Lemma45Params& params) { return lemma45_item(4, item, params); }
Lemma45Instance lemma5_item(int item, const Lemma45Params& params) { return lemma45_item(5, item, params); }

std::optional<SuffixShape> suffix_shape(const Lemma45Instance& inst) {
  if (inst.lhs.length() < inst.rhs_prefix.length()) return std::nullopt;
  const std::size_t len = inst.lhs.length() - inst.rhs_prefix.length();
  if (inst.lhs.ones() < inst.rhs_prefix.ones()) return std::nullopt;
  const unsigned ones = inst.lhs.ones() - inst.rhs_prefix.ones();
  if (ones > len) return std::nullopt;
  return SuffixShape{len, ones};
}

bool check_lemma4(int item, const Lemma45Params& params, std::span<const std::uint8_t> suffix) {
  return check_item(lemma4_item(item, params), suffix);
}

bool check_lemma5(int item, const Lemma45Params& params, std::span<const std::uint8_t> suffix) {
  return check_item(lemma5_item(item, params), suffix);
}

bool check_lemma4(int item, const Lemma45Params& params, const BinaryWord& w) {
  return check_lemma4(item, params, std::span<const std::uint8_t>(w.bits()));
}

bool check_lemma5(int item, const Lemma45Params& params, const BinaryWord& w) {
  return check_lemma5(item, params, std::span<const std::uint8_t>(w.bits()));
}

LemmaCheck check_lemma4_min_witness(int item, const Lemma45Params& params) {
  return min_witness(lemma4_item(item, params));
}

LemmaCheck check_lemma5_min_witness(int item, const Lemma45Params& params) {
  return min_witness(lemma5_item(item, params));
}

LemmaCheck check_lemma4_all(int item, const Lemma45Params& params, std::size_t max_suffix_len) {
  return check_all(lemma4_item(item, params), max_suffix_len);
}

LemmaCheck check_lemma5_all(int item, const Lemma45Params& params, std::size_t max_suffix_len) {
  return check_all(lemma5_item(item, params), max_suffix_len);
}

std::vector<Lemma45Params> lemma4_param_grid(int item, unsigned limit) {
  return param_grid(4, item, limit);
}

std::vector<Lemma45Params> lemma5_param_grid(int item, unsigned limit) {
  return param_grid(5, item, limit);
}

}  // namespace orbitlab
