#include "orbitlab/analysis.hpp"

#include <algorithm>
#include <numeric>

namespace orbitlab {

namespace {

struct Family {
  std::vector<BinaryWord> reps;
  std::vector<std::vector<Int>> profiles;  // sums or products, per rep
};

enum class ProfileKind { sums, products };

Family family_profiles(unsigned p, unsigned q, ProfileKind kind) {
  Family f;
  f.reps = enumerate_orbits(p, q);
  f.profiles.reserve(f.reps.size());
  for (const BinaryWord& w : f.reps) {
    const Base2Orbit o = base2_orbit(w);
    f.profiles.push_back(kind == ProfileKind::sums ? sum_profile(o).sums
                                                   : product_profile(o).products);
  }
  return f;
}

TheoremReport base_report(const char* id, unsigned p, unsigned q) {
  TheoremReport r;
  r.theorem = id;
  r.p = p;
  r.q = q;
  return r;
}

// Checks that profile `lo` is a lower envelope: lo[i] <= prof[i] for all
// profiles and indices. Violations are recorded against the offending orbit.
void check_lower_envelope(TheoremReport& r, const Family& f, std::size_t lo) {
  for (std::size_t j = 0; j < f.reps.size(); ++j) {
    for (std::size_t i = 0; i < f.profiles[j].size(); ++i) {
      if (f.profiles[lo][i] > f.profiles[j][i])
        r.counterexamples.push_back({f.reps[j].str(), i + 1, f.profiles[lo][i], f.profiles[j][i]});
    }
  }
  r.holds = r.counterexamples.empty();
}

void check_upper_envelope(TheoremReport& r, const Family& f, std::size_t hi) {
  for (std::size_t j = 0; j < f.reps.size(); ++j) {
    for (std::size_t i = 0; i < f.profiles[j].size(); ++i) {
      if (f.profiles[hi][i] < f.profiles[j][i])
        r.counterexamples.push_back({f.reps[j].str(), i + 1, f.profiles[hi][i], f.profiles[j][i]});
    }
  }
  r.holds = r.counterexamples.empty();
}

std::vector<std::size_t> argopt(const std::vector<std::vector<Int>>& profiles, bool minimise) {
  std::vector<std::size_t> best{0};
  for (std::size_t j = 1; j < profiles.size(); ++j) {
    const Int& candidate = profiles[j].back();
    const Int& incumbent = profiles[best.front()].back();
    if (candidate == incumbent) {
      best.push_back(j);
    } else if (minimise ? candidate < incumbent : candidate > incumbent) {
      best = {j};
    }
  }
  return best;
}

std::size_t balanced_index(const Family& f) {
  for (std::size_t j = 0; j < f.reps.size(); ++j) {
    if (is_balanced(f.reps[j])) return j;
  }
  throw std::logic_error("orbit family without a balanced representative");
}

bool coprime(unsigned p, unsigned q) { return std::gcd(p, q) == 1; }

}  // namespace

TheoremReport verify_theorem4(unsigned p, unsigned q) {
  TheoremReport r = base_report("t4", p, q);
  const Family f = family_profiles(p, q, ProfileKind::sums);
  r.in_hypothesis = true;
  r.checked = true;
  r.orbits_checked = f.reps.size();
  check_lower_envelope(r, f, 0);  // 0^{q-p}1^p is lexicographically first
  return r;
}

TheoremReport verify_theorem1(unsigned p, unsigned q) {
  TheoremReport r = base_report("t1", p, q);
  const Family f = family_profiles(p, q, ProfileKind::sums);
  r.in_hypothesis = coprime(p, q);
  r.checked = true;
  r.orbits_checked = f.reps.size();
  if (r.in_hypothesis) {
    check_upper_envelope(r, f, balanced_index(f));
    return r;
  }
  // Exploratory: a least element should exist and be balanced even when the
  // balanced orbit is not guaranteed unique.
  for (std::size_t j = 0; j < f.reps.size(); ++j) {
    bool least = true;
    for (std::size_t k = 0; k < f.reps.size() && least; ++k) {
      for (std::size_t i = 0; i < f.profiles[j].size(); ++i) {
        if (f.profiles[j][i] < f.profiles[k][i]) {
          least = false;
          break;
        }
      }
    }
    if (least) {
      if (!is_balanced(f.reps[j]))
        r.counterexamples.push_back({f.reps[j].str() + " (least element, not balanced)", 0, 0, 0});
      r.holds = r.counterexamples.empty();
      return r;
    }
  }
  r.counterexamples.push_back({"(no least element)", 0, 0, 0});
  r.holds = false;
  return r;
}

std::vector<TheoremReport> verify_sum_extremes(unsigned p, unsigned q) {
  return {verify_theorem4(p, q), verify_theorem1(p, q)};
}

TheoremReport verify_theorem5(unsigned p, unsigned q) {
  TheoremReport r = base_report("t5", p, q);
  const Family f = family_profiles(p, q, ProfileKind::products);
  r.in_hypothesis = p < q - p;
  r.checked = true;
  r.orbits_checked = f.reps.size();
  for (std::size_t j : argopt(f.profiles, /*minimise=*/true)) {
    if (j != 0)
      r.counterexamples.push_back({f.reps[j].str(), f.profiles[j].size(),
                                   f.profiles[j].back(), f.profiles[0].back()});
  }
  r.holds = r.counterexamples.empty();
  return r;
}

TheoremReport verify_theorem2(unsigned p, unsigned q) {
  TheoremReport r = base_report("t2", p, q);
  const Family f = family_profiles(p, q, ProfileKind::products);
  r.in_hypothesis = coprime(p, q);
  r.checked = true;
  r.orbits_checked = f.reps.size();
  const std::vector<std::size_t> best = argopt(f.profiles, /*minimise=*/false);
  if (best.size() != 1) {
    for (std::size_t j : best)
      r.counterexamples.push_back({f.reps[j].str() + " (tied maximum)", f.profiles[j].size(),
                                   f.profiles[j].back(), f.profiles[j].back()});
  } else if (!is_balanced(f.reps[best.front()])) {
    r.counterexamples.push_back({f.reps[best.front()].str() + " (maximum, not balanced)",
                                 f.profiles[best.front()].size(), f.profiles[best.front()].back(),
                                 f.profiles[best.front()].back()});
  }
  r.holds = r.counterexamples.empty();
  return r;
}

std::vector<TheoremReport> verify_product_extremes(unsigned p, unsigned q) {
  return {verify_theorem5(p, q), verify_theorem2(p, q)};
}

TheoremReport verify_theorem6(unsigned p, unsigned q) {
  TheoremReport r = base_report("t6", p, q);
  const Family f = family_profiles(p, q, ProfileKind::products);
  r.in_hypothesis = p < q - p;
  r.checked = true;
  r.orbits_checked = f.reps.size();
  check_lower_envelope(r, f, 0);
  return r;
}

TheoremReport verify_conjecture3(unsigned p, unsigned q) {
  TheoremReport r = base_report("c3", p, q);
  r.in_hypothesis = coprime(p, q);
  if (!r.in_hypothesis) return r;  // conjecture stated for coprime parameters only
  const Family f = family_profiles(p, q, ProfileKind::products);
  r.checked = true;
  r.orbits_checked = f.reps.size();
  check_upper_envelope(r, f, balanced_index(f));
  return r;
}

std::vector<TheoremReport> verify_partial_product_extreme(unsigned p, unsigned q) {
  return {verify_theorem6(p, q), verify_conjecture3(p, q)};
}

std::vector<std::size_t> lexidynamic_permutation(const BinaryWord& w) {
  const std::size_t n = w.length();
  std::vector<std::size_t> shifts(n);
  std::iota(shifts.begin(), shifts.end(), 0);
  std::vector<BinaryWord> rotations;
  rotations.reserve(n);
  for (std::size_t k = 0; k < n; ++k) rotations.push_back(rotate(w, k));
  // Stable sort keeps duplicates from periodic words in shift order.
  std::stable_sort(shifts.begin(), shifts.end(),
                   [&](std::size_t a, std::size_t b) { return rotations[a] < rotations[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t pos = 0; pos < n; ++pos) rank[shifts[pos]] = pos + 1;
  return rank;
}

DuplicateProduct::DuplicateProduct(std::string a, std::string b)
    : std::runtime_error("orbits " + a + " and " + b + " have equal products; ranks are undefined"),
      a_(std::move(a)),
      b_(std::move(b)) {}

std::vector<std::size_t> assign_product_ranks(const std::vector<Int>& products) {
  const std::size_t n = products.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return products[a] < products[b]; });
  for (std::size_t i = 1; i < n; ++i) {
    if (products[order[i - 1]] == products[order[i]])
      throw DuplicateProduct(std::to_string(order[i - 1] + 1), std::to_string(order[i] + 1));
  }
  std::vector<std::size_t> rank(n);
  for (std::size_t pos = 0; pos < n; ++pos) rank[order[pos]] = pos + 1;
  return rank;
}

LexiProdPermutation lexiprod_permutation(unsigned p, unsigned q) {
  LexiProdPermutation perm;
  perm.p = p;
  perm.q = q;
  perm.lex_order = enumerate_orbits(p, q);
  perm.products.reserve(perm.lex_order.size());
  for (const BinaryWord& w : perm.lex_order)
    perm.products.push_back(product_profile(base2_orbit(w)).products.back());
  try {
    perm.product_rank = assign_product_ranks(perm.products);
  } catch (const DuplicateProduct& dup) {
    const std::size_t a = std::stoul(dup.first()) - 1;
    const std::size_t b = std::stoul(dup.second()) - 1;
    throw DuplicateProduct(perm.lex_order[a].str(), perm.lex_order[b].str());
  }
  perm.classes.reserve(perm.lex_order.size());
  for (std::size_t i = 0; i < perm.lex_order.size(); ++i) {
    const std::size_t lex_rank = i + 1;
    if (perm.product_rank[i] < lex_rank)
      perm.classes.push_back(BalanceClass::over);
    else if (perm.product_rank[i] > lex_rank)
      perm.classes.push_back(BalanceClass::under);
    else
      perm.classes.push_back(BalanceClass::equal);
  }
  return perm;
}

const char* balance_class_name(BalanceClass c) {
  switch (c) {
    case BalanceClass::over: return "over";
    case BalanceClass::under: return "under";
    default: return "equal";
  }
}

}  // namespace orbitlab
