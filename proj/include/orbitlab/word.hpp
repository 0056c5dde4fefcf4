#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbitlab {

// Immutable binary word w = w_1 w_2 ... w_q over {0,1}, q >= 1, with a cached
// count of 1-letters. Words parse from / print to ASCII '0'/'1' strings, most
// significant letter first.
class BinaryWord {
 public:
  explicit BinaryWord(std::string_view ascii);
  explicit BinaryWord(std::vector<std::uint8_t> bits);

  std::size_t length() const noexcept { return bits_.size(); }
  unsigned ones() const noexcept { return ones_; }
  unsigned zeros() const noexcept { return static_cast<unsigned>(length()) - ones_; }
  std::uint8_t bit(std::size_t i) const { return bits_[i]; }  // 0-based
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::string str() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
  unsigned ones_ = 0;
};

// Concatenation of letter runs, e.g. word_runs({{0,3},{1,2}}) == 00011.
// Runs of length zero are allowed; the total length must be >= 1.
BinaryWord word_runs(std::initializer_list<std::pair<std::uint8_t, std::size_t>> runs);
BinaryWord word_runs(const std::vector<std::pair<std::uint8_t, std::size_t>>& runs);

// k-fold cyclic shift sigma^k(w) = w_{k+1} ... w_q w_1 ... w_k.
// k must lie in [0, |w|); out-of-range k is a contract violation, not wrapped.
BinaryWord rotate(const BinaryWord& w, std::size_t k);

// Lexicographic comparison with 0 < 1. The words must have equal length.
std::strong_ordering lex_compare(const BinaryWord& u, const BinaryWord& v);

// Convenience strict order on equal-length words.
inline bool operator<(const BinaryWord& u, const BinaryWord& v) {
  return lex_compare(u, v) == std::strong_ordering::less;
}

// Number of 1-letters in the cyclic factor of length len starting at position
// start (0-based). Computed with prefix sums over the doubled word.
// Requires 0 <= start < |w| and 1 <= len <= |w|.
unsigned window_ones(const BinaryWord& w, std::size_t start, std::size_t len);

// Cyclic balance test: w is balanced iff for every factor length L the
// one-counts of the |w| cyclic windows of length L differ by at most 1.
// This is equivalent to the pairwise condition on equal-length factors of all
// cyclic shifts, but runs in O(q^2) instead of O(q^4).
bool is_balanced(const BinaryWord& w);

struct LeastRotation {
  BinaryWord word;    // lexicographically smallest rotation (canonical form)
  std::size_t shift;  // smallest k with rotate(w, k) == word
};

LeastRotation least_rotation(const BinaryWord& w);

}  // namespace orbitlab
