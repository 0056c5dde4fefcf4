#include "orbitlab/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitlab {

namespace {

void check_not_empty(std::size_t n) {
  if (n == 0) throw std::invalid_argument("binary word must have length >= 1");
}

// Prefix one-counts over the doubled word: pref[i] = ones among the first i
// letters of ww. Any cyclic window is then pref[s+len] - pref[s].
std::vector<unsigned> doubled_prefix_ones(const BinaryWord& w) {
  const std::size_t n = w.length();
  std::vector<unsigned> pref(2 * n + 1, 0);
  for (std::size_t i = 0; i < 2 * n; ++i) pref[i + 1] = pref[i] + w.bit(i % n);
  return pref;
}

}  // namespace

BinaryWord::BinaryWord(std::string_view ascii) {
  check_not_empty(ascii.size());
  bits_.reserve(ascii.size());
  for (char c : ascii) {
    if (c != '0' && c != '1') throw std::invalid_argument("binary word may contain only '0' and '1'");
    bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    ones_ += static_cast<unsigned>(c - '0');
  }
}

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  check_not_empty(bits_.size());
  for (std::uint8_t b : bits_) {
    if (b > 1) throw std::invalid_argument("binary word letters must be 0 or 1");
    ones_ += b;
  }
}

std::string BinaryWord::str() const {
  std::string s(length(), '0');
  for (std::size_t i = 0; i < length(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
  return s;
}

BinaryWord word_runs(const std::vector<std::pair<std::uint8_t, std::size_t>>& runs) {
  std::vector<std::uint8_t> bits;
  for (const auto& [letter, count] : runs) bits.insert(bits.end(), count, letter);
  return BinaryWord(std::move(bits));
}

BinaryWord word_runs(std::initializer_list<std::pair<std::uint8_t, std::size_t>> runs) {
  return word_runs(std::vector<std::pair<std::uint8_t, std::size_t>>(runs));
}

BinaryWord rotate(const BinaryWord& w, std::size_t k) {
  const std::size_t n = w.length();
  if (k >= n) throw std::out_of_range("rotate: shift must satisfy 0 <= k < |w|");
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = w.bit((i + k) % n);
  return BinaryWord(std::move(bits));
}

std::strong_ordering lex_compare(const BinaryWord& u, const BinaryWord& v) {
  if (u.length() != v.length())
    throw std::invalid_argument("lex_compare: words must have equal length");
  for (std::size_t i = 0; i < u.length(); ++i) {
    if (u.bit(i) != v.bit(i))
      return u.bit(i) < v.bit(i) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

unsigned window_ones(const BinaryWord& w, std::size_t start, std::size_t len) {
  const std::size_t n = w.length();
  if (start >= n) throw std::out_of_range("window_ones: start must satisfy 0 <= start < |w|");
  if (len < 1 || len > n) throw std::invalid_argument("window_ones: length must satisfy 1 <= len <= |w|");
  const auto pref = doubled_prefix_ones(w);
  return pref[start + len] - pref[start];
}

bool is_balanced(const BinaryWord& w) {
  const std::size_t n = w.length();
  const auto pref = doubled_prefix_ones(w);
  for (std::size_t len = 1; len <= n; ++len) {
    unsigned lo = static_cast<unsigned>(len), hi = 0;
    for (std::size_t s = 0; s < n; ++s) {
      const unsigned c = pref[s + len] - pref[s];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

LeastRotation least_rotation(const BinaryWord& w) {
  const std::size_t n = w.length();
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint8_t a = w.bit((k + i) % n);
      const std::uint8_t b = w.bit((best + i) % n);
      if (a != b) {
        if (a < b) best = k;
        break;
      }
    }
  }
  return {rotate(w, best), best};
}

}  // namespace orbitlab
