#pragma once

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orbitlab/numeric.hpp"

namespace orbitlab {

// Base-2 expansion whose digits are arbitrary nonnegative rationals:
// value of (a_1 a_2 ... a_n)_2 is sum_i a_i 2^{n-i}. Digits may exceed 1.
struct GenExpansion {
  std::vector<Rational> digits;
};

Rational evaluate(const GenExpansion& e);

// Digitwise multiplication by c >= 0; evaluate(scale(e, c)) == c * evaluate(e).
GenExpansion scale(const GenExpansion& e, const Rational& c);

// Pattern pieces for building digit strings structurally.
struct DigitRun {
  Rational digit;
  long count = 1;  // >= 0
};

struct DigitRamp {
  long first = 0;
  long last = 0;
  int step = 1;  // +1 or -1; empty when first already lies past last
};

using PatternPiece = std::variant<DigitRun, DigitRamp>;

PatternPiece run(Rational digit, long count = 1);
PatternPiece ramp_up(long from, long to);    // from, from+1, ..., to; empty if from > to
PatternPiece ramp_down(long from, long to);  // from, from-1, ..., to; empty if from < to

// Expands runs and ramps into a concrete digit string.
// Errors: total length zero, negative run count, or a negative digit.
GenExpansion from_pattern(std::span<const PatternPiece> pieces);
GenExpansion from_pattern(std::initializer_list<PatternPiece> pieces);

// Textual form of the same notation, items separated by whitespace:
//   4          single digit             3/2       rational digit
//   0^{q-2}    run (count in {...})     (2q)      parenthesised digit expression
//   ..         arithmetic ramp continuing from the previous digit through the
//              next item (inclusive, consuming it); empty when already there
// Exponents and parenthesised digits are integer expressions over vars, with
// juxtaposition as multiplication ("2q", "q-2p+1").
GenExpansion parse_pattern(std::string_view text, const std::map<std::string, long>& vars = {});

}  // namespace orbitlab
