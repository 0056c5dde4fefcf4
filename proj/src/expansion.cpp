#include "orbitlab/expansion.hpp"

#include <cctype>
#include <stdexcept>

namespace orbitlab {

Rational evaluate(const GenExpansion& e) {
  if (e.digits.empty()) throw std::invalid_argument("evaluate: expansion must have length >= 1");
  Rational acc = 0;
  for (const Rational& d : e.digits) acc = acc * 2 + d;
  return acc;
}

GenExpansion scale(const GenExpansion& e, const Rational& c) {
  if (c < 0) throw std::invalid_argument("scale: factor must be >= 0");
  GenExpansion out;
  out.digits.reserve(e.digits.size());
  for (const Rational& d : e.digits) out.digits.push_back(d * c);
  return out;
}

PatternPiece run(Rational digit, long count) { return DigitRun{std::move(digit), count}; }
PatternPiece ramp_up(long from, long to) { return DigitRamp{from, to, +1}; }
PatternPiece ramp_down(long from, long to) { return DigitRamp{from, to, -1}; }

GenExpansion from_pattern(std::span<const PatternPiece> pieces) {
  GenExpansion e;
  for (const PatternPiece& piece : pieces) {
    if (const auto* r = std::get_if<DigitRun>(&piece)) {
      if (r->count < 0) throw std::invalid_argument("from_pattern: run count must be >= 0");
      if (r->digit < 0) throw std::invalid_argument("from_pattern: digits must be >= 0");
      e.digits.insert(e.digits.end(), static_cast<std::size_t>(r->count), r->digit);
    } else {
      const auto& ramp = std::get<DigitRamp>(piece);
      if (ramp.step != 1 && ramp.step != -1)
        throw std::invalid_argument("from_pattern: ramp step must be +1 or -1");
      for (long v = ramp.first; ramp.step > 0 ? v <= ramp.last : v >= ramp.last; v += ramp.step) {
        if (v < 0) throw std::invalid_argument("from_pattern: digits must be >= 0");
        e.digits.emplace_back(v);
      }
    }
  }
  if (e.digits.empty()) throw std::invalid_argument("from_pattern: total length must be >= 1");
  return e;
}

GenExpansion from_pattern(std::initializer_list<PatternPiece> pieces) {
  return from_pattern(std::span<const PatternPiece>(pieces.begin(), pieces.size()));
}

namespace {

// Integer expressions over named variables: sum of terms, where a term is an
// integer literal, a variable, or a coefficient juxtaposed with a variable.
class ExprParser {
 public:
  ExprParser(std::string_view text, const std::map<std::string, long>& vars)
      : text_(text), vars_(vars) {}

  long parse() {
    long value = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) throw std::invalid_argument("pattern: trailing characters in expression");
    return value;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  long parse_sum() {
    skip_ws();
    long sign = 1;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    long total = sign * parse_term();
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
      total += sign * parse_term();
    }
    return total;
  }

  long parse_term() {
    skip_ws();
    if (pos_ >= text_.size()) throw std::invalid_argument("pattern: expected expression term");
    long coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      coeff = parse_int();
      have_coeff = true;
    }
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      return coeff * lookup(parse_ident());
    if (!have_coeff) throw std::invalid_argument("pattern: expected number or variable");
    return coeff;
  }

  long parse_int() {
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  std::string parse_ident() {
    std::string name;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      name.push_back(text_[pos_]);
      ++pos_;
    }
    return name;
  }

  long lookup(const std::string& name) const {
    auto it = vars_.find(name);
    if (it == vars_.end()) throw std::invalid_argument("pattern: unknown variable '" + name + "'");
    return it->second;
  }

  std::string_view text_;
  const std::map<std::string, long>& vars_;
  std::size_t pos_ = 0;
};

long eval_expr(std::string_view text, const std::map<std::string, long>& vars) {
  return ExprParser(text, vars).parse();
}

std::string_view strip_wrapping(std::string_view s, char open, char close) {
  if (s.size() >= 2 && s.front() == open && s.back() == close) return s.substr(1, s.size() - 2);
  return s;
}

struct ParsedItem {
  bool ellipsis = false;
  Rational digit;
  long count = 1;
  bool integral = true;
};

ParsedItem parse_item(std::string_view token, const std::map<std::string, long>& vars) {
  ParsedItem item;
  if (token == ".." || token == "...") {
    item.ellipsis = true;
    return item;
  }

  std::string_view base = token;
  std::string_view exponent;
  std::size_t depth = 0;
  for (std::size_t i = 0; i < token.size(); ++i) {
    const char c = token[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == '^' && depth == 0) {
      base = token.substr(0, i);
      exponent = token.substr(i + 1);
      break;
    }
  }
  if (base.empty()) throw std::invalid_argument("pattern: empty item");

  if (const std::size_t slash = base.find('/'); slash != std::string_view::npos) {
    const long num = eval_expr(base.substr(0, slash), vars);
    const long den = eval_expr(base.substr(slash + 1), vars);
    if (den == 0) throw std::invalid_argument("pattern: zero denominator");
    item.digit = Rational(num, den);
    item.integral = false;
  } else {
    item.digit = eval_expr(strip_wrapping(base, '(', ')'), vars);
  }

  if (!exponent.empty()) {
    std::string_view inner = strip_wrapping(exponent, '{', '}');
    inner = strip_wrapping(inner, '(', ')');
    item.count = eval_expr(inner, vars);
  }
  return item;
}

}  // namespace

GenExpansion parse_pattern(std::string_view text, const std::map<std::string, long>& vars) {
  std::vector<ParsedItem> items;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) items.push_back(parse_item(text.substr(i, j - i), vars));
    i = j;
  }

  std::vector<PatternPiece> pieces;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (!items[k].ellipsis) {
      pieces.push_back(DigitRun{items[k].digit, items[k].count});
      continue;
    }
    if (k == 0 || k + 1 == items.size() || items[k - 1].ellipsis || items[k + 1].ellipsis)
      throw std::invalid_argument("pattern: '..' needs a digit on both sides");
    const ParsedItem& prev = items[k - 1];
    const ParsedItem& next = items[k + 1];
    if (!prev.integral || !next.integral || prev.count != 1 || next.count != 1)
      throw std::invalid_argument("pattern: '..' connects single integer digits");
    const long a = static_cast<long>(boost::multiprecision::numerator(prev.digit));
    const long b = static_cast<long>(boost::multiprecision::numerator(next.digit));
    if (a <= b)
      pieces.push_back(DigitRamp{a + 1, b, +1});
    else
      pieces.push_back(DigitRamp{a - 1, b, -1});
    ++k;  // the next item is absorbed into the ramp
  }
  return from_pattern(pieces);
}

}  // namespace orbitlab
