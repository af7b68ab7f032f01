// Text round-trip for monic integer polynomials.  The grammar accepted by
// the parser is a superset of both canonical renderings:
//
//   expr   := [sign] term { sign term }
//   term   := factor { '*' factor }
//   factor := atom [ '^' uint ]
//   atom   := uint | 'T' | '(' expr ')'

#include "curvedeg/poly_text.hpp"

#include <cctype>
#include <sstream>

#include "curvedeg/errors.hpp"

namespace curvedeg {

namespace {

std::string render_impl(const MonicIntPoly& p, bool spaced) {
  const int m = p.degree();
  if (m == 0) return "1";
  std::ostringstream out;
  bool first = true;
  for (int i = m; i >= 0; --i) {
    const mpz_class& c = p.coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    mpz_class mag = abs(c);
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (spaced ? (neg ? " - " : " + ") : (neg ? "-" : "+"));
    }
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "T";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  IntPoly parse() {
    IntPoly result = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  IntPoly expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = get() == '-';
    IntPoly acc = term();
    if (neg) acc = -acc;
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      get();
      IntPoly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  IntPoly term() {
    IntPoly acc = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      get();
      acc = acc * factor();
    }
    return acc;
  }

  IntPoly factor() {
    IntPoly base = atom();
    skip_ws();
    if (peek() == '^') {
      get();
      unsigned long e = uint_value();
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  IntPoly atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      IntPoly inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      get();
      return inner;
    }
    if (c == 'T') {
      get();
      return IntPoly({mpz_class(0), mpz_class(1)});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return IntPoly::constant(integer_value());
    }
    fail("expected integer, 'T' or '('");
  }

  mpz_class integer_value() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return mpz_class(text_.substr(start, pos_ - start));
  }

  unsigned long uint_value() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected a non-negative integer exponent");
    }
    mpz_class v = integer_value();
    if (!v.fits_ulong_p() || v > 4096) fail("exponent out of range");
    return v.get_ui();
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw format_error("parse_poly: " + why + " at position " +
                       std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

std::string render_poly(const MonicIntPoly& p) { return render_impl(p, true); }

std::string render_poly_compact(const MonicIntPoly& p) {
  return render_impl(p, false);
}

std::string render_factored(
    const std::vector<std::pair<MonicIntPoly, int>>& factors) {
  if (factors.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [f, mult] : factors) {
    if (!first) out << "*";
    first = false;
    out << "(" << render_poly_compact(f) << ")";
    if (mult != 1) out << "^" << mult;
  }
  return out.str();
}

MonicIntPoly parse_poly(const std::string& text) {
  IntPoly p = Parser(text).parse();
  auto monic = MonicIntPoly::from_int_poly(p);
  if (!monic) {
    throw format_error("parse_poly: polynomial is not monic: \"" + text + "\"");
  }
  return *monic;
}

}  // namespace curvedeg
