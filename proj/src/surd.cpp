#include <cctype>
#include <string>

#include "scv/arith.hpp"
#include "scv/errors.hpp"

namespace scv {

namespace {

// Recursive-descent evaluator over Q(sqrt D):
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { ('*'|'/') factor }
//   factor := integer | 'sqrt' '(' integer ')' | '(' expr ')' | '-' factor
class SurdParser {
 public:
  explicit SurdParser(std::string_view text) : text_(text) {}

  QuadSurd parse() {
    try {
      QuadSurd value = expr();
      skip_space();
      if (pos_ != text_.size()) fail("unexpected trailing input");
      return value;
    } catch (const PreconditionViolation& e) {
      fail(e.what());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  QuadSurd expr() {
    QuadSurd value = accept('-') ? -term() : (accept('+'), term());
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  QuadSurd term() {
    QuadSurd value = factor();
    while (true) {
      if (accept('*')) {
        value *= factor();
      } else if (accept('/')) {
        value /= factor();
      } else {
        return value;
      }
    }
  }

  QuadSurd factor() {
    skip_space();
    if (accept('-')) return -factor();
    if (accept('(')) {
      QuadSurd inner = expr();
      expect(')');
      return inner;
    }
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      expect('(');
      const Integer radicand = integer();
      expect(')');
      if (radicand == 0) return QuadSurd(0);
      if (!radicand.fits_slong_p()) fail("radicand too large");
      const SquareRootForm form = rational_sqrt_form(Rational(radicand));
      return QuadSurd(0, form.coefficient, form.radicand);
    }
    return QuadSurd(Rational(integer()));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QuadSurd parse_surd(std::string_view text) { return SurdParser(text).parse(); }

Rational parse_rational(std::string_view text) {
  const QuadSurd value = parse_surd(text);
  if (!value.is_rational()) throw ParseError("expected a rational, got '" + std::string(text) + "'");
  return value.a();
}

}  // namespace scv
