#include "linkslope/expression_parser.hpp"

#include <cctype>
#include <string>

#include "linkslope/errors.hpp"

namespace linkslope {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars, VariableFamily family)
      : text_(text), nvars_(nvars), letter_(family == VariableFamily::T ? 't' : 's') {}

  RationalFunction parse() {
    RationalFunction r = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("expression: " + what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_primary() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
  }

  RationalFunction expression() {
    RationalFunction acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= unary();
      } else if (peek('/')) {
        ++pos_;
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else if (starts_primary()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    int sign = 1;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      sign = text_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    bool paren = peek('(');
    if (paren) ++pos_;
    long e = integer();
    if (paren) {
      if (!peek(')')) fail("expected ')' after exponent");
      ++pos_;
    }
    if (e > 1000) fail("exponent too large");
    RationalFunction result(nvars_, Rational(1));
    RationalFunction b = sign < 0 ? inverse_checked(base) : base;
    for (long i = 0; i < e; ++i) result *= b;
    return result;
  }

  RationalFunction inverse_checked(const RationalFunction& r) {
    if (r.is_zero()) fail("negative power of zero");
    return r.inverse();
  }

  long integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 9) fail("integer literal too long for an exponent");
    return std::stol(digits);
  }

  RationalFunction primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction r = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer z(std::string(text_.substr(start, pos_ - start)));
      return RationalFunction(nvars_, Rational(z));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      if (c != letter_) fail("unknown variable '" + std::string(1, c) + "'");
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::size_t index = 0;
      if (pos_ > dstart) index = std::stoul(std::string(text_.substr(dstart, pos_ - dstart)));
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        pos_ = start;
        fail("unknown variable");
      }
      if (index >= nvars_) {
        pos_ = start;
        fail("variable index " + std::to_string(index) + " out of range");
      }
      return RationalFunction(LaurentPoly::variable(nvars_, index));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t nvars_;
  char letter_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text, std::size_t nvars, VariableFamily family) {
  return Parser(text, nvars, family).parse();
}

LaurentPoly parse_laurent(std::string_view text, std::size_t nvars, VariableFamily family) {
  RationalFunction r = parse_rational_function(text, nvars, family);
  if (!r.is_laurent()) throw ParseError("expression: not a Laurent polynomial");
  return r.numerator() * (1 / r.denominator().constant_term());
}

}  // namespace linkslope
