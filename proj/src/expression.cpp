#include "steenrodlab/expression.hpp"

#include <cctype>
#include <string>

#include "steenrodlab/error.hpp"

namespace steenrodlab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, AlgebraParams params) : text_(text), params_(params) {}

  GradedElement parse() {
    skip_ws();
    GradedElement e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  GradedElement expr() {
    GradedElement acc(params_);
    bool negate = false;
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      GradedElement t = term();
      if (c == '+') acc += t; else acc -= t;
    }
    return acc;
  }

  GradedElement term() {
    GradedElement acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  GradedElement factor() {
    GradedElement base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::uint64_t e = exponent();
      return base.pow(e);
    }
    return base;
  }

  GradedElement atom() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      GradedElement inner = expr();
      skip_ws();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Reduce digit by digit so arbitrarily long literals are fine.
      std::uint64_t v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = (v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % params_.p;
        ++pos_;
      }
      return GradedElement::scalar(params_, static_cast<std::int64_t>(v));
    }
    if (c == 'a' || c == 'b' || c == 'x' || c == 'y') {
      const std::size_t start = pos_;
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected generator index");
      std::uint64_t idx = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        idx = idx * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (idx > kMaxRank) idx = kMaxRank + 1;
        ++pos_;
      }
      if (idx < 1 || idx > params_.r) {
        auto [line, col] = location(start);
        throw Error(ErrorCode::Parameter, "generator index " + std::string(text_.substr(start, pos_ - start)) +
                                              " outside [1, " + std::to_string(params_.r) + "] at line " +
                                              std::to_string(line) + ", column " + std::to_string(col));
      }
      const auto i = static_cast<std::uint32_t>(idx);
      switch (c) {
        case 'a': return GradedElement::a(params_, i);
        case 'b': return GradedElement::b(params_, i);
        case 'x': return GradedElement::xi(params_, i);
        default: return GradedElement::eta(params_, i);
      }
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::uint64_t exponent() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > kExponentLimit) throw Error(ErrorCode::Budget, "exponent exceeds the limit 2^30");
      ++pos_;
    }
    return v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::pair<std::size_t, std::size_t> location(std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& msg) const {
    auto [line, col] = location(pos_);
    throw ParseError(msg, line, col);
  }

  std::string_view text_;
  AlgebraParams params_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedElement parse_expression(std::string_view text, AlgebraParams params) {
  return Parser(text, params).parse();
}

}  // namespace steenrodlab
