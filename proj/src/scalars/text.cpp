#include "fhl/scalars/text.hpp"

#include <cctype>

#include "fhl/error.hpp"

namespace fhl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scalar parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Scalar s = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return s;
  }

 private:
  Scalar expr() {
    Scalar acc = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Scalar term() {
    Scalar acc = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc *= unary();
      } else if (peek() == '/') {
        std::size_t at = pos_;
        advance();
        Scalar d = unary();
        if (d.is_zero()) fail_at(at, "division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  Scalar unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail_at(start, "exponent too large");
    int e = std::stoi(digits);
    if (negative && base.is_zero()) fail_at(start, "negative power of zero");
    return base.pow(negative ? -e : e);
  }

  Scalar atom() {
    skip_space();
    char c = peek();
    if (c == '(') {
      advance();
      Scalar inner = expr();
      skip_space();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      return Scalar(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek()))) advance();
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "q") return Scalar::q();
      try {
        return Scalar::var(var_from_name(name));
      } catch (const UnknownVariable& e) {
        auto [line, col] = location(start);
        throw UnknownVariable(std::string(e.what()) + " (line " + std::to_string(line) +
                              ", column " + std::to_string(col) + ")");
      }
    }
    if (at_end()) fail("unexpected end of expression");
    fail(std::string("unexpected '") + c + "'");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }
  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  std::pair<int, int> location(std::size_t at) const {
    int line = 1, col = 1;
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

  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    auto [line, col] = location(at);
    throw ParseError(what, line, col);
  }
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

}  // namespace fhl
