// Grammar:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' integer]
//   atom   := integer ['/' integer] | name | '(' poly ')'
//   name   := [A-Za-z][A-Za-z0-9_]*
// Whitespace is insignificant.

#include <cctype>

#include "ciobs/error.hpp"
#include "ciobs/polynomial.hpp"

namespace ciobs {

namespace {

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial run() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Polynomial p = poly();
    if (!at_end()) fail(peek() == ')' ? "unbalanced ')'" : "expected '+' or '-'");
    return p;
  }

 private:
  Polynomial poly() {
    Polynomial sum(ring_);
    bool first = true;
    while (!at_end() && peek() != ')') {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Polynomial t = term();
      if (negative) sum -= t; else sum += t;
      first = false;
      skip_ws();
    }
    if (first) fail("expected a term");
    return sum;
  }

  Polynomial term() {
    Polynomial t = factor();
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      t *= factor();
      skip_ws();
    }
    return t;
  }

  Polynomial factor() {
    Polynomial base = atom();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      std::string digits = integer();
      if (digits.size() > 9) fail("exponent too large", at);
      return base.pow(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial atom() {
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (c == '(') {
      ++pos_;
      skip_ws();
      Polynomial inner = poly();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(integer());
      skip_ws();
      mpz_class den(1);
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        den = mpz_class(integer());
        if (den == 0) fail("division by zero", at);
      }
      Coef q(num, den);
      q.canonicalize();
      return Polynomial::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!ring_->index_of(name)) fail("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring_, name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw InputError("parse error at position " + std::to_string(at + 1) + ": " + msg + " in \"" +
                     std::string(text_) + "\"");
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, RingPtr ring) {
  return Parser(text, std::move(ring)).run();
}

}  // namespace ciobs
