#include "freediv/parse.hpp"

#include <cctype>

#include "freediv/error.hpp"

namespace freediv {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const RingPtr& ring, const PolyLookup& lookup, int line, int col)
      : s_(s), ring_(ring), lookup_(lookup), line0_(line), col0_(col) {}

  Poly parse() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    Poly p = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    int line = line0_, col = col0_;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = term();
    while (true) {
      if (eat('+')) p = p + term();
      else if (eat('-')) p = p - term();
      else return p;
    }
  }

  Poly term() {
    Poly p = unary();
    while (true) {
      if (eat('*')) {
        p = p * unary();
      } else if (eat('/')) {
        std::size_t at = pos_;
        Poly q = unary();
        if (!q.isConstant() || q.isZero()) fail("division by a non-constant or zero", at);
        p = p * Rational(1 / q.constantTerm());
      } else {
        return p;
      }
    }
  }

  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("malformed exponent: expected a nonnegative integer", start);
      if (pos_ - start > 6) fail("exponent too large", start);
      unsigned k = unsigned(std::stoul(s_.substr(start, pos_ - start)));
      skip();
      if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                               s_[pos_] == '^'))
        fail("malformed exponent", pos_);
      return base.pow(k);
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        fail("malformed number", start);
      return Poly::constant(ring_, Rational(Integer(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      int idx = ring_->indexOf(name);
      if (idx >= 0) return Poly::variable(ring_, idx);
      if (lookup_) {
        if (auto p = lookup_(name)) {
          if (!p->isZero() && !same_ring(p->ring(), ring_)) fail("'" + name + "' lives on a different ring", start);
          return p->isZero() ? Poly(ring_) : *p;
        }
      }
      fail("unknown identifier '" + name + "'", start);
    }
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  const RingPtr& ring_;
  const PolyLookup& lookup_;
  int line0_, col0_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring, const PolyLookup& lookup, int line, int column) {
  return Parser(text, ring, lookup, line, column).parse();
}

}  // namespace freediv
