// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <fstream>
#include <sstream>

#include "cyclo/cli.hpp"

namespace cyclo {

namespace {

constexpr std::size_t kMaxDegree = 100000000;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  IntPoly parse() {
    skip();
    if (at_end()) fail("empty input");
    IntPoly f = peek() == '[' ? list() : expr();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return f;
  }

 private:
  IntPoly expr() {
    IntPoly f = term();
    while (true) {
      skip();
      if (at_end()) return f;
      const char c = peek();
      if (c != '+' && c != '-') return f;
      ++i_;
      IntPoly t = term();
      if (c == '+') {
        f += t;
      } else {
        f -= t;
      }
    }
  }

  IntPoly term() {
    IntPoly f = unary();
    while (true) {
      skip();
      if (at_end() || peek() != '*') return f;
      ++i_;
      IntPoly g = unary();
      if (f.degree() + g.degree() > static_cast<long>(kMaxDegree)) fail("degree too large");
      f *= g;
    }
  }

  IntPoly unary() {
    skip();
    if (!at_end() && peek() == '-') {
      ++i_;
      return -unary();
    }
    if (!at_end() && peek() == '+') {
      ++i_;
      return unary();
    }
    return power();
  }

  IntPoly power() {
    IntPoly base = primary();
    skip();
    if (at_end() || peek() != '^') return base;
    ++i_;
    skip();
    const std::size_t at = i_;
    const Integer e = integer();
    if (!e.fits_ulong_p()) fail("exponent too large", at);
    const unsigned long n = e.get_ui();
    if (base.degree() > 0 && static_cast<u64>(base.degree()) * n > kMaxDegree) fail("degree too large", at);
    if (base.degree() >= 0 && base.size() >= 1) {
      // Monomials directly; pow() would walk the zeros.
      bool mono = true;
      for (std::size_t j = 0; j + 1 < base.size(); ++j) mono = mono && base[j] == 0;
      if (mono) {
        Integer c;
        mpz_pow_ui(c.get_mpz_t(), base.leading().get_mpz_t(), n);
        return IntPoly::monomial(c, static_cast<std::size_t>(base.degree()) * n);
      }
    }
    if (n > 0xffffffffUL) fail("exponent too large", at);
    return pow(base, static_cast<unsigned>(n));
  }

  IntPoly primary() {
    skip();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (c == '(') {
      ++i_;
      IntPoly f = expr();
      skip();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++i_;
      return f;
    }
    if (c == 'x' || c == 'X') {
      ++i_;
      return IntPoly::monomial(1, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return IntPoly::constant(integer());
    fail(std::string("unexpected '") + c + "'");
  }

  IntPoly list() {
    ++i_;  // '['
    std::vector<Integer> c;
    skip();
    if (!at_end() && peek() == ']') {
      ++i_;
      return IntPoly{};
    }
    while (true) {
      skip();
      bool neg = false;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        neg = peek() == '-';
        ++i_;
        skip();
      }
      Integer v = integer();
      c.push_back(neg ? Integer(-v) : v);
      skip();
      if (at_end()) fail("expected ']'");
      if (peek() == ',') {
        ++i_;
        continue;
      }
      if (peek() == ']') {
        ++i_;
        return IntPoly(std::move(c));
      }
      fail(std::string("unexpected '") + peek() + "' in coefficient list");
    }
  }

  Integer integer() {
    const std::size_t start = i_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    if (i_ == start) fail("expected integer");
    return Integer(std::string(s_.substr(start, i_ - start)), 10);
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
  }
  bool at_end() const { return i_ >= s_.size(); }
  char peek() const { return s_[i_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

IntPoly read_poly_argument(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return parse_poly(arg);
  const std::string path = arg.substr(1);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::string joined;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    joined += line;
    joined += ' ';
  }
  return parse_poly(joined);
}

std::string to_coefficient_list(const IntPoly& f) {
  std::string s = "[";
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (j) s += ", ";
    s += f[j].get_str();
  }
  return s + "]";
}

}  // namespace cyclo
