// SPDX-License-Identifier: Apache-2.0
//
// Dense univariate polynomials over Z.  Coefficients are stored ascending
// (index j holds the coefficient of x^j) and kept canonical: no trailing
// zeros, the zero polynomial is the empty vector.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cyclo {

using Integer = mpz_class;

inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t e);
  // c0 + c1*x
  static IntPoly linear(const Integer& c0, const Integer& c1);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }

  const Integer& operator[](std::size_t j) const { return c_[j]; }
  // Zero beyond the degree.
  Integer coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Integer(0); }
  const Integer& leading() const;
  const Integer& trailing() const;  // constant term; zero polynomial rejected
  const std::vector<Integer>& coeffs() const { return c_; }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);
  // Exact division of every coefficient; throws if c does not divide.
  IntPoly& divide_exact(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Integer> c_;
};

// Descending, reparseable: "x^4 + 2*x^2 - 4*x + 2".
std::string to_string(const IntPoly& f);
std::ostream& operator<<(std::ostream& os, const IntPoly& f);

// Reduced fraction p/q with p, q > 0.
struct RationalPoint {
  Integer num;
  Integer den;

  static RationalPoint make(Integer p, Integer q);
  bool operator==(const RationalPoint& o) const { return num == o.num && den == o.den; }
};
std::string to_string(const RationalPoint& b);

Integer content(const IntPoly& f);
IntPoly primitive_part(const IntPoly& f);
IntPoly derivative(const IntPoly& f);
IntPoly pow(IntPoly f, unsigned e);

// f(-x)
IntPoly negate_arg(const IntPoly& f);
IntPoly reverse(const IntPoly& f);
bool is_palindromic(const IntPoly& f);

// f = x^e * g with g(0) != 0.
struct XPowerSplit {
  IntPoly g;
  std::size_t e;
};
XPowerSplit strip_x_power(const IntPoly& f);
IntPoly shift_up(const IntPoly& f, std::size_t e);

// f(x) = x^d0 * g(x^r), r maximal.
struct Deflation {
  IntPoly g;
  std::size_t r;
  std::size_t d0;
};
Deflation deflate(const IntPoly& f);
IntPoly inflate(const IntPoly& g, std::size_t r);

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
// Exact quotient in Z[x], or nullopt if b does not divide a.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

IntPoly gcd_poly(const IntPoly& f, const IntPoly& g);
IntPoly radical_poly(const IntPoly& f);
bool is_squarefree(const IntPoly& f);
Integer height(const IntPoly& f);

Integer eval(const IntPoly& f, const Integer& x);
// q^d * f(p/q); zero for the zero polynomial.
Integer eval_rational_num(const IntPoly& f, const RationalPoint& beta);
// p^d * f(q/p), i.e. the numerator at 1/beta with the same degree.
Integer eval_rational_num_inverse(const IntPoly& f, const RationalPoint& beta);

// f(u/v * x).  strict: every coefficient must already be integral (throws
// std::domain_error otherwise); non-strict: cleared by the least power of v.
IntPoly scale_arg(const IntPoly& f, const Integer& u, const Integer& v, bool strict = true);

Integer resultant(const IntPoly& f, const IntPoly& g);

// The polynomial of degree <= n through (s, v[0]), (s+1, v[1]), ..., (s+n, v[n]).
// Values must come from an integer polynomial.
IntPoly interpolate_consecutive(const std::vector<Integer>& values, long start);

// res_y(f(x*y), y^k - 1) by evaluation at d*k+1 points and interpolation.
IntPoly resultant_y_scaled(const IntPoly& f, std::uint64_t k);

// G_k(f) = res_y(f(y), x - y^k), normalised to a positive leading coefficient.
IntPoly graeffe(const IntPoly& f, std::uint64_t k);
IntPoly graeffe2(const IntPoly& f);
IntPoly graeffe3(const IntPoly& f);
IntPoly graeffe_prime_by_resultant(const IntPoly& f, std::uint64_t p);

// Multiply by x^e - 1 / divide by it exactly (nullopt when not divisible).
IntPoly mul_xpow_minus_one(const IntPoly& f, std::size_t e);
std::optional<IntPoly> div_xpow_minus_one(const IntPoly& f, std::size_t e);

}  // namespace cyclo
