// SPDX-License-Identifier: Apache-2.0
//
// Integer resultants (subresultant PRS) and the bivariate resultants built
// on top of them by evaluation and interpolation.

#include <stdexcept>

#include "cyclo/poly.hpp"

namespace cyclo {

namespace {

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

Integer resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero input");
  IntPoly a = f;
  IntPoly b = g;
  int s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
  }
  if (b.degree() == 0) return s * ipow(b.leading(), static_cast<unsigned long>(a.degree()));

  const Integer ca = content(a);
  const Integer cb = content(b);
  a.divide_exact(ca);
  b.divide_exact(cb);
  const Integer t = ipow(ca, static_cast<unsigned long>(b.degree())) * ipow(cb, static_cast<unsigned long>(a.degree()));

  Integer gg = 1;
  Integer h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = std::move(r);
    b.divide_exact(gg * ipow(h, static_cast<unsigned long>(delta)));
    gg = a.leading();
    // h <- g^delta / h^(delta-1)
    if (delta > 0) {
      Integer num = ipow(gg, static_cast<unsigned long>(delta));
      if (delta > 1) mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), ipow(h, static_cast<unsigned long>(delta - 1)).get_mpz_t());
      h = num;
    }
    if (b.degree() == 0) break;
  }
  // h <- lc(b)^deg(a) / h^(deg(a)-1)
  const unsigned long da = static_cast<unsigned long>(a.degree());
  Integer last = ipow(b.leading(), da);
  if (da > 1) {
    mpz_divexact(last.get_mpz_t(), last.get_mpz_t(), ipow(h, da - 1).get_mpz_t());
  }
  return s * t * last;
}

IntPoly interpolate_consecutive(const std::vector<Integer>& values, long start) {
  if (values.empty()) return {};
  const std::size_t n = values.size() - 1;
  // Forward differences; c_j = Delta^j v_0 / j! is integral for integer polynomials.
  std::vector<Integer> diff = values;
  std::vector<Integer> c(n + 1);
  Integer fact = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    if (j > 0) fact *= static_cast<unsigned long>(j);
    if (!mpz_divisible_p(diff[0].get_mpz_t(), fact.get_mpz_t())) {
      throw std::domain_error("interpolate_consecutive: values are not from an integer polynomial");
    }
    mpz_divexact(c[j].get_mpz_t(), diff[0].get_mpz_t(), fact.get_mpz_t());
    for (std::size_t i = 0; i + j < n; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  // Horner on the Newton basis (x - start)(x - start - 1)...
  std::vector<Integer> p{c[n]};
  for (std::size_t j = n; j-- > 0;) {
    const Integer node = Integer(start) + static_cast<unsigned long>(j);
    p.emplace_back(0);
    for (std::size_t i = p.size() - 1; i > 0; --i) {
      p[i] = p[i - 1] - node * p[i];
    }
    p[0] = -node * p[0] + c[j];
  }
  return IntPoly(std::move(p));
}

IntPoly resultant_y_scaled(const IntPoly& f, std::uint64_t k) {
  if (f.is_zero()) throw std::invalid_argument("resultant_y_scaled: zero input");
  if (k == 0) throw std::invalid_argument("resultant_y_scaled: k must be positive");
  const std::size_t d = static_cast<std::size_t>(f.degree());
  const IntPoly cyc = IntPoly::monomial(1, k) - IntPoly::constant(1);
  if (d == 0) return IntPoly::constant(ipow(f[0], k));
  // Points start at 1 so that f(x0*y) keeps degree d in y.
  std::vector<Integer> values(d * k + 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Integer x0 = static_cast<unsigned long>(i + 1);
    std::vector<Integer> c(d + 1);
    Integer xp = 1;
    for (std::size_t j = 0; j <= d; ++j) {
      c[j] = f[j] * xp;
      xp *= x0;
    }
    values[i] = resultant(IntPoly(std::move(c)), cyc);
  }
  return interpolate_consecutive(values, 1);
}

}  // namespace cyclo
