// SPDX-License-Identifier: Apache-2.0

#include "cyclo/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyclo/modpoly.hpp"

namespace cyclo {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t e) {
  std::vector<Integer> v(e + 1);
  v[e] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const Integer& c0, const Integer& c1) {
  return IntPoly(std::vector<Integer>{c0, c1});
}

const Integer& IntPoly::leading() const {
  if (c_.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return c_.back();
}

const Integer& IntPoly::trailing() const {
  if (c_.empty()) throw std::invalid_argument("constant term of zero polynomial");
  return c_.front();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& a : c_) a *= c;
  return *this;
}

IntPoly& IntPoly::divide_exact(const Integer& c) {
  for (auto& a : c_) {
    if (!mpz_divisible_p(a.get_mpz_t(), c.get_mpz_t())) {
      throw std::domain_error("IntPoly::divide_exact: coefficient not divisible");
    }
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  }
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly operator-(IntPoly a) {
  std::vector<Integer> v = a.coeffs();
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long j = f.degree(); j >= 0; --j) {
    const Integer& c = f[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    if (j == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'x';
    if (j > 1) os << '^' << j;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << to_string(f); }

RationalPoint RationalPoint::make(Integer p, Integer q) {
  if (p <= 0 || q <= 0) throw std::invalid_argument("RationalPoint: numerator and denominator must be positive");
  Integer g = gcd(p, q);
  p /= g;
  q /= g;
  return {std::move(p), std::move(q)};
}

std::string to_string(const RationalPoint& b) {
  if (b.den == 1) return b.num.get_str();
  return b.num.get_str() + "/" + b.den.get_str();
}

Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("primitive_part: zero polynomial");
  Integer c = content(f);
  if (f.leading() < 0) c = -c;
  if (c == 1) return f;
  IntPoly g = f;
  return g.divide_exact(c);
}

IntPoly derivative(const IntPoly& f) {
  if (f.size() <= 1) return {};
  std::vector<Integer> v(f.size() - 1);
  for (std::size_t j = 1; j < f.size(); ++j) v[j - 1] = f[j] * static_cast<unsigned long>(j);
  return IntPoly(std::move(v));
}

IntPoly pow(IntPoly f, unsigned e) {
  IntPoly r = IntPoly::constant(1);
  while (e) {
    if (e & 1) r *= f;
    e >>= 1;
    if (e) f *= f;
  }
  return r;
}

IntPoly negate_arg(const IntPoly& f) {
  std::vector<Integer> v = f.coeffs();
  for (std::size_t j = 1; j < v.size(); j += 2) v[j] = -v[j];
  return IntPoly(std::move(v));
}

IntPoly reverse(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("reverse: zero polynomial");
  std::vector<Integer> v(f.coeffs().rbegin(), f.coeffs().rend());
  return IntPoly(std::move(v));
}

bool is_palindromic(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_palindromic: zero polynomial");
  const auto& c = f.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<long>(c.size() / 2), c.rbegin());
}

XPowerSplit strip_x_power(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("strip_x_power: zero polynomial");
  std::size_t e = 0;
  while (f[e] == 0) ++e;
  if (e == 0) return {f, 0};
  return {IntPoly(std::vector<Integer>(f.coeffs().begin() + static_cast<long>(e), f.coeffs().end())), e};
}

IntPoly shift_up(const IntPoly& f, std::size_t e) {
  if (f.is_zero() || e == 0) return f;
  std::vector<Integer> v(e);
  v.insert(v.end(), f.coeffs().begin(), f.coeffs().end());
  return IntPoly(std::move(v));
}

Deflation deflate(const IntPoly& f) {
  auto [h, d0] = strip_x_power(f);
  if (h.degree() <= 0) throw std::invalid_argument("deflate: monomial input");
  std::size_t r = 0;
  for (std::size_t j = 1; j < h.size(); ++j) {
    if (h[j] != 0) r = std::gcd(r, j);
  }
  if (r == 1) return {std::move(h), 1, d0};
  std::vector<Integer> g(h.degree() / static_cast<long>(r) + 1);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = h[i * r];
  return {IntPoly(std::move(g)), r, d0};
}

IntPoly inflate(const IntPoly& g, std::size_t r) {
  if (r == 0) throw std::invalid_argument("inflate: r must be positive");
  if (r == 1 || g.size() <= 1) return g;
  std::vector<Integer> v((g.size() - 1) * r + 1);
  for (std::size_t i = 0; i < g.size(); ++i) v[i * r] = g[i];
  return IntPoly(std::move(v));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  const std::size_t n = static_cast<std::size_t>(b.degree());
  const Integer& lb = b.leading();
  std::vector<Integer> r = a.coeffs();
  long e = a.degree() - b.degree() + 1;
  Integer t;
  while (!r.empty() && r.size() > n) {
    t = r.back();
    const std::size_t s = r.size() - 1 - n;
    if (lb != 1) {
      for (auto& c : r) c *= lb;
    }
    for (std::size_t i = 0; i < n; ++i) mpz_submul(r[s + i].get_mpz_t(), t.get_mpz_t(), b[i].get_mpz_t());
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    --e;
  }
  IntPoly out(std::move(r));
  if (e > 0 && lb != 1) {
    Integer m;
    mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    out *= m;
  }
  return out;
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(b.degree());
  const Integer& lb = b.leading();
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(r.size() - n);
  for (std::size_t top = r.size(); top-- > n;) {
    if (r[top] == 0) continue;
    const std::size_t s = top - n;
    if (lb == 1) {
      q[s] = r[top];
    } else {
      if (!mpz_divisible_p(r[top].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
      mpz_divexact(q[s].get_mpz_t(), r[top].get_mpz_t(), lb.get_mpz_t());
    }
    for (std::size_t i = 0; i <= n; ++i) mpz_submul(r[s + i].get_mpz_t(), q[s].get_mpz_t(), b[i].get_mpz_t());
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

namespace {

constexpr std::uint64_t kGcdPrimes[] = {2305843009213693951ULL, 4611686018427387847ULL,
                                        1152921504606846883ULL};

// Degree of gcd(a, b) mod p for a prime not dividing either leading
// coefficient, which bounds the true gcd degree from above.
std::optional<long> modular_gcd_degree(const IntPoly& a, const IntPoly& b) {
  for (std::uint64_t p : kGcdPrimes) {
    if (mpz_fdiv_ui(a.leading().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.leading().get_mpz_t(), p) == 0) continue;
    return gcd_mod(reduce_mod(a, p).poly, reduce_mod(b, p).poly).degree();
  }
  return std::nullopt;
}

}  // namespace

IntPoly gcd_poly(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd_poly: both inputs zero");
  if (f.is_zero()) return primitive_part(g);
  if (g.is_zero()) return primitive_part(f);
  IntPoly a = primitive_part(f);
  IntPoly b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.degree() == 0) return IntPoly::constant(1);
  if (auto bound = modular_gcd_degree(a, b)) {
    if (*bound == 0) return IntPoly::constant(1);
    if (*bound == b.degree() && divide_exact(a, b)) return b;
  }
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.degree() == 0) return IntPoly::constant(1);
    b = r.is_zero() ? IntPoly{} : primitive_part(r);
  }
  return primitive_part(a);
}

IntPoly radical_poly(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("radical_poly: zero polynomial");
  IntPoly p = primitive_part(f);
  if (p.degree() <= 0) return IntPoly::constant(1);
  const IntPoly g = gcd_poly(p, derivative(p));
  if (g.degree() == 0) return p;
  return primitive_part(*divide_exact(p, g));
}

bool is_squarefree(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
  if (f.degree() <= 1) return true;
  return gcd_poly(f, derivative(f)).degree() == 0;
}

Integer height(const IntPoly& f) {
  Integer h = 0;
  for (const auto& c : f.coeffs()) {
    if (cmpabs(c, h) > 0) h = abs(c);
  }
  return h;
}

Integer eval(const IntPoly& f, const Integer& x) {
  Integer acc = 0;
  for (std::size_t j = f.size(); j-- > 0;) {
    acc *= x;
    acc += f[j];
  }
  return acc;
}

namespace {

// sum_j a_j * num^j * den^(d-j)
Integer eval_homogeneous(const IntPoly& f, const Integer& num, const Integer& den) {
  if (f.is_zero()) return 0;
  Integer acc = f.leading();
  Integer dpow = 1;
  Integer t;
  for (std::size_t j = f.size() - 1; j-- > 0;) {
    acc *= num;
    dpow *= den;
    if (f[j] != 0) {
      mpz_mul(t.get_mpz_t(), f[j].get_mpz_t(), dpow.get_mpz_t());
      acc += t;
    }
  }
  return acc;
}

}  // namespace

Integer eval_rational_num(const IntPoly& f, const RationalPoint& beta) {
  return eval_homogeneous(f, beta.num, beta.den);
}

Integer eval_rational_num_inverse(const IntPoly& f, const RationalPoint& beta) {
  return eval_homogeneous(f, beta.den, beta.num);
}

IntPoly scale_arg(const IntPoly& f, const Integer& u, const Integer& v, bool strict) {
  if (v == 0 || u == 0) throw std::invalid_argument("scale_arg: zero scale");
  if (f.is_zero()) return f;
  const std::size_t d = static_cast<std::size_t>(f.degree());
  // a_j u^j v^(d-j) is always integral; divide by v^(d-e) for the least e.
  std::vector<Integer> num(d + 1);
  Integer up = 1;
  std::vector<Integer> vp(d + 1);
  vp[0] = 1;
  for (std::size_t j = 1; j <= d; ++j) vp[j] = vp[j - 1] * v;
  for (std::size_t j = 0; j <= d; ++j) {
    num[j] = f[j] * up * vp[d - j];
    up *= u;
  }
  std::size_t e = 0;
  for (; e <= d; ++e) {
    const Integer& den = vp[d - e];
    if (std::all_of(num.begin(), num.end(),
                    [&](const Integer& c) { return mpz_divisible_p(c.get_mpz_t(), den.get_mpz_t()) != 0; })) {
      break;
    }
  }
  if (strict && e != 0) throw std::domain_error("scale_arg: non-integral coefficients");
  for (auto& c : num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), vp[d - e].get_mpz_t());
  return IntPoly(std::move(num));
}

IntPoly mul_xpow_minus_one(const IntPoly& f, std::size_t e) {
  if (f.is_zero()) return f;
  std::vector<Integer> v(f.size() + e);
  for (std::size_t i = 0; i < f.size(); ++i) {
    v[i + e] += f[i];
    v[i] -= f[i];
  }
  return IntPoly(std::move(v));
}

std::optional<IntPoly> div_xpow_minus_one(const IntPoly& f, std::size_t e) {
  if (e == 0) throw std::invalid_argument("div_xpow_minus_one: e must be positive");
  if (f.is_zero()) return f;
  if (f.size() <= e) return std::nullopt;
  const std::size_t n = f.size() - e;
  // f_i = q_{i-e} - q_i
  std::vector<Integer> q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = -f[i];
    if (i >= e) q[i] += q[i - e];
  }
  for (std::size_t i = n; i < f.size(); ++i) {
    if (f[i] != (i >= e ? q[i - e] : Integer(0))) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

}  // namespace cyclo
