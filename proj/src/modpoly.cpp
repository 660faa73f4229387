// SPDX-License-Identifier: Apache-2.0

#include "cyclo/modpoly.hpp"

#include <stdexcept>

#include "cyclo/numtheory.hpp"

namespace cyclo {

namespace {

void trim(std::vector<std::uint64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

PrimeFieldPoly::PrimeFieldPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& a : c_) a %= p_;
  trim(c_);
}

PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("PrimeFieldPoly: modulus mismatch");
  if (a.is_zero() || b.is_zero()) return PrimeFieldPoly(a.p_);
  std::vector<std::uint64_t> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] = (out[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
    }
  }
  return PrimeFieldPoly(a.p_, std::move(out));
}

ModReduction reduce_mod(const IntPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> c(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) c[j] = mpz_fdiv_ui(f[j].get_mpz_t(), p);
  PrimeFieldPoly g(p, std::move(c));
  const bool dropped = g.degree() != f.degree();
  return {std::move(g), dropped};
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::invalid_argument("inverse_mod: zero has no inverse");
  return powmod(a, p - 2, p);
}

PrimeFieldPoly monic(const PrimeFieldPoly& f) {
  if (f.is_zero()) return f;
  const std::uint64_t p = f.modulus();
  const std::uint64_t inv = inverse_mod(f.coeffs().back(), p);
  std::vector<std::uint64_t> c = f.coeffs();
  for (auto& a : c) a = mulmod(a, inv, p);
  return PrimeFieldPoly(p, std::move(c));
}

PrimeFieldPoly gcd_mod(PrimeFieldPoly f, PrimeFieldPoly g) {
  if (f.modulus() != g.modulus()) throw std::invalid_argument("gcd_mod: modulus mismatch");
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd_mod: both inputs zero");
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> a = f.coeffs();
  std::vector<std::uint64_t> b = g.coeffs();
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // a <- a mod b
    const std::uint64_t inv = inverse_mod(b.back(), p);
    const std::size_t n = b.size() - 1;
    while (a.size() > n) {
      const std::uint64_t q = mulmod(a.back(), inv, p);
      const std::size_t s = a.size() - 1 - n;
      if (q != 0) {
        for (std::size_t i = 0; i < n; ++i) {
          const std::uint64_t t = mulmod(q, b[i], p);
          a[s + i] = a[s + i] >= t ? a[s + i] - t : a[s + i] + p - t;
        }
      }
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  return monic(PrimeFieldPoly(p, std::move(a)));
}

PrimeFieldPoly scale_arg_mod(const PrimeFieldPoly& f, std::uint64_t c) {
  const std::uint64_t p = f.modulus();
  if (c % p == 0) throw std::invalid_argument("scale_arg_mod: c must be nonzero");
  std::vector<std::uint64_t> out = f.coeffs();
  std::uint64_t cj = 1;
  for (auto& a : out) {
    a = mulmod(a, cj, p);
    cj = mulmod(cj, c % p, p);
  }
  return PrimeFieldPoly(p, std::move(out));
}

}  // namespace cyclo
