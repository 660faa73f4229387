// SPDX-License-Identifier: Apache-2.0
//
// Graeffe transforms G_k(f) = res_y(f(y), x - y^k).  Every result is
// normalised to a positive leading coefficient; the magnitude is exact.

#include <stdexcept>

#include "cyclo/numtheory.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

namespace {

IntPoly positive_lc(IntPoly f) {
  if (!f.is_zero() && f.leading() < 0) return -f;
  return f;
}

// f(x) = sum_i parts[i](x^m) * x^i
std::vector<IntPoly> split_residues(const IntPoly& f, std::size_t m) {
  std::vector<std::vector<Integer>> parts(m);
  for (std::size_t j = 0; j < f.size(); ++j) {
    auto& v = parts[j % m];
    v.resize(j / m + 1);
    v[j / m] = f[j];
  }
  std::vector<IntPoly> out;
  out.reserve(m);
  for (auto& v : parts) out.emplace_back(std::move(v));
  return out;
}

}  // namespace

IntPoly graeffe2(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("graeffe: zero input");
  const auto parts = split_residues(f, 2);
  return positive_lc(parts[0] * parts[0] - shift_up(parts[1] * parts[1], 1));
}

IntPoly graeffe3(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("graeffe: zero input");
  const auto parts = split_residues(f, 3);
  const IntPoly& a = parts[0];
  const IntPoly& b = parts[1];
  const IntPoly& c = parts[2];
  IntPoly r = a * a * a;
  r += shift_up(b * b * b, 1);
  r += shift_up(c * c * c, 2);
  r -= shift_up(a * b * c, 1) * Integer(3);
  return positive_lc(std::move(r));
}

IntPoly graeffe_prime_by_resultant(const IntPoly& f, std::uint64_t p) {
  if (f.is_zero()) throw std::invalid_argument("graeffe: zero input");
  if (f.degree() == 0) {
    Integer c;
    mpz_pow_ui(c.get_mpz_t(), f[0].get_mpz_t(), p);
    return positive_lc(IntPoly::constant(c));
  }
  const std::size_t d = static_cast<std::size_t>(f.degree());
  const long start = -static_cast<long>(d / 2);
  std::vector<Integer> values(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    std::vector<Integer> c(p + 1);
    c[0] = start + static_cast<long>(i);
    c[p] = -1;
    values[i] = resultant(f, IntPoly(std::move(c)));
  }
  return positive_lc(interpolate_consecutive(values, start));
}

IntPoly graeffe(const IntPoly& f, std::uint64_t k) {
  if (f.is_zero()) throw std::invalid_argument("graeffe: zero input");
  if (k == 0) throw std::invalid_argument("graeffe: k must be positive");
  IntPoly g = positive_lc(f);
  if (k == 1) return g;
  for (auto [p, e] : factor(k)) {
    for (unsigned i = 0; i < e; ++i) {
      if (p == 2) {
        g = graeffe2(g);
      } else if (p == 3) {
        g = graeffe3(g);
      } else {
        g = graeffe_prime_by_resultant(g, p);
      }
    }
  }
  return g;
}

}  // namespace cyclo
