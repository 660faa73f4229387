// SPDX-License-Identifier: Apache-2.0
//
// Small-degree LRS corpus shared by the unit and acceptance tests.

#pragma once

#include <string>
#include <vector>

#include "cyclo/cli.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/lrs.hpp"

namespace cyclo::corpus {

struct CorpusEntry {
  std::string label;
  IntPoly f;  // square-free, content-free, f(0) != 0, degree in [2, 8]
};

inline IntPoly normalise(const IntPoly& f) {
  IntPoly g = radical_poly(primitive_part(strip_x_power(f).g));
  return g.leading() < 0 ? -g : g;
}

inline IntPoly phi_product(const std::vector<u64>& ks) {
  IntPoly f = IntPoly::constant(1);
  for (u64 k : ks) f = multiply_by_phi(f, k);
  return f;
}

// res_y(f(y), g(xy)): roots are ratios alpha/beta.
inline IntPoly ratio_resultant(const IntPoly& f, const IntPoly& g) {
  const long n = f.degree() * g.degree();
  std::vector<Integer> vals;
  for (long x0 = 1; x0 <= n + 1; ++x0) vals.push_back(resultant(f, scale_arg(g, Integer(x0), Integer(1))));
  return interpolate_consecutive(vals, 1);
}

inline std::vector<CorpusEntry> lrs_corpus(std::size_t random_count, u64 seed) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string label, const IntPoly& f) {
    IntPoly g = normalise(f);
    if (g.degree() >= 2 && g.degree() <= 8) out.push_back({std::move(label), std::move(g)});
  };
  Rng rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    const long d = 2 + static_cast<long>(i % 7);
    add("random deg " + std::to_string(d), random_poly(d, 1024, rng));
  }
  // Products of cyclotomic polynomials of total degree <= 8.
  const std::vector<std::vector<u64>> cyclo = {{3},     {4},     {5},     {6},     {7},      {8},     {9},
                                               {10},    {12},    {15},    {16},    {20},     {24},    {30},
                                               {3, 4},  {3, 5},  {3, 6},  {4, 5},  {5, 10},  {3, 12}, {4, 6, 12},
                                               {1, 3},  {2, 9},  {1, 2, 6}, {7, 3}, {8, 5}, {3, 4, 6}, {14, 2}};
  for (const auto& ks : cyclo) {
    std::string label = "phi";
    for (u64 k : ks) label += " " + std::to_string(k);
    add(label, phi_product(ks));
  }
  // Products of non-degenerate quadratics that become degenerate.
  const IntPoly f1{5, 6, 5}, f2{5, 8, 5};
  const IntPoly g1{7, 2, 7}, g2{7, 11, 7}, g3{7, 13, 7};
  add("f1", f1);
  add("f2", f2);
  add("f1*f2", f1 * f2);
  add("g1*g2", g1 * g2);
  add("g1*g3", g1 * g3);
  add("g2*g3", g2 * g3);
  add("G5(f1)*G5(f2)", graeffe(f1, 5) * graeffe(f2, 5));
  add("G3(f1)*G3(f2)", graeffe(f1, 3) * graeffe(f2, 3));
  add("G5(g1)*G5(g2)", graeffe(g1, 5) * graeffe(g2, 5));
  add("G7(g1)*G7(g3)", graeffe(g1, 7) * graeffe(g3, 7));
  // Single examples.
  add("x^4+2x^2+4x+2", IntPoly{2, 4, 2, 0, 1});
  add("x^6+3x^5+6x^4+6x^3+3", IntPoly{3, 0, 0, 6, 6, 3, 1});
  add("x^2+3x+3", IntPoly{3, 3, 1});
  add("x^2+x+3", IntPoly{3, 1, 1});
  for (long n : {2L, 3L, 5L, -7L}) add("x^2-n", IntPoly{-n, 0, 1});
  // g(x) g(-x), deflations and scaled ratio constructions.
  for (int i = 0; i < 12; ++i) {
    const IntPoly g = random_poly(2 + i % 3, 50, rng);
    add("g(x)g(-x)", g * negate_arg(g));
    add("g(x^2)", inflate(random_poly(2 + i % 3, 50, rng), 2));
    add("res(Phi3, g(xy))", ratio_resultant(phi_poly(3), random_poly(2, 20, rng)));
    add("res(Phi_4, g(xy))", ratio_resultant(phi_poly(4), random_poly(2 + i % 2, 20, rng)));
    add("g(x)*g(zeta x) pair", random_poly(2, 30, rng) * IntPoly{1, 1, 1});
  }
  return out;
}

}  // namespace cyclo::corpus
