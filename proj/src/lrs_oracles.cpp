// SPDX-License-Identifier: Apache-2.0

#include <map>
#include <stdexcept>

#include "cyclo/cyclo_factors.hpp"
#include "cyclo/lrs.hpp"

namespace cyclo {

IntPoly cdm_resultant_poly(const IntPoly& f) {
  const long d = f.degree();
  if (d < 1 || f[0] == 0) throw std::invalid_argument("cdm_resultant_poly: need degree >= 1 and f(0) != 0");
  const long n = d * d - d;
  std::vector<Integer> values;
  values.reserve(static_cast<std::size_t>(n + 1));
  Integer step;
  for (long x0 = 2; x0 <= n + 2; ++x0) {
    // res_y(f(y), f(x0*y)) / (x0 - 1)^d; x0 = 1 would give 0/0.
    const IntPoly fx = scale_arg(f, Integer(x0), Integer(1));
    Integer v = resultant(f, fx);
    mpz_ui_pow_ui(step.get_mpz_t(), static_cast<unsigned long>(x0 - 1), static_cast<unsigned long>(d));
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), step.get_mpz_t());
    values.push_back(std::move(v));
  }
  return interpolate_consecutive(values, 2);
}

std::vector<u64> cdm_algorithm1(const IntPoly& f, long max_degree) {
  if (f.degree() < 2) throw std::invalid_argument("cdm_algorithm1: degree must be at least 2");
  if (f.degree() > max_degree) throw std::invalid_argument("cdm_algorithm1: degree above the oracle cap");
  const IntPoly rf = cdm_resultant_poly(f);
  if (rf.degree() < 1) return {};
  Rng rng(0x0dd5eedULL);
  return find_cyclo_factor_indexes(rf, rng, {true, false}).indexes();
}

std::optional<u64> cdm_algorithm2_first_order(const IntPoly& f, u64 k_max) {
  const u64 d = static_cast<u64>(std::max(0L, f.degree()));
  if (d < 1) throw std::invalid_argument("cdm_algorithm2_first_order: non-constant polynomial required");
  const u64 limit = std::min(k_max, 5 * d * d);
  std::map<u64, IntPoly> memo;
  memo.emplace(1, f.leading() < 0 ? -f : f);
  auto get = [&](auto&& self, u64 k) -> const IntPoly& {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    const u64 p = largest_prime_factor(k);
    IntPoly g = graeffe(self(self, k / p), p);
    return memo.emplace(k, std::move(g)).first->second;
  };
  for (u64 k = 3; k <= limit; ++k) {
    if (!is_squarefree(get(get, k))) return k;
  }
  return std::nullopt;
}

}  // namespace cyclo
