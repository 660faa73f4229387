// SPDX-License-Identifier: Apache-2.0
//
// Dense polynomials over a word-size prime field.

#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/poly.hpp"

namespace cyclo {

class PrimeFieldPoly {
 public:
  PrimeFieldPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);  // reduces and trims
  explicit PrimeFieldPoly(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const { return p_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::uint64_t operator[](std::size_t j) const { return c_[j]; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  friend bool operator==(const PrimeFieldPoly&, const PrimeFieldPoly&) = default;
  friend PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b);

 private:
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

struct ModReduction {
  PrimeFieldPoly poly;
  bool degree_dropped;
};

ModReduction reduce_mod(const IntPoly& f, std::uint64_t p);

PrimeFieldPoly monic(const PrimeFieldPoly& f);
// Monic gcd; throws std::invalid_argument on modulus mismatch or two zero inputs.
PrimeFieldPoly gcd_mod(PrimeFieldPoly f, PrimeFieldPoly g);
// a_j -> a_j * c^j
PrimeFieldPoly scale_arg_mod(const PrimeFieldPoly& f, std::uint64_t c);

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

}  // namespace cyclo
