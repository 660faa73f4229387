// SPDX-License-Identifier: Apache-2.0
//
// Cyclotomic polynomials, their truncated Moebius products, and the
// coefficient-height tables used to reject non-cyclotomic inputs early.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/numtheory.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

IntPoly phi_poly(u64 k);

// Phi_k mod x^m from prod_{d|k, d<m} (1 - x^d)^mu(k/d), k >= 2.
// The word version returns nullopt as soon as an int64 operation overflows.
std::optional<std::vector<std::int64_t>> phi_suffix_word(u64 k, std::size_t m);
IntPoly phi_suffix(u64 k, std::size_t m);

// Phi_k(p/q)_num = prod_{d|k} (p^d - q^d)^mu(k/d)   (p - q for k = 1).
Integer phi_value_num(u64 k, const RationalPoint& beta);

// f * Phi_k and f / Phi_k via shift-and-subtract with x^d - 1 factors.
IntPoly multiply_by_phi(const IntPoly& f, u64 k);
std::optional<IntPoly> divide_by_phi(const IntPoly& f, u64 k);

class HeightTable {
 public:
  enum class Source { builtin, oeis_bfile };
  struct Row {
    u64 limit;
    u64 height;
  };

  HeightTable(std::vector<Row> rows, Source source);

  // Degree cascade: bound on H(Phi_k) for phi(k) < limit.
  static const HeightTable& degree_table();
  // "n a(n)" lines, '#' comments.  Rows become (n+1, max_{i<=n} a(i)), so
  // lookup(m-1) bounds the m outermost coefficients.
  static HeightTable from_bfile(std::istream& in);
  static HeightTable from_bfile_path(const std::string& path);

  // Height of the first row with x < limit.
  std::optional<u64> lookup(u64 x) const;
  Source source() const { return source_; }
  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::vector<Row> rows_;
  Source source_;
};

std::optional<u64> height_bound_by_degree(u64 d);

// Bound on the m outermost coefficients of Phi_n.
std::optional<u64> outer_coeff_bound(std::size_t m, u64 n, const HeightTable* bfile = nullptr);

}  // namespace cyclo
