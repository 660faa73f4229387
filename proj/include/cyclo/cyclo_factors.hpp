// SPDX-License-Identifier: Apache-2.0
//
// Indexes of the cyclotomic factors of an integer polynomial, found by
// evaluating at rational points and matching primitive prime factors.

#pragma once

#include <vector>

#include "cyclo/numtheory.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

enum class IndexStatus { probable, verified, refuted };
std::string to_string(IndexStatus s);

struct IndexEntry {
  u64 k;
  IndexStatus status;
};

struct FactorIndexReport {
  std::vector<u64> verified_low;      // subset of {1, 2}
  std::vector<IndexEntry> candidates;  // indexes >= 3, ascending
  std::vector<RationalPoint> evaluation_points_used;
  bool verification_done = false;
  u64 initial_bound = 0;  // phi(k) bound used for the initial candidate list
  std::vector<std::string> preprocessing_log;

  // verified_low plus every candidate not refuted.
  std::vector<u64> indexes() const;
};

// Candidates in L (all >= 3, ascending) that survive evaluation at beta > 1.
std::vector<u64> refine_candidates(IntPoly f, const RationalPoint& beta, const std::vector<u64>& L,
                                   bool palindromic = false);

// Next reduced fraction > 1 in (p, q) lexicographic order.
RationalPoint next_rational(const RationalPoint& r);
// Advances by a random jump in [1, max_jump]; numerators capped at 2^16.
RationalPoint random_rational(Rng& rng, const RationalPoint& previous, unsigned max_jump = 8);

// phi(k) <= deg f - (r + s + 2) when the outer runs of coefficients share a
// factor; falls back to deg f.
u64 initial_totient_bound(const IntPoly& f);

struct FactorOptions {
  bool verify = false;
  bool preprocess = false;
};

FactorIndexReport find_cyclo_factor_indexes(const IntPoly& f, Rng& rng, const FactorOptions& opts = {});

}  // namespace cyclo
