// SPDX-License-Identifier: Apache-2.0
//
// LRS-degeneracy: f is k-LRS-degenerate when two distinct roots of f have a
// primitive k-th root of unity as their ratio.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclo/numtheory.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

enum class OrderStatus { probable, verified, refuted };
enum class LrsMode { all_orders, first_order, decision_only };

std::string to_string(OrderStatus s);
std::string to_string(LrsMode m);

struct OrderEntry {
  u64 k;
  OrderStatus status;
  std::string source;  // "scan", "f(x),f(-x)", "deflation", "lifted", "cyclotomic factor"
};

struct OrderReport {
  std::vector<OrderEntry> orders;  // ascending k
  std::vector<std::string> preprocessing_log;
  LrsMode mode = LrsMode::all_orders;
  bool conjecture_bound_used = false;
  std::optional<bool> degenerate;  // decision_only answer
  std::size_t candidates_tested = 0;

  // Orders not refuted, ascending.
  std::vector<u64> order_list() const;
};

// lambda = (num/den)^(1/root); the result g satisfies g(x) ~ f(lambda*x) up to
// a constant (and, for binomials, a root of unity).
struct ScaleFactor {
  Integer num = 1;
  Integer den = 1;
  u64 root = 1;
};
std::string to_string(const ScaleFactor& s);

struct CoefficientReduction {
  IntPoly g;
  ScaleFactor lambda;
};

// One pass on f, one on the reversal, reversed back.
CoefficientReduction reduce_coefficients(const IntPoly& f);
// A single pass.
CoefficientReduction reduce_coefficients_once(const IntPoly& f);

struct PreprocessOptions {
  bool decision_only = false;
  bool reduce_coefficients = false;
  u64 seed = 0;  // randomness for the cyclotomic-factor search
};

struct Preprocessed {
  IntPoly core;  // square-free, content-free, core(0) != 0, not a polynomial in x^r for r > 1
  u64 r = 1;     // input (after the first three steps) is core(x^r)
  std::vector<std::string> log;
  // Decision-only mode: set when preprocessing already proves degeneracy,
  // with a witnessing order.
  std::optional<u64> witness;
  std::string witness_source;
};

Preprocessed preprocess(const IntPoly& f, const PreprocessOptions& opts = {});

// Orders k of r-th roots: every k | r*kappa with k / gcd(k, r) = kappa.
std::vector<u64> lift_order(u64 kappa, u64 r);

struct CandidateOrders {
  std::vector<u64> divisor_sieve;  // D, ascending, deduplicated
  std::vector<u64> orders;         // ascending, all >= 3
};
CandidateOrders lrs_order_candidates(u64 d, bool conjecture_bound = false);

// One-sided modular test for k >= 3 on a square-free f with f(0) != 0: false
// means f is certainly not k-LRS-degenerate.
bool modular_order_test(const IntPoly& f, u64 k, Rng& rng, unsigned rounds = 3);

// Exact: gcd(f, res_y(f(xy), Phi_k(y))) != 1, with the resultant assembled
// from Graeffe transforms by Moebius inversion.
bool verify_order(const IntPoly& f, u64 k);
// res_y(f(xy), Phi_k(y)) up to sign.
IntPoly phi_scaled_resultant(const IntPoly& f, u64 k);

struct LrsOptions {
  bool verify = false;
  LrsMode mode = LrsMode::all_orders;
  bool conjecture_bound = false;
  bool reduce_coefficients = false;
  unsigned threads = 1;
  unsigned prime_rounds = 3;
};

OrderReport lrs_degeneracy_orders(const IntPoly& f, Rng& rng, const LrsOptions& opts = {});

// Baselines, used as test oracles.

// res_y(f(y), f(xy)) / (x-1)^d.
IntPoly cdm_resultant_poly(const IntPoly& f);
// Every order, as the cyclotomic factor indexes of R_f.
std::vector<u64> cdm_algorithm1(const IntPoly& f, long max_degree = 12);
// Smallest k in [3, min(k_max, 5 d^2)] with G_k(f) not square-free.
std::optional<u64> cdm_algorithm2_first_order(const IntPoly& f, u64 k_max);

}  // namespace cyclo
