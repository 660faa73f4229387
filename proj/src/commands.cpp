// SPDX-License-Identifier: Apache-2.0

#include <chrono>
#include <sstream>

#include "cyclo/cli.hpp"
#include "cyclo/cyclo_factors.hpp"
#include "cyclo/cyclotomic.hpp"

namespace cyclo {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Json envelope(const IntPoly& f, const char* command, const RunConfig& cfg) {
  Json j;
  j["input_degree"] = f.degree();
  j["command"] = command;
  j["seed"] = cfg.seed;
  j["result"] = nullptr;
  j["timings_ms"] = nullptr;
  j["preprocessing_log"] = Json::array();
  return j;
}

void set_timing(Json& j, const RunConfig& cfg, Clock::time_point t0) {
  if (cfg.timings) j["timings_ms"] = Json{{"total", ms_since(t0)}};
}

std::string join(const std::vector<u64>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s.empty() ? "(none)" : s;
}

void require_nonzero(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial is not a valid input");
}

}  // namespace

CommandOutput cmd_cyclo_index(const IntPoly& f, const RunConfig& cfg) {
  require_nonzero(f);
  const auto t0 = Clock::now();
  std::optional<HeightTable> bfile;
  if (cfg.bfile_path) bfile = HeightTable::from_bfile_path(*cfg.bfile_path);
  CycloOptions opts;
  opts.method = cfg.method;
  opts.verify = cfg.verify;
  opts.further_checks = cfg.further_checks;
  opts.bfile = bfile ? &*bfile : nullptr;
  const CycloVerdict v = cyclo_index(f, opts);

  CommandOutput out;
  out.json = envelope(f, "index", cfg);
  Json r;
  r["cyclotomic"] = v.is_cyclotomic();
  r["outcome"] = to_string(v.outcome);
  r["index"] = v.outcome == CycloOutcome::not_cyclotomic ? Json(nullptr) : Json(v.index);
  r["method"] = to_string(v.method);
  r["failed_check"] = v.failed_check.empty() ? Json(nullptr) : Json(v.failed_check);
  out.json["result"] = std::move(r);
  set_timing(out.json, cfg, t0);

  std::ostringstream t;
  switch (v.outcome) {
    case CycloOutcome::cyclotomic:
      t << "cyclotomic: Phi_" << v.index << "\n";
      break;
    case CycloOutcome::candidate_unverified:
      t << "candidate (unverified): Phi_" << v.index << "\n";
      break;
    case CycloOutcome::not_cyclotomic:
      t << "not cyclotomic (failed " << v.failed_check << ")\n";
      break;
  }
  out.text = t.str();
  return out;
}

CommandOutput cmd_cyclo_factors(const IntPoly& f, const RunConfig& cfg) {
  require_nonzero(f);
  if (f.degree() < 1) throw std::invalid_argument("factors: non-constant polynomial required");
  const auto t0 = Clock::now();
  Rng rng(cfg.seed);
  const FactorIndexReport rep = find_cyclo_factor_indexes(f, rng, {cfg.verify, cfg.preprocess});

  CommandOutput out;
  out.json = envelope(f, "factors", cfg);
  Json r;
  r["indexes"] = rep.indexes();
  Json cands = Json::array();
  for (u64 k : rep.verified_low) cands.push_back({{"k", k}, {"status", "verified"}});
  for (const auto& c : rep.candidates) cands.push_back({{"k", c.k}, {"status", to_string(c.status)}});
  r["candidates"] = std::move(cands);
  r["verification_done"] = rep.verification_done;
  r["initial_totient_bound"] = rep.initial_bound;
  Json pts = Json::array();
  for (const auto& b : rep.evaluation_points_used) pts.push_back(to_string(b));
  r["evaluation_points"] = std::move(pts);
  out.json["result"] = std::move(r);
  out.json["preprocessing_log"] = rep.preprocessing_log;
  set_timing(out.json, cfg, t0);

  std::ostringstream t;
  t << "cyclotomic factor indexes: " << join(rep.indexes()) << "\n";
  for (const auto& c : rep.candidates) {
    if (c.status != IndexStatus::verified) t << "  " << c.k << ": " << to_string(c.status) << "\n";
  }
  out.text = t.str();
  return out;
}

CommandOutput cmd_lrs_orders(const IntPoly& f, const RunConfig& cfg) {
  require_nonzero(f);
  const auto t0 = Clock::now();
  Rng rng(cfg.seed);
  LrsOptions opts;
  opts.verify = cfg.verify;
  opts.mode = cfg.mode;
  opts.conjecture_bound = cfg.conjecture_bound;
  opts.threads = cfg.threads;
  opts.reduce_coefficients = cfg.preprocess;
  const OrderReport rep = lrs_degeneracy_orders(f, rng, opts);

  CommandOutput out;
  out.json = envelope(f, "lrs", cfg);
  Json r;
  Json orders = Json::array();
  for (const auto& e : rep.orders) orders.push_back({{"k", e.k}, {"status", to_string(e.status)}, {"source", e.source}});
  r["orders"] = std::move(orders);
  r["mode"] = to_string(rep.mode);
  r["conjecture_bound_used"] = rep.conjecture_bound_used;
  r["degenerate"] = rep.degenerate ? Json(*rep.degenerate) : Json(nullptr);
  r["candidates_tested"] = rep.candidates_tested;
  out.json["result"] = std::move(r);
  out.json["preprocessing_log"] = rep.preprocessing_log;
  set_timing(out.json, cfg, t0);

  std::ostringstream t;
  if (rep.degenerate) t << "LRS-degenerate: " << (*rep.degenerate ? "yes" : "no") << "\n";
  t << "orders: " << join(rep.order_list()) << "\n";
  for (const auto& e : rep.orders) t << "  " << e.k << ": " << to_string(e.status) << " (" << e.source << ")\n";
  out.text = t.str();
  return out;
}

}  // namespace cyclo
