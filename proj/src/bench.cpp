// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
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

IntPoly product_of_phi(const std::vector<u64>& ks) {
  IntPoly f = IntPoly::constant(1);
  for (u64 k : ks) f = multiply_by_phi(f, k);
  return f;
}

// Two-prime indexes where a long prefix is needed and phi has many preimages.
Json bench_table1(const RunConfig& cfg, std::ostringstream& text) {
  static const std::pair<u64, u64> kCases[] = {{181, 331}, {227, 431}, {263, 521}, {317, 607}};
  Json rows = Json::array();
  text << std::left << std::setw(10) << "index" << std::setw(12) << "factors" << std::setw(10) << "#preimg"
       << std::setw(10) << "result" << "ms\n";
  for (auto [p, q] : kCases) {
    const u64 k = p * q;
    const IntPoly f = phi_poly(k);
    const u64 d = static_cast<u64>(f.degree());
    const std::size_t pre = inverse_totient(d, true).size();
    CycloOptions opts;
    opts.method = CycloMethod::prefix;
    opts.verify = cfg.verify;
    const auto t0 = Clock::now();
    const CycloVerdict v = cyclo_index(f, opts);
    const double ms = ms_since(t0);
    const bool ok = v.outcome != CycloOutcome::not_cyclotomic && v.index == k;
    rows.push_back({{"index", k},
                    {"factors", std::to_string(p) + "x" + std::to_string(q)},
                    {"squarefree_preimages", pre},
                    {"found", v.index},
                    {"correct", ok},
                    {"ms", ms}});
    text << std::setw(10) << k << std::setw(12) << (std::to_string(p) + "x" + std::to_string(q)) << std::setw(10)
         << pre << std::setw(10) << (ok ? "ok" : "WRONG") << std::fixed << std::setprecision(1) << ms << "\n";
  }
  return rows;
}

Json bench_table2(const RunConfig& cfg, std::ostringstream& text) {
  static const std::pair<u64, u64> kRows[] = {{500, 100}, {1000, 50}, {1000, 100}};
  constexpr int kCasesPerRow = 3;
  Rng rng(cfg.seed);
  Json rows = Json::array();
  text << std::left << std::setw(8) << "range" << std::setw(8) << "count" << std::setw(12) << "avg deg"
       << std::setw(10) << "missed" << std::setw(10) << "false+" << "avg ms\n";
  for (auto [range, count] : kRows) {
    double total_ms = 0;
    double total_deg = 0;
    std::size_t missed = 0;
    std::size_t false_pos = 0;
    for (int c = 0; c < kCasesPerRow; ++c) {
      const CycloProduct cp = random_cyclotomic_product(range, count, rng);
      const auto t0 = Clock::now();
      const FactorIndexReport rep = find_cyclo_factor_indexes(cp.poly, rng, {cfg.verify, false});
      total_ms += ms_since(t0);
      total_deg += static_cast<double>(cp.poly.degree());
      const std::vector<u64> got = rep.indexes();
      for (u64 k : cp.indexes) missed += !std::binary_search(got.begin(), got.end(), k);
      for (u64 k : got) false_pos += !std::binary_search(cp.indexes.begin(), cp.indexes.end(), k);
    }
    rows.push_back({{"range", range},
                    {"count", count},
                    {"cases", kCasesPerRow},
                    {"avg_degree", total_deg / kCasesPerRow},
                    {"missed", missed},
                    {"false_positives", false_pos},
                    {"avg_ms", total_ms / kCasesPerRow}});
    text << std::setw(8) << range << std::setw(8) << count << std::setw(12) << std::fixed << std::setprecision(0)
         << total_deg / kCasesPerRow << std::setw(10) << missed << std::setw(10) << false_pos << std::setprecision(1)
         << total_ms / kCasesPerRow << "\n";
  }
  return rows;
}

Json bench_table3(const RunConfig& cfg, std::ostringstream& text) {
  struct Case {
    std::string description;
    IntPoly f;
    bool verify;
  };
  Rng rng(cfg.seed);
  std::vector<Case> cases;
  for (long d : {25L, 50L, 100L, 200L}) cases.push_back({"random", random_poly(d, 1024, rng), cfg.verify});
  // Verification of the large orders of these products is expensive; their
  // rows are always unverified.
  cases.push_back({"Phi51*Phi65*Phi77", product_of_phi({51, 65, 77}), false});
  cases.push_back({"Phi165*Phi183", product_of_phi({165, 183}), false});

  Json rows = Json::array();
  text << std::left << std::setw(20) << "description" << std::setw(6) << "deg" << std::setw(10) << "verified"
       << std::setw(10) << "ms" << "orders\n";
  for (const auto& c : cases) {
    LrsOptions opts;
    opts.verify = c.verify;
    Rng r(substream_seed(cfg.seed, static_cast<u64>(c.f.degree())));
    const auto t0 = Clock::now();
    const OrderReport rep = lrs_degeneracy_orders(c.f, r, opts);
    const double ms = ms_since(t0);
    const auto orders = rep.order_list();
    rows.push_back({{"description", c.description},
                    {"degree", c.f.degree()},
                    {"verified", c.verify},
                    {"ms", ms},
                    {"orders", orders}});
    std::string os;
    for (u64 k : orders) os += std::to_string(k) + " ";
    text << std::setw(20) << c.description << std::setw(6) << c.f.degree() << std::setw(10)
         << (c.verify ? "yes" : "no") << std::setw(10) << std::fixed << std::setprecision(1) << ms
         << (os.empty() ? "(none)" : os) << "\n";
  }
  return rows;
}

}  // namespace

CycloProduct random_cyclotomic_product(u64 range, u64 count, Rng& rng) {
  if (count > range) throw std::invalid_argument("random_cyclotomic_product: count exceeds range");
  std::vector<u64> all(range);
  std::iota(all.begin(), all.end(), 1);
  for (u64 i = 0; i < count; ++i) {
    const u64 j = std::uniform_int_distribution<u64>(i, range - 1)(rng);
    std::swap(all[i], all[j]);
  }
  std::vector<u64> ks(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count));
  std::sort(ks.begin(), ks.end());
  return {product_of_phi(ks), ks};
}

IntPoly random_poly(long d, long bound, Rng& rng) {
  if (d < 0 || bound < 1) throw std::invalid_argument("random_poly: bad parameters");
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(d + 1));
  for (auto& a : c) a = coef(rng);
  auto nonzero = [&](Integer& a) {
    while (a == 0) a = coef(rng);
  };
  nonzero(c.front());
  nonzero(c.back());
  return IntPoly(std::move(c));
}

CommandOutput cmd_bench(const std::string& scenario, const RunConfig& cfg) {
  std::ostringstream text;
  Json rows;
  if (scenario == "table1") {
    rows = bench_table1(cfg, text);
  } else if (scenario == "table2") {
    rows = bench_table2(cfg, text);
  } else if (scenario == "table3") {
    rows = bench_table3(cfg, text);
  } else {
    throw std::invalid_argument("unknown bench scenario '" + scenario + "' (table1, table2, table3)");
  }
  CommandOutput out;
  out.json["input_degree"] = nullptr;
  out.json["command"] = "bench";
  out.json["seed"] = cfg.seed;
  out.json["result"] = {{"scenario", scenario}, {"rows", std::move(rows)}};
  out.json["timings_ms"] = nullptr;
  out.json["preprocessing_log"] = Json::array();
  out.text = text.str();
  return out;
}

}  // namespace cyclo
