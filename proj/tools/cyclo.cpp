// SPDX-License-Identifier: Apache-2.0
//
// cyclo: cyclotomicity, cyclotomic factors and LRS-degeneracy from the
// command line.

#include <iostream>

#include <CLI11.hpp>

#include "cyclo/cli.hpp"

int main(int argc, char** argv) {
  using namespace cyclo;
  CLI::App app{"Cyclotomic tests, cyclotomic factor indexes and LRS-degeneracy orders"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  RunConfig cfg;
  std::string format = "json";
  std::string bfile;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--bfile", bfile, "OEIS b-file of cyclotomic heights (A160340 layout)");
  app.add_flag("--timings", cfg.timings, "Include wall-clock times in the report");

  std::string poly_arg;
  const char* poly_help = "Polynomial: expression in x, ascending list [a0, a1, ...], or @file";

  auto* index = app.add_subcommand("index", "Is the polynomial cyclotomic, and which index?");
  index->add_option("poly", poly_arg, poly_help)->required();
  std::string method = "prefix";
  bool no_verify = false;
  index->add_option("--method", method, "Index method")->check(CLI::IsMember({"prefix", "eval"}));
  index->add_flag("--no-verify", no_verify, "Return the candidate index without the final check");
  index->add_flag("--further-checks", cfg.further_checks, "Run the palindrome/height/evaluation checks first");

  auto* factors = app.add_subcommand("factors", "Indexes of all cyclotomic factors");
  factors->add_option("poly", poly_arg, poly_help)->required();
  factors->add_flag("--verify", cfg.verify, "Confirm each candidate by exact division");
  factors->add_flag("--preprocess", cfg.preprocess, "Reduce to the square-free palindromic part first");
  factors->add_option("--seed", cfg.seed, "Random seed");

  auto* lrs = app.add_subcommand("lrs", "LRS-degeneracy orders");
  lrs->add_option("poly", poly_arg, poly_help)->required();
  std::string mode = "all";
  lrs->add_option("--mode", mode, "all orders, first order, or decision only")
      ->check(CLI::IsMember({"all", "first", "decide"}));
  lrs->add_flag("--verify", cfg.verify, "Confirm each probable order exactly");
  lrs->add_option("--seed", cfg.seed, "Random seed");
  lrs->add_flag("--conjecture-bound", cfg.conjecture_bound, "Only orders with phi(k) <= deg f (conjectural)");
  lrs->add_option("--threads", cfg.threads, "Worker threads for the order scan")->check(CLI::Range(1u, 256u));
  lrs->add_flag("--reduce-coefficients", cfg.preprocess, "Shrink coefficients by root scaling first");

  auto* bench = app.add_subcommand("bench", "Desk-scale benchmark scenarios");
  std::string scenario;
  bench->add_option("scenario", scenario, "table1, table2 or table3")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "table3"}));
  bench->add_option("--seed", cfg.seed, "Random seed");
  bench->add_flag("--verify", cfg.verify, "Verify results");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.format = format == "text" ? OutputFormat::text : OutputFormat::json;
  if (!bfile.empty()) cfg.bfile_path = bfile;
  cfg.method = method == "eval" ? CycloMethod::eval : CycloMethod::prefix;
  if (*index) cfg.verify = !no_verify;
  cfg.mode = mode == "first" ? LrsMode::first_order : mode == "decide" ? LrsMode::decision_only : LrsMode::all_orders;

  try {
    CommandOutput out;
    if (*bench) {
      out = cmd_bench(scenario, cfg);
    } else {
      const IntPoly f = read_poly_argument(poly_arg);
      if (*index) {
        out = cmd_cyclo_index(f, cfg);
      } else if (*factors) {
        out = cmd_cyclo_factors(f, cfg);
      } else {
        out = cmd_lrs_orders(f, cfg);
      }
    }
    if (cfg.format == OutputFormat::json) {
      std::cout << out.json.dump(2) << "\n";
    } else {
      std::cout << out.text;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
