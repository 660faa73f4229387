// SPDX-License-Identifier: Apache-2.0
//
// Front-end plumbing: polynomial input, subcommand reports, benchmarks.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cyclo/cyclo_test.hpp"
#include "cyclo/lrs.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

using Json = nlohmann::ordered_json;

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Expression over x with + - * ^ and parentheses, or an ascending
// coefficient list "[a0, a1, ...]".
IntPoly parse_poly(std::string_view text);

// Reads "@path" files ('#' comments; remaining lines form one polynomial,
// either an expression or an ascending coefficient list); anything else is
// parsed directly.
IntPoly read_poly_argument(const std::string& arg);

// "[a0, a1, ...]"
std::string to_coefficient_list(const IntPoly& f);

enum class OutputFormat { json, text };

struct RunConfig {
  u64 seed = 1;
  bool verify = false;
  OutputFormat format = OutputFormat::json;
  std::optional<std::string> bfile_path;
  bool conjecture_bound = false;
  bool timings = false;  // include wall-clock times (breaks byte-identical output)
  CycloMethod method = CycloMethod::prefix;
  LrsMode mode = LrsMode::all_orders;
  bool preprocess = false;
  bool further_checks = false;
  unsigned threads = 1;
};

struct CommandOutput {
  Json json;
  std::string text;
};

CommandOutput cmd_cyclo_index(const IntPoly& f, const RunConfig& cfg);
CommandOutput cmd_cyclo_factors(const IntPoly& f, const RunConfig& cfg);
CommandOutput cmd_lrs_orders(const IntPoly& f, const RunConfig& cfg);
// Scenarios: table1, table2, table3.
CommandOutput cmd_bench(const std::string& scenario, const RunConfig& cfg);

// Generators shared by the benchmarks and tests.
struct CycloProduct {
  IntPoly poly;
  std::vector<u64> indexes;  // ascending ground truth
};
// Product of Phi_k over a random `count`-subset of {1..range}.
CycloProduct random_cyclotomic_product(u64 range, u64 count, Rng& rng);
// Degree d, coefficients uniform in [-bound, bound], nonzero ends.
IntPoly random_poly(long d, long bound, Rng& rng);

}  // namespace cyclo
