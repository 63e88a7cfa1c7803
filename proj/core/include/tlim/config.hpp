#pragma once

// Study configuration files are JSON documents:
//
//   {
//     "symbol":       {"catalog": "linear_factors"}
//                   | {"kind": "laurent", "offset": -1, "coefficients": [c, ...]}
//                   | {"kind": "product_of_linear_factors",
//                      "plus_roots": [a, ...], "minus_roots": [b, ...]}
//                   | {"kind": "exp_laurent", "offset": -1, "coefficients": [l, ...]},
//     "perturbation": {"p": [1, 0], "q": [0, 1]},
//     "n_schedule":   [8, 16, 24, 32, 40],
//     "truncation":   64,                                  (optional)
//     "tolerances":   {"truncation_tol": 1e-12, "residual_tol": 1e-10,
//                      "singularity_tol": 1e-13},          (optional)
//     "checks":       {"schur": true, "entry": true,
//                      "szego": true, "inverse_norm": false},  (optional)
//     "output":       {"format": "csv" | "json", "path": "out.csv"}  (optional)
//   }
//
// A complex number is a JSON number, a pair [re, im], or {"re": x, "im": y}.
// Unknown keys are rejected.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tlim/symbol.hpp"
#include "tlim/toeplitz.hpp"

namespace tlim {

struct Tolerances {
  double truncation_tol = 1e-12;
  double residual_tol = 1e-10;
  double singularity_tol = 1e-13;
};

struct Checks {
  bool schur = false;
  bool entry = false;
  bool szego = false;
  bool inverse_norm = false;
};

enum class ReportFormat { kCsv, kJson };

struct OutputSpec {
  ReportFormat format = ReportFormat::kCsv;
  std::string path;  // empty: standard output
};

struct StudyConfig {
  SymbolSpec symbol;
  Perturbation perturbation;
  std::vector<int> n_schedule;
  std::optional<int> truncation;  // chosen automatically when absent
  Tolerances tolerances;
  Checks checks;
  OutputSpec output;
};

StudyConfig parse_config(std::string_view json_text);
StudyConfig load_config(const std::filesystem::path& path);

// Strictly increasing positive schedule, positive tolerances.
void validate_config(const StudyConfig& cfg);

// Explicit truncation if given, else max(64, 4 * bandwidth, what the largest
// scheduled M_{m+n} needs).
int effective_truncation(const StudyConfig& cfg);

ReportFormat parse_format(std::string_view name);

// Comma-separated positive integers, e.g. "8,16,32".
std::vector<int> parse_schedule(std::string_view list);

}  // namespace tlim
