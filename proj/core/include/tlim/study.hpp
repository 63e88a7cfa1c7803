#pragma once

// Convergence study: det M_{m+n} / det T_n over a schedule of n, compared
// against the limit determinant built from the Wiener-Hopf factors.

#include <optional>
#include <string>
#include <vector>

#include "tlim/config.hpp"
#include "tlim/limit.hpp"
#include "tlim/linalg.hpp"
#include "tlim/wiener_hopf.hpp"

namespace tlim {

struct StudyRecord {
  int n = 0;
  LogDet logdet_t;
  LogDet logdet_m;
  Complex ratio;
  double abs_error = 0.0;
  std::optional<double> schur_residual;
  std::optional<double> entry_residual;
  std::optional<double> inverse_norm;
};

struct ConvergenceReport {
  int truncation = 0;
  Complex limit_value;
  double factor_residual = 0.0;
  std::optional<SzegoConstants> szego;
  std::vector<StudyRecord> records;  // one per scheduled n, in schedule order
  std::vector<double> error_trajectory;  // |ratio - limit_value| per record
  std::vector<std::string> warnings;
};

// Everything a study derives from the symbol once, independent of n.
struct PreparedSymbol {
  int truncation = 0;
  FourierSeries series;
  FourierSeries log_series;
  Factorization factorization;
};

PreparedSymbol prepare_symbol(const SymbolSpec& symbol, int truncation,
                              const Tolerances& tolerances);

struct RunOptions {
  // Evaluate scheduled n concurrently; output order is unaffected.
  bool parallel = true;
};

ConvergenceReport run_study(const StudyConfig& cfg, const RunOptions& opts = {});

}  // namespace tlim
