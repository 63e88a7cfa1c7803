#include "tlim/study.hpp"

#include <fmt/core.h>

#include <future>

#include "tlim/errors.hpp"
#include "tlim/toeplitz.hpp"

namespace tlim {
namespace {

SymbolOptions symbol_options(const Tolerances& t) {
  SymbolOptions opts;
  opts.truncation_tol = t.truncation_tol;
  return opts;
}

StudyRecord evaluate_n(const StudyConfig& cfg, const PreparedSymbol& prep, Complex limit,
                       int n) {
  const auto size = static_cast<std::size_t>(n);
  const double sing_tol = cfg.tolerances.singularity_tol;

  StudyRecord rec;
  rec.n = n;
  const ComplexMatrix t = build_toeplitz(prep.series, size);
  rec.logdet_t = lu_logdet(t, sing_tol);
  if (rec.logdet_t.is_singular)
    throw Error(ErrorCode::kSingularSection, fmt::format("T_{} is singular", n));
  rec.logdet_m = lu_logdet(build_perturbed(prep.series, cfg.perturbation, size), sing_tol);
  rec.ratio = determinant_ratio(rec.logdet_m, rec.logdet_t);
  rec.abs_error = std::abs(rec.ratio - limit);

  if (cfg.checks.schur)
    rec.schur_residual = schur_check(build_blocks(prep.series, cfg.perturbation, size), sing_tol);
  if (cfg.checks.entry)
    rec.entry_residual =
        schur_entry_check(prep.series, prep.factorization, cfg.perturbation, size, sing_tol);
  if (cfg.checks.inverse_norm) {
    InverseNormOptions inv;
    inv.singularity_tol = sing_tol;
    rec.inverse_norm = inverse_norm_estimate(t, inv).value;
  }
  return rec;
}

StudyRecord evaluate_n_tagged(const StudyConfig& cfg, const PreparedSymbol& prep, Complex limit,
                              int n) {
  try {
    return evaluate_n(cfg, prep, limit, n);
  } catch (const Error& e) {
    throw e.with_n(n);
  }
}

}  // namespace

PreparedSymbol prepare_symbol(const SymbolSpec& symbol, int truncation,
                              const Tolerances& tolerances) {
  validate_symbol(symbol);
  const SymbolOptions opts = symbol_options(tolerances);
  PreparedSymbol prep{truncation, fourier_coefficients(symbol, truncation, opts),
                      log_coefficients(symbol, truncation, opts),
                      Factorization({Complex{1.0}}, {Complex{1.0}})};
  prep.factorization = factorize_log_split(prep.log_series, prep.series,
                                           FactorizationOptions{tolerances.residual_tol});
  return prep;
}

ConvergenceReport run_study(const StudyConfig& cfg, const RunOptions& opts) {
  validate_config(cfg);
  const int truncation = effective_truncation(cfg);

  ConvergenceReport report;
  report.truncation = truncation;
  report.warnings = validate_perturbation(cfg.perturbation, truncation).warnings;

  const PreparedSymbol prep = prepare_symbol(cfg.symbol, truncation, cfg.tolerances);
  report.factor_residual = prep.factorization.reconstruction_residual();
  report.limit_value = limit_determinant(prep.factorization, cfg.perturbation);
  if (cfg.checks.szego)
    report.szego = szego_constants(prep.log_series, cfg.tolerances.truncation_tol);

  if (opts.parallel && cfg.n_schedule.size() > 1) {
    std::vector<std::future<StudyRecord>> pending;
    pending.reserve(cfg.n_schedule.size());
    for (int n : cfg.n_schedule)
      pending.push_back(std::async(std::launch::async, evaluate_n_tagged, std::cref(cfg),
                                   std::cref(prep), report.limit_value, n));
    // Drain every future before rethrowing so no task outlives `prep`.
    std::optional<Error> first_error;
    for (auto& f : pending) {
      try {
        report.records.push_back(f.get());
      } catch (const Error& e) {
        if (!first_error) first_error = e;
      }
    }
    if (first_error) throw *first_error;
  } else {
    for (int n : cfg.n_schedule)
      report.records.push_back(evaluate_n_tagged(cfg, prep, report.limit_value, n));
  }

  for (const auto& rec : report.records) report.error_trajectory.push_back(rec.abs_error);
  return report;
}

}  // namespace tlim
