#include "tlim/limit.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>

#include "tlim/errors.hpp"

namespace tlim {
namespace {

// D^{-1} C, one column at a time.
ComplexMatrix solve_columns(const LuDecomposition& lu, const ComplexMatrix& rhs) {
  ComplexMatrix out(rhs.rows(), rhs.cols());
  std::vector<Complex> col(rhs.rows());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    for (std::size_t i = 0; i < rhs.rows(); ++i) col[i] = rhs(i, j);
    const auto x = lu.solve(col);
    for (std::size_t i = 0; i < rhs.rows(); ++i) out(i, j) = x[i];
  }
  return out;
}

LuDecomposition factor_d(const Blocks& blocks, double singularity_tol) {
  LuDecomposition lu(blocks.d, singularity_tol);
  if (lu.is_singular())
    throw Error(ErrorCode::kSingularSection,
                fmt::format("T_{} is singular; Schur complement undefined", blocks.n()));
  return lu;
}

}  // namespace

ComplexMatrix limit_matrix(const Factorization& f, const Perturbation& pert) {
  const std::size_t m = pert.m();
  const int mi = static_cast<int>(m);
  const int n = f.truncation();
  ComplexMatrix out(m, m);
  if (m == 0) return out;

  const auto stored = pert.stored_p();
  const int k_max = mi - *std::min_element(stored.begin(), stored.end());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Complex sum{};
      for (int k = 1; k <= k_max; ++k) {
        const int minus_index = pert.p(i) + k - mi;
        const int plus_index = -pert.q(j) - k + mi;
        if (minus_index > 0 || plus_index < 0) continue;
        if (-minus_index > n || plus_index > n)
          throw Error(ErrorCode::kInfeasible,
                      fmt::format("limit entry ({}, {}) needs (phi-)_{} and (phi+)_{}, "
                                  "factor truncation is {}",
                                  i, j, minus_index, plus_index, n));
        sum += f.minus(minus_index) * f.plus(plus_index);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

Complex limit_determinant(const Factorization& f, const Perturbation& pert) {
  if (pert.m() == 0) return Complex{1.0};
  return lu_logdet(limit_matrix(f, pert)).value();
}

SzegoConstants szego_constants(const FourierSeries& log_series, double tail_tol) {
  const int n = log_series.truncation();
  Complex sum{};
  for (int k = 1; k <= n; ++k)
    sum += static_cast<double>(k) * log_series[k] * log_series[-k];
  SzegoConstants out{std::exp(log_series[0]), std::exp(sum),
                     std::abs(static_cast<double>(n) * log_series[n] * log_series[-n])};
  if (out.series_tail > tail_tol)
    throw Error(ErrorCode::kTailTooLarge,
                fmt::format("E-sum tail term {:.3e} exceeds {:.3e} at N = {}", out.series_tail,
                            tail_tol, n));
  return out;
}

double schur_check(const Blocks& blocks, double singularity_tol) {
  if (blocks.m() == 0) return 0.0;
  const LuDecomposition lu_d = factor_d(blocks, singularity_tol);
  const ComplexMatrix schur = blocks.a - blocks.b * solve_columns(lu_d, blocks.c);

  const LogDet det_m = lu_logdet(blocks.assemble(), singularity_tol);
  const LogDet det_d = lu_d.logdet();
  const LogDet det_s = lu_logdet(schur, singularity_tol);

  if (det_m.is_singular) {
    if (det_s.is_singular) return 0.0;
    return std::exp(det_d.log_magnitude + det_s.log_magnitude);
  }
  if (det_s.is_singular) return 1.0;
  const LogDet product{det_d.log_magnitude + det_s.log_magnitude,
                       wrap_phase(det_d.phase + det_s.phase), false};
  return std::abs(determinant_ratio(product, det_m) - 1.0);
}

double schur_entry_check(const FourierSeries& series, const Factorization& f,
                         const Perturbation& pert, std::size_t n, double singularity_tol) {
  if (pert.m() == 0) return 0.0;
  const Blocks blocks = build_blocks(series, pert, n);
  const LuDecomposition lu_d = factor_d(blocks, singularity_tol);
  const ComplexMatrix bdc = blocks.b * solve_columns(lu_d, blocks.c);

  const int mi = static_cast<int>(pert.m());
  const int trunc = f.truncation();
  double worst = 0.0;
  for (std::size_t i = 0; i < pert.m(); ++i) {
    for (std::size_t j = 0; j < pert.m(); ++j) {
      // (phi-)_{p_i-m-k} needs p_i-m-k <= 0; (phi+)_{m+k-q_j} needs m+k-q_j >= 0.
      const int k_lo = std::max({0, pert.p(i) - mi, pert.q(j) - mi});
      const int k_hi = std::min(pert.p(i) - mi + trunc, trunc + pert.q(j) - mi);
      Complex sum{};
      for (int k = k_lo; k <= k_hi; ++k)
        sum += f.minus(pert.p(i) - mi - k) * f.plus(mi + k - pert.q(j));
      worst = std::max(worst, std::abs(bdc(i, j) - sum));
    }
  }
  return worst;
}

}  // namespace tlim
