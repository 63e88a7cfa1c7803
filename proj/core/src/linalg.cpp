#include "tlim/linalg.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "tlim/errors.hpp"

namespace tlim {
namespace {

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

void require_square(const ComplexMatrix& mat) {
  if (!mat.is_square())
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("expected a square matrix, got {}x{}", mat.rows(), mat.cols()));
}

}  // namespace

double wrap_phase(double angle) noexcept {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double a = std::remainder(angle, kTwoPi);
  if (a <= -std::numbers::pi) a += kTwoPi;
  return a;
}

Complex LogDet::value() const noexcept {
  if (is_singular) return Complex{};
  return std::polar(std::exp(log_magnitude), phase);
}

Complex determinant_ratio(const LogDet& num, const LogDet& den) {
  if (den.is_singular)
    throw Error(ErrorCode::kSingularSection, "denominator determinant is singular");
  if (num.is_singular) return Complex{};
  return std::polar(std::exp(num.log_magnitude - den.log_magnitude),
                    wrap_phase(num.phase - den.phase));
}

LuDecomposition::LuDecomposition(const ComplexMatrix& mat, double singularity_tol)
    : lu_(mat), perm_(mat.rows()) {
  require_square(mat);
  const std::size_t n = lu_.rows();
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  const double threshold = singularity_tol * mat.max_abs();
  if (n > 0 && mat.max_abs() == 0.0) singular_ = true;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best <= threshold) {
      singular_ = true;
      continue;
    }
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(pivot, j));
      std::swap(perm_[k], perm_[pivot]);
      ++swaps_;
    }
    // Repeated rows or columns must cancel to exact zeros; rounding residue
    // would otherwise be amplified by the later small pivots.
    const Complex pivot_value = lu_(k, k);
    const Complex inv_pivot = 1.0 / pivot_value;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex lead = lu_(i, k);
      const Complex factor = lead == pivot_value ? Complex{1.0} : lead * inv_pivot;
      lu_(i, k) = factor;
      if (factor == Complex{}) continue;
      for (std::size_t j = k + 1; j < n; ++j)
        lu_(i, j) -= lu_(k, j) == pivot_value ? lead : factor * lu_(k, j);
    }
  }
}

LogDet LuDecomposition::logdet() const noexcept {
  if (singular_) return LogDet::singular();
  double log_mag = 0.0;
  Complex rotation{swaps_ % 2 == 0 ? 1.0 : -1.0};
  for (std::size_t i = 0; i < lu_.rows(); ++i) {
    const Complex u = lu_(i, i);
    const double mag = std::abs(u);
    log_mag += std::log(mag);
    rotation *= u / mag;
    rotation /= std::abs(rotation);
  }
  return {log_mag, wrap_phase(std::arg(rotation)), false};
}

void LuDecomposition::require_nonsingular() const {
  if (singular_)
    throw Error(ErrorCode::kSingularSection,
                fmt::format("{}x{} matrix is singular to working tolerance", size(), size()));
}

std::vector<Complex> LuDecomposition::solve(std::span<const Complex> rhs) const {
  require_nonsingular();
  const std::size_t n = size();
  if (rhs.size() != n)
    throw Error(ErrorCode::kInvalidArgument, "right-hand side length does not match matrix");
  std::vector<Complex> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = rhs[perm_[i]];
    for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    Complex s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
    x[i] = s / lu_(i, i);
  }
  return x;
}

std::vector<Complex> LuDecomposition::solve_adjoint(std::span<const Complex> rhs) const {
  require_nonsingular();
  const std::size_t n = size();
  if (rhs.size() != n)
    throw Error(ErrorCode::kInvalidArgument, "right-hand side length does not match matrix");
  // mat^* = U^* L^* P, so solve U^* y = rhs, then L^* w = y, then x = P^T w.
  std::vector<Complex> w(rhs.begin(), rhs.end());
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = w[i];
    for (std::size_t j = 0; j < i; ++j) s -= std::conj(lu_(j, i)) * w[j];
    w[i] = s / std::conj(lu_(i, i));
  }
  for (std::size_t i = n; i-- > 0;) {
    Complex s = w[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= std::conj(lu_(j, i)) * w[j];
    w[i] = s;
  }
  std::vector<Complex> x(n);
  for (std::size_t i = 0; i < n; ++i) x[perm_[i]] = w[i];
  return x;
}

LogDet lu_logdet(const ComplexMatrix& mat, double singularity_tol) {
  return LuDecomposition(mat, singularity_tol).logdet();
}

SolveResult solve(const ComplexMatrix& mat, std::span<const Complex> rhs, double singularity_tol) {
  const LuDecomposition lu(mat, singularity_tol);
  SolveResult out{lu.solve(rhs), 0.0};
  const auto back = mat * std::span<const Complex>(out.x);
  for (std::size_t i = 0; i < back.size(); ++i)
    out.residual = std::max(out.residual, std::abs(back[i] - rhs[i]));
  return out;
}

InverseNormEstimate inverse_norm_estimate(const ComplexMatrix& mat,
                                          const InverseNormOptions& opts) {
  const LuDecomposition lu(mat, opts.singularity_tol);
  if (lu.is_singular())
    throw Error(ErrorCode::kSingularSection, "cannot estimate inverse norm of a singular matrix");
  const std::size_t n = lu.size();
  if (n == 0) return {0.0, 0, true};

  // Fixed seed: the estimate must be reproducible run to run.
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> x(n);
  for (auto& v : x) v = {1.0 + 0.5 * dist(rng), 0.5 * dist(rng)};

  InverseNormEstimate est;
  double previous = 0.0;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    const double nx = norm2(x);
    for (auto& v : x) v /= nx;
    // ||mat^{-*} x||^2 is the Rayleigh quotient of (mat^* mat)^{-1} at x.
    const auto y = lu.solve_adjoint(x);
    const double value = norm2(y);
    x = lu.solve(y);
    est.value = value;
    est.iterations = it;
    if (it >= opts.min_iterations && std::abs(value - previous) <= opts.relative_tol * value) {
      est.converged = true;
      break;
    }
    previous = value;
  }
  return est;
}

}  // namespace tlim
