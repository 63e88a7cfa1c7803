#pragma once

// Dense complex LU with partial pivoting. Determinants are carried as
// (log |det|, arg det) so that G^n growth never overflows a double.

#include <limits>
#include <span>
#include <vector>

#include "tlim/matrix.hpp"

namespace tlim {

constexpr double kDefaultSingularityTol = 1e-13;

struct LogDet {
  double log_magnitude = 0.0;
  double phase = 0.0;  // in (-pi, pi]
  bool is_singular = false;

  static LogDet singular() noexcept {
    return {-std::numeric_limits<double>::infinity(), 0.0, true};
  }

  // exp(log_magnitude) * exp(i phase); exactly zero when singular.
  Complex value() const noexcept;
};

// num / den evaluated as exp of the log-determinant difference. Zero when
// num is singular; den must be nonsingular.
Complex determinant_ratio(const LogDet& num, const LogDet& den);

// Wraps an angle into (-pi, pi].
double wrap_phase(double angle) noexcept;

class LuDecomposition {
 public:
  // Pivots with |u_ii| < singularity_tol * max|entry| mark the matrix singular.
  explicit LuDecomposition(const ComplexMatrix& mat,
                           double singularity_tol = kDefaultSingularityTol);

  std::size_t size() const noexcept { return lu_.rows(); }
  bool is_singular() const noexcept { return singular_; }
  LogDet logdet() const noexcept;

  // Solves mat x = rhs.
  std::vector<Complex> solve(std::span<const Complex> rhs) const;
  // Solves mat^* x = rhs.
  std::vector<Complex> solve_adjoint(std::span<const Complex> rhs) const;

 private:
  void require_nonsingular() const;

  ComplexMatrix lu_;
  std::vector<std::size_t> perm_;  // row i of P*mat is row perm_[i] of mat
  int swaps_ = 0;
  bool singular_ = false;
};

LogDet lu_logdet(const ComplexMatrix& mat, double singularity_tol = kDefaultSingularityTol);

struct SolveResult {
  std::vector<Complex> x;
  double residual = 0.0;  // |mat x - rhs|_inf
};

SolveResult solve(const ComplexMatrix& mat, std::span<const Complex> rhs,
                  double singularity_tol = kDefaultSingularityTol);

struct InverseNormOptions {
  int min_iterations = 20;
  int max_iterations = 5000;
  double relative_tol = 1e-6;
  double singularity_tol = kDefaultSingularityTol;
};

struct InverseNormEstimate {
  double value = 0.0;  // estimate of ||mat^{-1}||_2
  int iterations = 0;
  bool converged = false;
};

// Inverse power iteration on mat^* mat, reusing a single LU of mat.
InverseNormEstimate inverse_norm_estimate(const ComplexMatrix& mat,
                                          const InverseNormOptions& opts = {});

}  // namespace tlim
