#pragma once

// Wiener-Hopf factorization phi = phi_minus * phi_plus for symbols with a
// continuous logarithm. phi_plus carries coefficients k = 0..N, phi_minus
// carries k = -N..0 and is normalized so that (phi_minus)_0 = 1.

#include <span>
#include <vector>

#include "tlim/symbol.hpp"

namespace tlim {

class Factorization {
 public:
  // plus[k] = (phi+)_k and minus[k] = (phi-)_{-k} for k = 0..N.
  Factorization(std::vector<Complex> plus, std::vector<Complex> minus,
                double reconstruction_residual = 0.0);

  int truncation() const noexcept { return static_cast<int>(plus_.size()) - 1; }

  // Zero outside the one-sided support and outside the truncation.
  Complex plus(int k) const noexcept {
    if (k < 0 || k > truncation()) return Complex{};
    return plus_[static_cast<std::size_t>(k)];
  }
  Complex minus(int k) const noexcept {
    if (k > 0 || -k > truncation()) return Complex{};
    return minus_[static_cast<std::size_t>(-k)];
  }

  std::span<const Complex> plus_coefficients() const noexcept { return plus_; }
  // Entry j holds (phi-)_{-j}.
  std::span<const Complex> minus_coefficients() const noexcept { return minus_; }

  double reconstruction_residual() const noexcept { return residual_; }

  // (c phi+, phi- / c): the same factorization in a different gauge.
  Factorization rescaled(Complex c) const;

 private:
  std::vector<Complex> plus_;
  std::vector<Complex> minus_;
  double residual_;
};

struct FactorizationOptions {
  double residual_tol = 1e-10;
};

// h = exp(g) for a one-sided power series g, via k h_k = sum_{j=1..k} j g_j h_{k-j}.
std::vector<Complex> exp_series(std::span<const Complex> g);

// 1 / f for a power series with f_0 != 0.
std::vector<Complex> reciprocal_series(std::span<const Complex> f);

// phi+ = exp((log phi)_0 + sum_{k>=1} (log phi)_k z^k), phi- = exp(sum_{k<=-1} ...).
// `series` holds the coefficients of phi itself and is used only for the
// reconstruction residual.
Factorization factorize_log_split(const FourierSeries& log_series, const FourierSeries& series,
                                  const FactorizationOptions& opts = {});

// T_n(phi)^{-1} delta scaled to unit leading entry; proportional to the first
// n coefficients of 1 / phi+.
std::vector<Complex> factorize_via_inverse(const FourierSeries& series, std::size_t n);

// Two-sided convolution of phi- and phi+, truncated at N.
FourierSeries reconstruct(const Factorization& f);

// Diagnostic: min |phi+(e^{i theta})| over a uniform grid.
double plus_min_modulus(const Factorization& f, std::size_t grid_size = 1024);

}  // namespace tlim
