#include "tlim/wiener_hopf.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tlim/errors.hpp"
#include "tlim/linalg.hpp"
#include "tlim/toeplitz.hpp"

namespace tlim {

Factorization::Factorization(std::vector<Complex> plus, std::vector<Complex> minus,
                             double reconstruction_residual)
    : plus_(std::move(plus)), minus_(std::move(minus)), residual_(reconstruction_residual) {
  if (plus_.empty() || plus_.size() != minus_.size())
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("factor lengths must match and be nonempty ({} vs {})", plus_.size(),
                            minus_.size()));
}

Factorization Factorization::rescaled(Complex c) const {
  if (c == Complex{}) throw Error(ErrorCode::kInvalidArgument, "gauge factor must be nonzero");
  auto plus = plus_;
  auto minus = minus_;
  for (auto& v : plus) v *= c;
  for (auto& v : minus) v /= c;
  return Factorization(std::move(plus), std::move(minus), residual_);
}

std::vector<Complex> exp_series(std::span<const Complex> g) {
  std::vector<Complex> h(g.size());
  if (g.empty()) return h;
  h[0] = std::exp(g[0]);
  for (std::size_t k = 1; k < g.size(); ++k) {
    Complex sum{};
    for (std::size_t j = 1; j <= k; ++j) sum += static_cast<double>(j) * g[j] * h[k - j];
    h[k] = sum / static_cast<double>(k);
  }
  return h;
}

std::vector<Complex> reciprocal_series(std::span<const Complex> f) {
  std::vector<Complex> r(f.size());
  if (f.empty()) return r;
  if (f[0] == Complex{})
    throw Error(ErrorCode::kInvalidArgument, "power series with zero constant term has no inverse");
  r[0] = 1.0 / f[0];
  for (std::size_t k = 1; k < f.size(); ++k) {
    Complex sum{};
    for (std::size_t j = 1; j <= k; ++j) sum += f[j] * r[k - j];
    r[k] = -sum * r[0];
  }
  return r;
}

Factorization factorize_log_split(const FourierSeries& log_series, const FourierSeries& series,
                                  const FactorizationOptions& opts) {
  const int n = log_series.truncation();
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "log series truncation must be positive");
  const auto len = static_cast<std::size_t>(n + 1);

  std::vector<Complex> g_plus(len);
  std::vector<Complex> g_minus(len);
  for (int k = 0; k <= n; ++k) g_plus[static_cast<std::size_t>(k)] = log_series[k];
  for (int k = 1; k <= n; ++k) g_minus[static_cast<std::size_t>(k)] = log_series[-k];

  Factorization f(exp_series(g_plus), exp_series(g_minus));

  const FourierSeries rebuilt = reconstruct(f);
  double residual = 0.0;
  for (int k = -n; k <= n; ++k) residual = std::max(residual, std::abs(rebuilt[k] - series[k]));
  if (residual > opts.residual_tol)
    throw Error(ErrorCode::kResidualTooLarge,
                fmt::format("reconstruction residual {:.3e} exceeds {:.3e} at N = {}", residual,
                            opts.residual_tol, n));
  return Factorization(std::vector<Complex>(f.plus_coefficients().begin(),
                                            f.plus_coefficients().end()),
                       std::vector<Complex>(f.minus_coefficients().begin(),
                                            f.minus_coefficients().end()),
                       residual);
}

std::vector<Complex> factorize_via_inverse(const FourierSeries& series, std::size_t n) {
  const ComplexMatrix t = build_toeplitz(series, n);
  const LuDecomposition lu(t);
  if (lu.is_singular())
    throw Error(ErrorCode::kSingularSection, fmt::format("T_{} has a zero pivot", n));
  std::vector<Complex> delta(n);
  delta[0] = 1.0;
  auto x = lu.solve(delta);
  if (x[0] == Complex{})
    throw Error(ErrorCode::kSingularSection, "leading entry of T_n^{-1} delta vanishes");
  const Complex lead = x[0];
  for (auto& v : x) v /= lead;
  return x;
}

FourierSeries reconstruct(const Factorization& f) {
  const int n = f.truncation();
  std::vector<Complex> coeffs(static_cast<std::size_t>(2 * n + 1));
  for (int k = -n; k <= n; ++k) {
    Complex sum{};
    for (int j = std::max(0, k); j <= std::min(n, k + n); ++j) sum += f.minus(k - j) * f.plus(j);
    coeffs[static_cast<std::size_t>(k + n)] = sum;
  }
  return FourierSeries(n, std::move(coeffs));
}

double plus_min_modulus(const Factorization& f, std::size_t grid_size) {
  double best = std::numeric_limits<double>::infinity();
  const auto plus = f.plus_coefficients();
  for (std::size_t j = 0; j < grid_size; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(grid_size);
    // Horner in z = e^{i theta}.
    const Complex z = std::polar(1.0, theta);
    Complex v{};
    for (std::size_t k = plus.size(); k-- > 0;) v = v * z + plus[k];
    best = std::min(best, std::abs(v));
  }
  return best;
}

}  // namespace tlim
