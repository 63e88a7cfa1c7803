#include "tlim/symbol.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>

#include "fft.hpp"
#include "tlim/errors.hpp"

namespace tlim {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Coefficients of prod_r (1 - r w) as a polynomial in w, lowest degree first.
std::vector<Complex> expand_linear_factors(std::span<const Complex> roots) {
  std::vector<Complex> poly{Complex{1.0}};
  for (const auto& r : roots) {
    std::vector<Complex> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] -= r * poly[i];
    }
    poly = std::move(next);
  }
  return poly;
}

Complex unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

std::size_t initial_grid(int truncation, int bandwidth) {
  const auto want = static_cast<std::size_t>(4 * std::max(truncation, bandwidth));
  return std::max<std::size_t>(8, detail::next_power_of_two(want));
}

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

// Extracts c_k, |k| <= N, from samples of a periodic function, doubling the
// grid until the extracted coefficients stop moving by more than the
// truncation tolerance. `sampler(L)` returns nullopt to request refinement.
using Sampler = std::function<std::optional<std::vector<Complex>>(std::size_t)>;

FourierSeries coefficients_by_fft(const Sampler& sampler, int truncation, std::size_t grid,
                                  const SymbolOptions& opts) {
  std::optional<std::vector<Complex>> previous;
  for (; grid <= opts.max_grid; grid *= 2) {
    auto samples = sampler(grid);
    if (!samples) {
      previous.reset();
      continue;
    }
    const auto spectrum = detail::forward_dft(*samples);
    const double inv = 1.0 / static_cast<double>(grid);
    std::vector<Complex> coeffs(static_cast<std::size_t>(2 * truncation + 1));
    for (int k = -truncation; k <= truncation; ++k) {
      const auto idx = static_cast<std::size_t>((k % static_cast<int>(grid) + static_cast<int>(grid)) %
                                                static_cast<int>(grid));
      coeffs[static_cast<std::size_t>(k + truncation)] = spectrum[idx] * inv;
    }
    if (previous && static_cast<std::size_t>(2 * truncation + 1) <= grid) {
      double change = 0.0;
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        change = std::max(change, std::abs(coeffs[i] - (*previous)[i]));
      if (change <= opts.truncation_tol * std::max(1.0, max_abs(coeffs)))
        return FourierSeries(truncation, std::move(coeffs));
    }
    previous = std::move(coeffs);
  }
  throw Error(ErrorCode::kNoConvergence,
              fmt::format("FFT coefficients did not settle below grid cap {}", opts.max_grid));
}

void check_tail(const FourierSeries& series, const SymbolOptions& opts, const char* what) {
  if (series.tail_bound() > opts.truncation_tol)
    throw Error(ErrorCode::kTailTooLarge,
                fmt::format("{} tail bound {:.3e} exceeds tolerance {:.3e} at N = {}", what,
                            series.tail_bound(), opts.truncation_tol, series.truncation()));
}

// Closed-form Laurent data with index range [offset, offset + size).
FourierSeries truncate_laurent(int offset, std::span<const Complex> coeffs, int truncation,
                               const SymbolOptions& opts, const char* what) {
  FourierSeries out(truncation);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int k = offset + static_cast<int>(i);
    if (std::abs(k) <= truncation) {
      out.set(k, coeffs[i]);
    } else if (std::abs(coeffs[i]) > opts.truncation_tol) {
      throw Error(ErrorCode::kTailTooLarge,
                  fmt::format("{} coefficient at k = {} lies outside truncation N = {}", what, k,
                              truncation));
    }
  }
  return out;
}

void require_truncation(int truncation) {
  if (truncation < 1)
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("truncation must be positive, got {}", truncation));
}

void require_grid(std::size_t grid_size) {
  if (!detail::is_power_of_two(grid_size))
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("grid size must be a power of two, got {}", grid_size));
}

}  // namespace

// ---------------------------------------------------------------------------
// SymbolSpec

SymbolSpec SymbolSpec::laurent(int offset, std::vector<Complex> coefficients) {
  SymbolSpec s;
  s.kind_ = SymbolKind::kLaurent;
  s.offset_ = offset;
  s.coefficients_ = std::move(coefficients);
  validate_symbol(s);
  return s;
}

SymbolSpec SymbolSpec::linear_factors(std::vector<Complex> plus_roots,
                                      std::vector<Complex> minus_roots) {
  SymbolSpec s;
  s.kind_ = SymbolKind::kProductOfLinearFactors;
  s.plus_roots_ = std::move(plus_roots);
  s.minus_roots_ = std::move(minus_roots);
  validate_symbol(s);
  return s;
}

SymbolSpec SymbolSpec::exp_laurent(int offset, std::vector<Complex> log_coefficients) {
  SymbolSpec s;
  s.kind_ = SymbolKind::kExpLaurent;
  s.offset_ = offset;
  s.coefficients_ = std::move(log_coefficients);
  validate_symbol(s);
  return s;
}

int SymbolSpec::bandwidth() const noexcept {
  switch (kind_) {
    case SymbolKind::kProductOfLinearFactors:
      return static_cast<int>(std::max(plus_roots_.size(), minus_roots_.size()));
    case SymbolKind::kLaurent:
    case SymbolKind::kExpLaurent: {
      int bw = 0;
      for (std::size_t i = 0; i < coefficients_.size(); ++i)
        if (coefficients_[i] != Complex{}) bw = std::max(bw, std::abs(offset_ + static_cast<int>(i)));
      return bw;
    }
  }
  return 0;
}

bool SymbolSpec::has_real_parameters() const noexcept {
  auto real = [](const std::vector<Complex>& v) {
    return std::all_of(v.begin(), v.end(), [](const Complex& c) { return c.imag() == 0.0; });
  };
  return real(coefficients_) && real(plus_roots_) && real(minus_roots_);
}

void validate_symbol(const SymbolSpec& spec) {
  switch (spec.kind()) {
    case SymbolKind::kLaurent:
    case SymbolKind::kExpLaurent:
      if (spec.coefficients().empty())
        throw Error(ErrorCode::kInvalidArgument, "Laurent coefficient list must be nonempty");
      break;
    case SymbolKind::kProductOfLinearFactors:
      for (const auto& r : spec.plus_roots())
        if (!(std::abs(r) < 1.0))
          throw Error(ErrorCode::kInvalidArgument,
                      fmt::format("root a = ({}, {}) is not inside the unit disk", r.real(), r.imag()));
      for (const auto& r : spec.minus_roots())
        if (!(std::abs(r) < 1.0))
          throw Error(ErrorCode::kInvalidArgument,
                      fmt::format("root b = ({}, {}) is not inside the unit disk", r.real(), r.imag()));
      break;
  }
}

// ---------------------------------------------------------------------------
// FourierSeries

FourierSeries::FourierSeries(int truncation)
    : truncation_(truncation),
      coefficients_(static_cast<std::size_t>(2 * std::max(truncation, 0) + 1)) {
  if (truncation < 0)
    throw Error(ErrorCode::kInvalidArgument, "truncation must be nonnegative");
}

FourierSeries::FourierSeries(int truncation, std::vector<Complex> coefficients)
    : truncation_(truncation), coefficients_(std::move(coefficients)) {
  if (truncation < 0 || coefficients_.size() != static_cast<std::size_t>(2 * truncation + 1))
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("expected {} coefficients for truncation {}, got {}",
                            2 * truncation + 1, truncation, coefficients_.size()));
  update_tail_bound();
}

void FourierSeries::set(int k, Complex value) {
  if (k < -truncation_ || k > truncation_)
    throw Error(ErrorCode::kTruncationExceeded,
                fmt::format("index {} outside truncation {}", k, truncation_));
  coefficients_[static_cast<std::size_t>(k + truncation_)] = value;
  update_tail_bound();
}

void FourierSeries::update_tail_bound() noexcept {
  const int width = std::max(1, (truncation_ + 9) / 10);
  const int inner = std::max(0, truncation_ - width + 1);
  double bound = 0.0;
  for (int k = inner; k <= truncation_; ++k)
    bound = std::max({bound, std::abs((*this)[k]), std::abs((*this)[-k])});
  tail_bound_ = bound;
}

// ---------------------------------------------------------------------------
// Operations

Complex evaluate(const SymbolSpec& spec, double theta, const SymbolOptions& opts) {
  switch (spec.kind()) {
    case SymbolKind::kLaurent: {
      Complex sum{};
      const auto c = spec.coefficients();
      for (std::size_t i = 0; i < c.size(); ++i)
        sum += c[i] * unit(static_cast<double>(spec.offset() + static_cast<int>(i)) * theta);
      return sum;
    }
    case SymbolKind::kProductOfLinearFactors: {
      Complex prod{1.0};
      const Complex z = unit(theta);
      const Complex zinv = std::conj(z);
      for (const auto& a : spec.plus_roots()) prod *= 1.0 - a * z;
      for (const auto& b : spec.minus_roots()) prod *= 1.0 - b * zinv;
      return prod;
    }
    case SymbolKind::kExpLaurent: {
      Complex g{};
      const auto l = spec.coefficients();
      for (std::size_t i = 0; i < l.size(); ++i)
        g += l[i] * unit(static_cast<double>(spec.offset() + static_cast<int>(i)) * theta);
      if (std::abs(g) > opts.log_magnitude_cap)
        throw Error(ErrorCode::kExpOverflow,
                    fmt::format("|log phi| = {:.3e} at theta = {} exceeds cap {}", std::abs(g),
                                theta, opts.log_magnitude_cap));
      return std::exp(g);
    }
  }
  return {};
}

std::vector<Complex> eval_symbol(const SymbolSpec& spec, std::size_t grid_size,
                                 const SymbolOptions& opts) {
  require_grid(grid_size);
  std::vector<Complex> samples(grid_size);
  const double step = kTwoPi / static_cast<double>(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j)
    samples[j] = evaluate(spec, step * static_cast<double>(j), opts);
  return samples;
}

FourierSeries fourier_coefficients(const SymbolSpec& spec, int truncation,
                                   const SymbolOptions& opts) {
  require_truncation(truncation);
  switch (spec.kind()) {
    case SymbolKind::kLaurent:
      return truncate_laurent(spec.offset(), spec.coefficients(), truncation, opts, "symbol");

    case SymbolKind::kProductOfLinearFactors: {
      // c_k = sum_j P_{k+j} Q_j with P(z) = prod(1 - a z), Q(w) = prod(1 - b w), w = 1/z.
      const auto plus = expand_linear_factors(spec.plus_roots());
      const auto minus = expand_linear_factors(spec.minus_roots());
      const int deg_minus = static_cast<int>(minus.size()) - 1;
      std::vector<Complex> full(plus.size() + minus.size() - 1);
      for (std::size_t i = 0; i < plus.size(); ++i)
        for (std::size_t j = 0; j < minus.size(); ++j)
          full[i - j + static_cast<std::size_t>(deg_minus)] += plus[i] * minus[j];
      return truncate_laurent(-deg_minus, full, truncation, opts, "symbol");
    }

    case SymbolKind::kExpLaurent: {
      const Sampler sampler = [&](std::size_t grid) -> std::optional<std::vector<Complex>> {
        return eval_symbol(spec, grid, opts);
      };
      auto series = coefficients_by_fft(sampler, truncation,
                                        initial_grid(truncation, spec.bandwidth()), opts);
      check_tail(series, opts, "symbol");
      return series;
    }
  }
  return FourierSeries(truncation);
}

int winding_number(const SymbolSpec& spec, std::size_t grid_size, const SymbolOptions& opts) {
  require_grid(grid_size);
  // A coarser grid than the bandwidth can alias the argument into a smooth curve.
  const std::size_t start =
      std::max(grid_size, detail::next_power_of_two(4 * static_cast<std::size_t>(spec.bandwidth())));
  for (std::size_t grid = start; grid <= opts.max_grid; grid *= 2) {
    const auto samples = eval_symbol(spec, grid, opts);
    for (std::size_t j = 0; j < grid; ++j)
      if (std::abs(samples[j]) < opts.zero_tol)
        throw Error(ErrorCode::kSymbolVanishes,
                    fmt::format("|phi| = {:.3e} below zero tolerance at theta_{} of {}",
                                std::abs(samples[j]), j, grid));
    double total = 0.0;
    bool resolved = true;
    for (std::size_t j = 0; j < grid; ++j) {
      const double step = std::arg(samples[(j + 1) % grid] / samples[j]);
      if (std::abs(step) >= std::numbers::pi / 2) {
        resolved = false;
        break;
      }
      total += step;
    }
    if (resolved) return static_cast<int>(std::lround(total / kTwoPi));
  }
  throw Error(ErrorCode::kNoConvergence,
              fmt::format("argument increments not resolved below grid cap {}", opts.max_grid));
}

FourierSeries log_coefficients(const SymbolSpec& spec, int truncation,
                               const SymbolOptions& opts) {
  require_truncation(truncation);
  if (spec.kind() == SymbolKind::kExpLaurent)
    return truncate_laurent(spec.offset(), spec.coefficients(), truncation, opts, "log symbol");

  const std::size_t grid0 = initial_grid(truncation, spec.bandwidth());
  const int winding = winding_number(spec, grid0, opts);
  if (winding != 0)
    throw Error(ErrorCode::kNonzeroWinding,
                fmt::format("symbol has winding number {}; no continuous logarithm", winding));

  const Sampler sampler = [&](std::size_t grid) -> std::optional<std::vector<Complex>> {
    const auto phi = eval_symbol(spec, grid, opts);
    std::vector<Complex> logs(grid);
    double angle = std::arg(phi[0]);
    for (std::size_t j = 0; j < grid; ++j) {
      const double mag = std::abs(phi[j]);
      if (mag < opts.zero_tol)
        throw Error(ErrorCode::kSymbolVanishes,
                    fmt::format("|phi| = {:.3e} below zero tolerance", mag));
      if (j > 0) {
        const double step = std::arg(phi[j] / phi[j - 1]);
        if (std::abs(step) >= std::numbers::pi / 2) return std::nullopt;
        angle += step;
      }
      logs[j] = {std::log(mag), angle};
    }
    return logs;
  };
  auto series = coefficients_by_fft(sampler, truncation, grid0, opts);

  // Fix the 2 pi i ambiguity of the constant term: Im (log phi)_0 in (-pi, pi].
  Complex c0 = series[0];
  double im = c0.imag() - kTwoPi * std::round(c0.imag() / kTwoPi);
  if (im <= -std::numbers::pi) im += kTwoPi;
  series.set(0, {c0.real(), im});

  check_tail(series, opts, "log symbol");
  return series;
}

}  // namespace tlim
