#pragma once

// Symbols on the unit circle and their Fourier data.
//
// A symbol phi(z), |z| = 1, is described by one of three finite recipes:
//
//   laurent                    phi(z) = sum_k c_k z^k over a finite index range
//   product_of_linear_factors  phi(z) = prod_r (1 - a_r z) * prod_s (1 - b_s / z)
//   exp_laurent                phi(z) = exp( sum_k l_k z^k ),  l_k = (log phi)_k
//
// Fourier coefficients are produced in closed form where that is exact and by
// FFT on a power-of-two theta grid otherwise. The log branch used for
// log_coefficients is fixed by continuity along the grid, starting from the
// principal value at theta = 0.

#include <complex>
#include <span>
#include <vector>

namespace tlim {

using Complex = std::complex<double>;

enum class SymbolKind { kLaurent, kProductOfLinearFactors, kExpLaurent };

class SymbolSpec {
 public:
  // phi = 1.
  SymbolSpec() : coefficients_{Complex{1.0}} {}

  // phi(z) = sum_{i} coefficients[i] z^{offset + i}.
  static SymbolSpec laurent(int offset, std::vector<Complex> coefficients);
  // phi(z) = prod (1 - a z) * prod (1 - b / z); every root strictly inside the disk.
  static SymbolSpec linear_factors(std::vector<Complex> plus_roots,
                                   std::vector<Complex> minus_roots);
  // log phi(z) = sum_{i} log_coefficients[i] z^{offset + i}.
  static SymbolSpec exp_laurent(int offset, std::vector<Complex> log_coefficients);

  SymbolKind kind() const noexcept { return kind_; }
  int offset() const noexcept { return offset_; }
  // laurent: coefficients of phi; exp_laurent: coefficients of log phi.
  std::span<const Complex> coefficients() const noexcept { return coefficients_; }
  std::span<const Complex> plus_roots() const noexcept { return plus_roots_; }
  std::span<const Complex> minus_roots() const noexcept { return minus_roots_; }

  // Largest |k| for which the defining data (phi, or log phi for
  // exp_laurent) has a nonzero coefficient.
  int bandwidth() const noexcept;

  // True when every stored parameter has zero imaginary part.
  bool has_real_parameters() const noexcept;

 private:
  SymbolKind kind_ = SymbolKind::kLaurent;
  int offset_ = 0;
  std::vector<Complex> coefficients_;
  std::vector<Complex> plus_roots_;
  std::vector<Complex> minus_roots_;
};

// Two-sided truncated coefficient sequence c_k, k = -N..N. Lookups outside
// the truncation return exactly zero.
class FourierSeries {
 public:
  FourierSeries() : FourierSeries(0) {}
  explicit FourierSeries(int truncation);
  // coefficients[k + N] = c_k; size must be 2N + 1.
  FourierSeries(int truncation, std::vector<Complex> coefficients);

  int truncation() const noexcept { return truncation_; }
  // max |c_k| over the outermost 10% of stored indices (at least |k| = N).
  double tail_bound() const noexcept { return tail_bound_; }

  Complex operator[](int k) const noexcept {
    if (k < -truncation_ || k > truncation_) return Complex{};
    return coefficients_[static_cast<std::size_t>(k + truncation_)];
  }
  void set(int k, Complex value);

  std::span<const Complex> coefficients() const noexcept { return coefficients_; }

 private:
  void update_tail_bound() noexcept;

  int truncation_ = 0;
  std::vector<Complex> coefficients_;
  double tail_bound_ = 0.0;
};

struct SymbolOptions {
  double truncation_tol = 1e-12;
  double zero_tol = 1e-10;
  // |log phi| above this on any sample of an exp_laurent symbol is rejected.
  double log_magnitude_cap = 700.0;
  std::size_t max_grid = std::size_t{1} << 20;
};

void validate_symbol(const SymbolSpec& spec);

// phi(e^{i theta}) from the defining formula.
Complex evaluate(const SymbolSpec& spec, double theta, const SymbolOptions& opts = {});

// Samples phi at theta_j = 2 pi j / grid_size; grid_size must be a power of two.
std::vector<Complex> eval_symbol(const SymbolSpec& spec, std::size_t grid_size,
                                 const SymbolOptions& opts = {});

FourierSeries fourier_coefficients(const SymbolSpec& spec, int truncation,
                                   const SymbolOptions& opts = {});

// Starts at grid_size and doubles until every consecutive argument increment
// is below pi/2.
int winding_number(const SymbolSpec& spec, std::size_t grid_size,
                   const SymbolOptions& opts = {});

FourierSeries log_coefficients(const SymbolSpec& spec, int truncation,
                               const SymbolOptions& opts = {});

}  // namespace tlim
