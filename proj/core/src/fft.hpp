#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tlim::detail {

// Unnormalized forward DFT, X_k = sum_j x_j exp(-2 pi i j k / L), backed by FFTW.
std::vector<std::complex<double>> forward_dft(std::span<const std::complex<double>> samples);

constexpr bool is_power_of_two(std::size_t v) noexcept { return v != 0 && (v & (v - 1)) == 0; }

constexpr std::size_t next_power_of_two(std::size_t v) noexcept {
  std::size_t p = 1;
  while (p < v) p <<= 1;
  return p;
}

}  // namespace tlim::detail
