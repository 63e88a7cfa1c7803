#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace tlim {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. Zero-sized dimensions are allowed so that
// empty blocks (m = 0) need no special casing.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }
  std::span<const Complex> row(std::size_t i) const noexcept {
    return std::span<const Complex>(entries_).subspan(i * cols_, cols_);
  }

  double max_abs() const noexcept;

  ComplexMatrix adjoint() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
std::vector<Complex> operator*(const ComplexMatrix& lhs, std::span<const Complex> rhs);

}  // namespace tlim
