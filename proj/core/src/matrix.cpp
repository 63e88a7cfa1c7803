#include "tlim/matrix.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>

#include "tlim/errors.hpp"

namespace tlim {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("{}x{} matrix needs {} entries, got {}", rows, cols, rows * cols,
                            entries_.size()));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double ComplexMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& x : entries_) m = std::max(m, std::abs(x));
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows())
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("cannot multiply {}x{} by {}x{}", lhs.rows(), lhs.cols(), rhs.rows(),
                            rhs.cols()));
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw Error(ErrorCode::kInvalidArgument, "matrix dimensions differ");
  ComplexMatrix out = lhs;
  auto dst = out.entries();
  auto src = rhs.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= src[i];
  return out;
}

std::vector<Complex> operator*(const ComplexMatrix& lhs, std::span<const Complex> rhs) {
  if (lhs.cols() != rhs.size())
    throw Error(ErrorCode::kInvalidArgument, "matrix-vector dimensions differ");
  std::vector<Complex> out(lhs.rows());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    Complex sum{};
    const auto r = lhs.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) sum += r[j] * rhs[j];
    out[i] = sum;
  }
  return out;
}

}  // namespace tlim
