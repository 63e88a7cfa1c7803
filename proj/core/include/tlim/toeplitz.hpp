#pragma once

// Finite Toeplitz sections T_n = (c_{i-j}) and the perturbed sections
// M_{m+n} = (c_{p_i - q_j}), where p_i = q_i = i for every i >= m.

#include <span>
#include <string>
#include <vector>

#include "tlim/matrix.hpp"
#include "tlim/symbol.hpp"

namespace tlim {

// Row and column index sequences p, q. Only the first m entries are stored;
// beyond them both sequences continue as the identity.
class Perturbation {
 public:
  Perturbation() = default;
  Perturbation(std::vector<int> p, std::vector<int> q);

  static Perturbation identity() { return {}; }

  std::size_t m() const noexcept { return p_.size(); }
  int p(std::size_t i) const noexcept { return i < p_.size() ? p_[i] : static_cast<int>(i); }
  int q(std::size_t i) const noexcept { return i < q_.size() ? q_[i] : static_cast<int>(i); }
  std::span<const int> stored_p() const noexcept { return p_; }
  std::span<const int> stored_q() const noexcept { return q_; }

 private:
  std::vector<int> p_;
  std::vector<int> q_;
};

// M = [[A, B], [C, D]] with A m x m and D = T_n.
struct Blocks {
  ComplexMatrix a;
  ComplexMatrix b;
  ComplexMatrix c;
  ComplexMatrix d;

  std::size_t m() const noexcept { return a.rows(); }
  std::size_t n() const noexcept { return d.rows(); }
  ComplexMatrix assemble() const;
};

struct PerturbationCheck {
  // Duplicate values in the extended p or q; each forces det M = 0.
  std::vector<std::string> warnings;
  bool has_duplicates() const noexcept { return !warnings.empty(); }
};

ComplexMatrix build_toeplitz(const FourierSeries& series, std::size_t n);
ComplexMatrix build_perturbed(const FourierSeries& series, const Perturbation& pert,
                              std::size_t n);
Blocks build_blocks(const FourierSeries& series, const Perturbation& pert, std::size_t n);

// Throws TruncationExceeded if the stored entries cannot be addressed within
// the coefficient truncation; duplicates come back as warnings.
PerturbationCheck validate_perturbation(const Perturbation& pert, int truncation);

// Smallest truncation N for which M_{m+n} can be built.
int required_truncation(const Perturbation& pert, std::size_t n);

}  // namespace tlim
