#pragma once

// Right-hand side of the perturbed determinant limit
//
//   lim det M_{m+n} / det T_n = det( sum_{k>=1} (phi-)_{p_i+k-m} (phi+)_{-q_j-k+m} )_{i,j<m}
//
// together with the Szego constants and the two block-identity checks used to
// validate a run.

#include "tlim/linalg.hpp"
#include "tlim/toeplitz.hpp"
#include "tlim/wiener_hopf.hpp"

namespace tlim {

struct SzegoConstants {
  Complex g;  // exp((log phi)_0)
  Complex e;  // exp(sum_{k>=1} k (log phi)_k (log phi)_{-k})
  double series_tail = 0.0;  // |N (log phi)_N (log phi)_{-N}|
};

// The m x m matrix whose determinant is the limit. The k-sum is exact: it
// stops at K = m - min_i p_i because (phi-)_k = 0 for k > 0.
ComplexMatrix limit_matrix(const Factorization& f, const Perturbation& pert);

// det of limit_matrix; 1 for m = 0 and exactly 0 when the matrix is singular.
Complex limit_determinant(const Factorization& f, const Perturbation& pert);

SzegoConstants szego_constants(const FourierSeries& log_series, double tail_tol = 1e-12);

// |det M - det D det(A - B D^{-1} C)| / |det M|; absolute when M is singular.
double schur_check(const Blocks& blocks, double singularity_tol = kDefaultSingularityTol);

// max_{i,j} |(B T_n^{-1} C)_{ij} - sum_{k>=0} (phi-)_{p_i-m-k} (phi+)_{m+k-q_j}|.
double schur_entry_check(const FourierSeries& series, const Factorization& f,
                         const Perturbation& pert, std::size_t n,
                         double singularity_tol = kDefaultSingularityTol);

}  // namespace tlim
