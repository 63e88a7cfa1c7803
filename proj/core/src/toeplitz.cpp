#include "tlim/toeplitz.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <map>

#include "tlim/errors.hpp"

namespace tlim {
namespace {

struct Range {
  int lo;
  int hi;
};

// Range of the extended sequence over indices 0..size-1.
Range extended_range(std::span<const int> stored, std::size_t size) {
  Range r{0, 0};
  bool any = false;
  const std::size_t m = stored.size();
  for (std::size_t i = 0; i < std::min(m, size); ++i) {
    r.lo = any ? std::min(r.lo, stored[i]) : stored[i];
    r.hi = any ? std::max(r.hi, stored[i]) : stored[i];
    any = true;
  }
  if (size > m) {
    const int first = static_cast<int>(m);
    const int last = static_cast<int>(size) - 1;
    r.lo = any ? std::min(r.lo, first) : first;
    r.hi = any ? std::max(r.hi, last) : last;
  }
  return r;
}

void require_feasible(const FourierSeries& series, const Perturbation& pert, std::size_t n) {
  const int needed = required_truncation(pert, n);
  if (needed > series.truncation())
    throw Error(ErrorCode::kTruncationExceeded,
                fmt::format("M_{{m+n}} with m = {}, n = {} needs |p_i - q_j| up to {}, "
                            "coefficients stop at N = {}",
                            pert.m(), n, needed, series.truncation()));
}

void collect_duplicates(std::span<const int> stored, const char* name,
                        std::vector<std::string>& warnings) {
  const int m = static_cast<int>(stored.size());
  std::map<int, std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < stored.size(); ++i) seen[stored[i]].push_back(i);
  for (const auto& [value, where] : seen) {
    if (where.size() > 1)
      warnings.push_back(fmt::format("{} value {} repeats at {} stored positions", name, value,
                                     where.size()));
    if (value >= m)
      warnings.push_back(fmt::format("{}_{} = {} coincides with the identity tail {}_{}", name,
                                     where.front(), value, name, value));
  }
}

}  // namespace

Perturbation::Perturbation(std::vector<int> p, std::vector<int> q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (p_.size() != q_.size())
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("p has {} entries but q has {}", p_.size(), q_.size()));
}

int required_truncation(const Perturbation& pert, std::size_t n) {
  const std::size_t size = pert.m() + n;
  if (size == 0) return 0;
  const Range p = extended_range(pert.stored_p(), size);
  const Range q = extended_range(pert.stored_q(), size);
  return std::max({p.hi - q.lo, q.hi - p.lo, 0});
}

ComplexMatrix build_toeplitz(const FourierSeries& series, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "section size must be positive");
  if (static_cast<int>(n) - 1 > series.truncation())
    throw Error(ErrorCode::kTruncationExceeded,
                fmt::format("T_{} needs coefficients up to |k| = {}, truncation is {}", n, n - 1,
                            series.truncation()));
  ComplexMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t(i, j) = series[static_cast<int>(i) - static_cast<int>(j)];
  return t;
}

ComplexMatrix build_perturbed(const FourierSeries& series, const Perturbation& pert,
                              std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "section size must be positive");
  require_feasible(series, pert, n);
  const std::size_t size = pert.m() + n;
  ComplexMatrix mat(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) mat(i, j) = series[pert.p(i) - pert.q(j)];
  return mat;
}

Blocks build_blocks(const FourierSeries& series, const Perturbation& pert, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "section size must be positive");
  require_feasible(series, pert, n);
  const std::size_t m = pert.m();
  const int mi = static_cast<int>(m);
  Blocks blocks{ComplexMatrix(m, m), ComplexMatrix(m, n), ComplexMatrix(n, m),
                build_toeplitz(series, n)};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) blocks.a(i, j) = series[pert.p(i) - pert.q(j)];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k)
      blocks.b(i, k) = series[pert.p(i) - mi - static_cast<int>(k)];
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < m; ++j)
      blocks.c(k, j) = series[mi + static_cast<int>(k) - pert.q(j)];
  return blocks;
}

ComplexMatrix Blocks::assemble() const {
  const std::size_t mm = m();
  const std::size_t nn = n();
  ComplexMatrix out(mm + nn, mm + nn);
  for (std::size_t i = 0; i < mm; ++i) {
    for (std::size_t j = 0; j < mm; ++j) out(i, j) = a(i, j);
    for (std::size_t k = 0; k < nn; ++k) out(i, mm + k) = b(i, k);
  }
  for (std::size_t k = 0; k < nn; ++k) {
    for (std::size_t j = 0; j < mm; ++j) out(mm + k, j) = c(k, j);
    for (std::size_t l = 0; l < nn; ++l) out(mm + k, mm + l) = d(k, l);
  }
  return out;
}

PerturbationCheck validate_perturbation(const Perturbation& pert, int truncation) {
  const int m = static_cast<int>(pert.m());
  auto check_against = [&](int value, std::span<const int> others, const char* name) {
    if (value < -truncation)
      throw Error(ErrorCode::kTruncationExceeded,
                  fmt::format("{} entry {} is below -N = {}", name, value, -truncation));
    // The first identity-tail index m is always part of the opposite sequence.
    int worst = std::abs(value - m);
    for (int o : others) worst = std::max(worst, std::abs(value - o));
    if (worst > truncation)
      throw Error(ErrorCode::kTruncationExceeded,
                  fmt::format("{} entry {} needs coefficient |k| = {} beyond N = {}", name, value,
                              worst, truncation));
  };
  for (int v : pert.stored_p()) check_against(v, pert.stored_q(), "p");
  for (int v : pert.stored_q()) check_against(v, pert.stored_p(), "q");

  PerturbationCheck check;
  collect_duplicates(pert.stored_p(), "p", check.warnings);
  collect_duplicates(pert.stored_q(), "q", check.warnings);
  return check;
}

}  // namespace tlim
