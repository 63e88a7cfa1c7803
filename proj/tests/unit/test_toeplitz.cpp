#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tlim/catalog.hpp"
#include "tlim/errors.hpp"
#include "tlim/linalg.hpp"
#include "tlim/toeplitz.hpp"

using namespace tlim;

namespace {

const double c0 = 1.0 + 1.0 / 6.0;
const double c1 = -0.5;
const double cm1 = -1.0 / 3.0;

FourierSeries lf_series(int n = 64) { return fourier_coefficients(catalog::linear_factors(), n); }

bool close(Complex a, Complex b) { return std::abs(a - b) < 1e-15; }

}  // namespace

TEST_CASE("build_toeplitz") {
  const auto id = build_toeplitz(fourier_coefficients(catalog::constant_one(), 8), 3);
  CHECK(id == ComplexMatrix::identity(3));

  const auto t2 = build_toeplitz(lf_series(), 2);
  CHECK(close(t2(0, 0), c0));
  CHECK(close(t2(0, 1), cm1));
  CHECK(close(t2(1, 0), c1));
  CHECK(close(t2(1, 1), c0));

  const auto t1 = build_toeplitz(lf_series(), 1);
  CHECK(t1.rows() == 1);
  CHECK(close(t1(0, 0), c0));

  CHECK_THROWS_WITH_AS(build_toeplitz(lf_series(4), 6), doctest::Contains("TruncationExceeded"),
                       Error);
}

TEST_CASE("Toeplitz entries depend only on i - j") {
  const auto series = fourier_coefficients(catalog::exp_cosine(), 64);
  const auto t = build_toeplitz(series, 40);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> idx(0, 39);
  for (int trial = 0; trial < 200; ++trial) {
    const auto i = idx(rng), j = idx(rng);
    CHECK(t(i, j) == series[static_cast<int>(i) - static_cast<int>(j)]);
  }
}

TEST_CASE("build_perturbed") {
  const auto series = lf_series();
  CHECK(build_perturbed(series, Perturbation{}, 5) == build_toeplitz(series, 5));

  // Swapping p_0, p_1 swaps rows 0, 1 of T_3.
  const Perturbation swap({1, 0}, {0, 1});
  const auto m = build_perturbed(series, swap, 1);
  const auto t3 = build_toeplitz(series, 3);
  REQUIRE(m.rows() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(m(0, j) == t3(1, j));
    CHECK(m(1, j) == t3(0, j));
    CHECK(m(2, j) == t3(2, j));
  }
  CHECK(close(m(0, 0), c1));
  CHECK(close(m(0, 1), c0));
  CHECK(close(m(0, 2), cm1));
  CHECK(close(m(1, 2), 0.0));

  // p = (1), q = (0): rows 0 and 1 coincide.
  const auto dup = build_perturbed(series, Perturbation({1}, {0}), 2);
  for (std::size_t j = 0; j < 3; ++j) CHECK(dup(0, j) == dup(1, j));
  CHECK(lu_logdet(dup).is_singular);
}

TEST_CASE("build_perturbed needs every coefficient inside the truncation") {
  const auto series = lf_series(8);
  CHECK_THROWS_WITH_AS(build_perturbed(series, Perturbation({-5}, {0}), 5),
                       doctest::Contains("TruncationExceeded"), Error);
  CHECK(required_truncation(Perturbation({-5}, {0}), 4) == 9);
  CHECK(required_truncation(Perturbation{}, 6) == 5);
  CHECK_NOTHROW(build_perturbed(series, Perturbation({-3}, {0}), 5));
}

TEST_CASE("build_blocks") {
  const auto series = lf_series();
  const auto empty = build_blocks(series, Perturbation{}, 4);
  CHECK(empty.a.rows() == 0);
  CHECK(empty.b.rows() == 0);
  CHECK(empty.c.cols() == 0);
  CHECK(empty.d == build_toeplitz(series, 4));

  const Perturbation swap({1, 0}, {0, 1});
  const auto bl = build_blocks(series, swap, 2);
  CHECK(close(bl.a(0, 0), c1));
  CHECK(close(bl.a(0, 1), c0));
  CHECK(close(bl.a(1, 0), c0));
  CHECK(close(bl.a(1, 1), cm1));
  CHECK(close(bl.b(0, 0), cm1));
  CHECK(close(bl.b(0, 1), 0.0));
  CHECK(close(bl.b(1, 0), 0.0));
  CHECK(close(bl.b(1, 1), 0.0));
  CHECK(close(bl.c(0, 0), 0.0));
  CHECK(close(bl.c(1, 0), 0.0));
  CHECK(close(bl.c(0, 1), c1));
  CHECK(close(bl.c(1, 1), 0.0));

  // Slicing the assembled M reproduces every block.
  const auto m = build_perturbed(series, swap, 2);
  CHECK(bl.assemble() == m);
}

TEST_CASE("build_blocks with phi = 1 are indicator matrices") {
  const auto series = fourier_coefficients(catalog::constant_one(), 16);
  const Perturbation pert({3, 0, 5}, {1, 4, 2});
  const std::size_t n = 5;
  const auto bl = build_blocks(series, pert, n);
  const int m = 3;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < n; ++k)
      CHECK(bl.b(i, k) == Complex{pert.p(i) == m + static_cast<int>(k) ? 1.0 : 0.0});
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(bl.c(k, j) == Complex{m + static_cast<int>(k) == pert.q(j) ? 1.0 : 0.0});
}

TEST_CASE("block reassembly is exact on the catalog") {
  const std::vector<Perturbation> perts{Perturbation{},        Perturbation({1, 0}, {0, 1}),
                                        Perturbation({-1}, {0}), Perturbation({1}, {1}),
                                        Perturbation({2, -1, 0}, {0, 3, -2})};
  for (const auto& entry : catalog::entries()) {
    const auto series = fourier_coefficients(entry.spec, 64);
    for (const auto& pert : perts)
      for (std::size_t n : {1, 3, 8, 20}) {
        CAPTURE(entry.name);
        CAPTURE(n);
        CHECK(build_blocks(series, pert, n).assemble() == build_perturbed(series, pert, n));
      }
  }
}

TEST_CASE("validate_perturbation") {
  CHECK_FALSE(validate_perturbation(Perturbation{}, 64).has_duplicates());

  const auto dup = validate_perturbation(Perturbation({1}, {0}), 64);
  CHECK(dup.has_duplicates());

  const auto twice = validate_perturbation(Perturbation({0, 0}, {0, 1}), 64);
  CHECK(twice.has_duplicates());

  CHECK_FALSE(validate_perturbation(Perturbation({1, 0}, {0, 1}), 64).has_duplicates());

  CHECK_THROWS_WITH_AS(validate_perturbation(Perturbation({-200}, {0}), 64),
                       doctest::Contains("TruncationExceeded"), Error);
  CHECK_THROWS_AS(Perturbation({1, 2}, {0}), Error);
}

TEST_CASE("M_{m+n} is a Toeplitz minor for distinct p, q") {
  // Brute force: pick rows p and columns q out of a wide section of (c_{r-s}).
  const auto series = fourier_coefficients(catalog::exp_cosine(), 64);
  auto coeff = [&](int k) { return series[k]; };
  const std::vector<Perturbation> perts{Perturbation({-2, 0, 1}, {-1, 1, 2}),
                                        Perturbation({0, 2}, {-3, 1}),
                                        Perturbation({-1}, {0}), Perturbation({2, 0}, {0, 1}),
                                        Perturbation({1, -2, 0}, {2, 0, -1})};
  for (const auto& pert : perts)
    for (std::size_t n = 1; n <= 6; ++n) {
      std::vector<int> rows, cols;
      for (std::size_t i = 0; i < pert.m() + n; ++i) {
        rows.push_back(pert.p(i));
        cols.push_back(pert.q(i));
      }
      const int sign = oracle::sort_sign(rows) * oracle::sort_sign(cols);
      std::sort(rows.begin(), rows.end());
      std::sort(cols.begin(), cols.end());
      const Complex minor = oracle::toeplitz_minor(coeff, rows, cols);
      const Complex det = lu_logdet(build_perturbed(series, pert, n)).value();
      CHECK(std::abs(det - static_cast<double>(sign) * minor) < 1e-12 * std::max(1.0, std::abs(minor)));
    }
}
