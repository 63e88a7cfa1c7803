#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tlim/catalog.hpp"
#include "tlim/errors.hpp"
#include "tlim/symbol.hpp"

using namespace tlim;

namespace {

constexpr double kA = 0.5;
constexpr double kB = 1.0 / 3.0;

// Reference values of I_0(0.8), I_1(0.8), I_2(0.8), computed to 30 digits.
constexpr double kBesselI0 = 1.16651492286980275065;
constexpr double kBesselI1 = 0.43286480262063984894;
constexpr double kBesselI2 = 0.08435291631820318838;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected tlim::Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("eval_symbol samples the defining formula") {
  const auto ones = eval_symbol(catalog::constant_one(), 8);
  REQUIRE(ones.size() == 8);
  for (const auto& v : ones) CHECK(v == Complex{1.0, 0.0});

  CHECK(std::abs(evaluate(catalog::linear_factors(), 0.0) - Complex{1.0 / 3.0}) < 1e-15);
  CHECK(std::abs(evaluate(catalog::exp_cosine(), 0.0) - std::exp(0.8)) < 1e-15);
  CHECK(std::abs(evaluate(catalog::exp_cosine(), 0.0).real() - 2.2255409284924677) < 1e-15);

  // theta_j = 2 pi j / L
  const auto samples = eval_symbol(catalog::linear_factors(), 16);
  const double theta = 2.0 * std::numbers::pi * 5.0 / 16.0;
  const Complex z = std::polar(1.0, theta);
  CHECK(std::abs(samples[5] - (1.0 - kA * z) * (1.0 - kB / z)) < 1e-15);
}

TEST_CASE("eval_symbol rejects grids that are not powers of two") {
  CHECK(code_of([] { eval_symbol(catalog::constant_one(), 12); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { eval_symbol(catalog::constant_one(), 0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("exp_laurent overflow is reported") {
  const auto huge = SymbolSpec::exp_laurent(0, {Complex{800.0}});
  CHECK(code_of([&] { eval_symbol(huge, 8); }) == ErrorCode::kExpOverflow);
}

TEST_CASE("symbol validation") {
  CHECK(code_of([] { SymbolSpec::laurent(0, {}); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { SymbolSpec::linear_factors({Complex{1.0}}, {}); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(code_of([] { SymbolSpec::linear_factors({}, {Complex{0.0, 1.2}}); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("fourier_coefficients in closed form") {
  const auto one = fourier_coefficients(catalog::constant_one(), 8);
  CHECK(one[0] == Complex{1.0});
  for (int k = 1; k <= 8; ++k) {
    CHECK(one[k] == Complex{});
    CHECK(one[-k] == Complex{});
  }

  const auto lf = fourier_coefficients(catalog::linear_factors(), 16);
  CHECK(std::abs(lf[0] - (1.0 + kA * kB)) < 1e-15);
  CHECK(std::abs(lf[1] - (-kA)) < 1e-15);
  CHECK(std::abs(lf[-1] - (-kB)) < 1e-15);
  for (int k = 2; k <= 16; ++k) {
    CHECK(lf[k] == Complex{});
    CHECK(lf[-k] == Complex{});
  }
  CHECK(lf[17] == Complex{});
  CHECK(lf[-1000] == Complex{});
  CHECK(lf.tail_bound() == 0.0);
}

TEST_CASE("fourier_coefficients of exp(0.4(z + 1/z)) are Bessel values") {
  const auto series = fourier_coefficients(catalog::exp_cosine(), 32);
  CHECK(std::abs(series[0] - kBesselI0) < 1e-14);
  CHECK(std::abs(series[1] - kBesselI1) < 1e-14);
  CHECK(std::abs(series[-1] - kBesselI1) < 1e-14);
  CHECK(std::abs(series[2] - kBesselI2) < 1e-14);

  // Independent midpoint quadrature of the defining integral.
  auto phi = [](double t) { return std::exp(Complex{0.8 * std::cos(t)}); };
  for (int k = -6; k <= 6; ++k) {
    const Complex ref = oracle::fourier_quadrature(phi, k, 4096);
    CHECK(std::abs(series[k] - ref) < 1e-13);
    CHECK(std::abs(series[k] - std::cyl_bessel_i(std::abs(k), 0.8)) < 1e-13);
  }
}

TEST_CASE("TailTooLarge when the truncation is too small") {
  // exp(0.9(z + 1/z)) has coefficients of size ~1e-3 at k = 4.
  const auto spec = SymbolSpec::exp_laurent(-1, {Complex{0.9}, Complex{}, Complex{0.9}});
  CHECK(code_of([&] { fourier_coefficients(spec, 4); }) == ErrorCode::kTailTooLarge);
  CHECK(code_of([&] { log_coefficients(catalog::linear_factors(), 8); }) ==
        ErrorCode::kTailTooLarge);
  // Laurent data beyond N cannot be represented.
  const auto wide = SymbolSpec::laurent(-3, {Complex{1.0}, {}, {}, Complex{2.0}});
  CHECK(code_of([&] { fourier_coefficients(wide, 2); }) == ErrorCode::kTailTooLarge);
  CHECK(code_of([&] { fourier_coefficients(wide, 0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("FourierSeries tail bound tracks the outermost indices") {
  FourierSeries s(20);
  CHECK(s.tail_bound() == 0.0);
  s.set(19, Complex{0.0, 2.0});
  CHECK(s.tail_bound() == doctest::Approx(2.0));
  s.set(19, Complex{});
  s.set(-17, Complex{0.5});  // |k| = 17 is outside the outer 10% (|k| >= 19)
  CHECK(s.tail_bound() == 0.0);
  s.set(-20, Complex{0.25});
  CHECK(s.tail_bound() == doctest::Approx(0.25));
  CHECK(s[21] == Complex{});
  CHECK_THROWS_AS(s.set(21, Complex{1.0}), Error);
}

TEST_CASE("winding_number") {
  CHECK(winding_number(catalog::constant_one(), 64) == 0);
  CHECK(winding_number(catalog::linear_factors(), 64) == 0);
  CHECK(winding_number(catalog::exp_cosine(), 64) == 0);
  CHECK(winding_number(SymbolSpec::laurent(1, {Complex{1.0}}), 64) == 1);
  CHECK(winding_number(SymbolSpec::laurent(-2, {Complex{1.0}}), 64) == -2);
  // z^7 on an 8-point grid aliases; refinement must resolve it.
  CHECK(winding_number(SymbolSpec::laurent(7, {Complex{1.0}}), 8) == 7);

  // 1 - z vanishes at theta = 0.
  const auto vanishing = SymbolSpec::laurent(0, {Complex{1.0}, Complex{-1.0}});
  CHECK(code_of([&] { winding_number(vanishing, 64); }) == ErrorCode::kSymbolVanishes);

  SymbolOptions tight;
  tight.max_grid = 16;
  CHECK(code_of([&] { winding_number(SymbolSpec::laurent(40, {Complex{1.0}}), 8, tight); }) ==
        ErrorCode::kNoConvergence);
}

TEST_CASE("log_coefficients") {
  const auto zero = log_coefficients(catalog::constant_one(), 16);
  for (int k = -16; k <= 16; ++k) CHECK(std::abs(zero[k]) < 1e-15);

  const auto stored = log_coefficients(catalog::exp_cosine(), 16);
  CHECK(stored[1] == Complex{0.4});
  CHECK(stored[-1] == Complex{0.4});
  CHECK(stored[0] == Complex{});
  CHECK(stored[2] == Complex{});

  // Mercator series: log(1 - a z) = -sum a^k z^k / k.
  const auto lf = log_coefficients(catalog::linear_factors(), 64);
  CHECK(std::abs(lf[0]) < 1e-15);
  for (int k = 1; k <= 64; ++k) {
    CHECK(std::abs(lf[k] - (-std::pow(kA, k) / k)) < 1e-15);
    CHECK(std::abs(lf[-k] - (-std::pow(kB, k) / k)) < 1e-15);
  }

  CHECK(code_of([] { log_coefficients(SymbolSpec::laurent(1, {Complex{1.0}}), 16); }) ==
        ErrorCode::kNonzeroWinding);
}

TEST_CASE("log branch constant lies in (-pi, pi]") {
  // phi = -1 * (1 - z/2): the principal argument sits at the branch cut.
  const auto spec = SymbolSpec::laurent(0, {Complex{-1.0}, Complex{0.5}});
  const auto lg = log_coefficients(spec, 64);
  CHECK(lg[0].imag() > -std::numbers::pi);
  CHECK(lg[0].imag() <= std::numbers::pi);
  CHECK(std::abs(std::exp(lg[0]) - Complex{-1.0}) < 1e-13);

  // A symbol whose values circle near -1 without enclosing 0.
  const auto rotated = SymbolSpec::linear_factors({Complex{0.0, 0.9}}, {});
  const auto scaled = SymbolSpec::laurent(0, {Complex{-1.0}, Complex{0.0, 0.9}});
  const auto lr = log_coefficients(scaled, 256);
  CHECK(std::abs(std::exp(lr[0]) - Complex{-1.0}) < 1e-12);
  const auto lrot = log_coefficients(rotated, 256);
  for (int k = 1; k <= 20; ++k) CHECK(std::abs(lr[k] - lrot[k]) < 1e-12);
}

TEST_CASE("exp_laurent -> coefficients -> log round trip") {
  // Bandwidth <= 4, magnitudes <= 1.
  const std::vector<Complex> logs{Complex{0.2, -0.1}, Complex{-0.3}, Complex{0.5, 0.2},
                                  Complex{0.1},       Complex{0.0},  Complex{0.35, -0.25},
                                  Complex{-0.4},      Complex{0.15, 0.05}, Complex{0.05}};
  const auto spec = SymbolSpec::exp_laurent(-4, logs);
  const auto series = fourier_coefficients(spec, 64);
  const auto as_laurent = SymbolSpec::laurent(
      -64, std::vector<Complex>(series.coefficients().begin(), series.coefficients().end()));
  const auto recovered = log_coefficients(as_laurent, 64);
  for (int k = -64; k <= 64; ++k) {
    const Complex expect = (k >= -4 && k <= 4) ? logs[static_cast<std::size_t>(k + 4)] : Complex{};
    CHECK(std::abs(recovered[k] - expect) < 1e-10);
  }
}

TEST_CASE("Parseval on the catalog") {
  for (const auto& entry : catalog::entries()) {
    CAPTURE(entry.name);
    const auto series = fourier_coefficients(entry.spec, 64);
    double energy = 0.0;
    for (const auto& c : series.coefficients()) energy += std::norm(c);
    const auto samples = eval_symbol(entry.spec, 1024);
    double mean = 0.0;
    for (const auto& v : samples) mean += std::norm(v);
    mean /= static_cast<double>(samples.size());
    CHECK(std::abs(energy - mean) <= 1e-12 * std::max(1.0, mean));
  }
}

TEST_CASE("real roots give real coefficients") {
  const auto spec = SymbolSpec::linear_factors({Complex{0.3}, Complex{-0.6}}, {Complex{0.7}});
  REQUIRE(spec.has_real_parameters());
  const auto series = fourier_coefficients(spec, 16);
  for (const auto& c : series.coefficients()) CHECK(c.imag() == 0.0);
}

TEST_CASE("doubling N leaves shared coefficients within tail_bound") {
  const auto spec = SymbolSpec::exp_laurent(-2, {Complex{0.1}, Complex{0.3}, {}, Complex{0.3, 0.1}, Complex{-0.2}});
  for (int n : {32, 64, 128}) {
    const auto small = fourier_coefficients(spec, n);
    const auto big = fourier_coefficients(spec, 2 * n);
    const double allowed = std::max(small.tail_bound(), 1e-15);
    for (int k = -n; k <= n; ++k) CHECK(std::abs(small[k] - big[k]) <= allowed);
  }
}
