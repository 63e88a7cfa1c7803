#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <memory>
#include <mutex>

namespace tlim::detail {
namespace {

// FFTW planning touches global state; execution of a finished plan does not.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanDeleter {
  void operator()(fftw_plan_s* plan) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
};

struct BufferDeleter {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

}  // namespace

std::vector<std::complex<double>> forward_dft(std::span<const std::complex<double>> samples) {
  const auto n = samples.size();
  if (n == 0) return {};

  std::unique_ptr<fftw_complex, BufferDeleter> in(fftw_alloc_complex(n));
  std::unique_ptr<fftw_complex, BufferDeleter> out(fftw_alloc_complex(n));
  std::unique_ptr<fftw_plan_s, PlanDeleter> plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(), FFTW_FORWARD,
                                FFTW_ESTIMATE));
  }
  auto* in_c = reinterpret_cast<std::complex<double>*>(in.get());
  std::copy(samples.begin(), samples.end(), in_c);
  fftw_execute(plan.get());

  const auto* out_c = reinterpret_cast<const std::complex<double>*>(out.get());
  return {out_c, out_c + n};
}

}  // namespace tlim::detail
