#include "sfft/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <unordered_map>

namespace sfft::fft {
namespace {

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n, int sign) {
    std::lock_guard lock(mutex_);
    const long key = static_cast<long>(n) * 2 + (sign == FFTW_FORWARD ? 0 : 1);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<cplx> scratch_in(static_cast<std::size_t>(n)), scratch_out(static_cast<std::size_t>(n));
    fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(scratch_in.data()),
                                      reinterpret_cast<fftw_complex*>(scratch_out.data()), sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<long, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

std::vector<cplx> run(std::span<const cplx> in, int sign) {
  const auto n = static_cast<int>(in.size());
  std::vector<cplx> src(in.begin(), in.end());
  std::vector<cplx> out(in.size());
  if (n == 0) return out;
  fftw_plan plan = cache().get(n, sign);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(src.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

std::vector<cplx> forward(std::span<const cplx> in) { return run(in, FFTW_FORWARD); }
std::vector<cplx> inverse(std::span<const cplx> in) { return run(in, FFTW_BACKWARD); }

cplx omega(Index e, Index n) {
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(mod(e, n)) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

cplx omega_real(double e, Index n) {
  const double angle = -2.0 * std::numbers::pi * e / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace sfft::fft
