#include "sfft/dsp.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "sfft/error.hpp"
#include "sfft/fft.hpp"

namespace sfft {

Index gcd(Index a, Index b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

Index mod_inverse(Index a, Index n) {
  Index old_r = mod(a, n), r = n;
  Index old_s = 1, s = 0;
  while (r != 0) {
    const Index q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw Error(ErrorKind::NonInvertibleScaling,
                "sigma=" + std::to_string(a) + " has no inverse mod " + std::to_string(n));
  }
  return mod(old_s, n);
}

void PermutationParams::validate(Index n) const {
  if (gcd(sigma, n) != 1) {
    throw Error(ErrorKind::NonInvertibleScaling,
                "gcd(" + std::to_string(sigma) + ", " + std::to_string(n) + ") != 1");
  }
}

Index PermutationParams::sigma_inverse(Index n) const { return mod_inverse(sigma, n); }

Index PermutationParams::original_position(Index permuted, Index n) const {
  return mod(sigma_inverse(n) * mod(permuted, n) % n + b_prime, n);
}

cplx PermutationParams::phase(Index f, Index n) const {
  return fft::omega(mod(sigma, n) * mod(tau, n) % n * mod(f, n) % n, n);
}

std::vector<cplx> dft_dense(std::span<const cplx> x) {
  auto out = fft::forward(x);
  const double scale = 1.0 / static_cast<double>(x.size());
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<cplx> dft_dense(const TimeSignal& x) {
  std::vector<cplx> samples(static_cast<std::size_t>(x.size()));
  for (Index i = 0; i < x.size(); ++i) samples[static_cast<std::size_t>(i)] = x[i];
  return dft_dense(samples);
}

std::vector<cplx> idft_dense(std::span<const cplx> spectrum) { return fft::inverse(spectrum); }

std::vector<cplx> dft_bruteforce(std::span<const cplx> x) {
  const auto n = static_cast<Index>(x.size());
  std::vector<cplx> out(x.size());
  for (Index i = 0; i < n; ++i) {
    cplx acc{};
    for (Index j = 0; j < n; ++j) acc += x[static_cast<std::size_t>(j)] * fft::omega(i * j % n, n);
    out[static_cast<std::size_t>(i)] = acc / static_cast<double>(n);
  }
  return out;
}

namespace {

template <typename F>
TimeSignal build(Index n, F&& sample_at) {
  std::vector<cplx> out(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = sample_at(i);
  return TimeSignal(std::move(out));
}

void require_divisor(Index n, Index factor) {
  if (factor <= 0 || n % factor != 0) {
    throw Error(ErrorKind::NonDivisorParameter,
                std::to_string(factor) + " does not divide " + std::to_string(n));
  }
}

}  // namespace

TimeSignal time_shift(const TimeSignal& x, Index tau) {
  return build(x.size(), [&](Index i) { return x.at_mod(i - tau); });
}

TimeSignal time_scale(const TimeSignal& x, Index sigma) {
  const Index n = x.size();
  PermutationParams{sigma, 0, 0}.validate(n);
  const Index s = mod(sigma, n);
  return build(n, [&](Index i) { return x[s * i % n]; });
}

TimeSignal freq_shift(const TimeSignal& x, Index b) {
  const Index n = x.size();
  const Index bm = mod(b, n);
  return build(n, [&](Index i) { return x[i] * fft::omega(bm * i % n, n); });
}

TimeSignal permute(const TimeSignal& x, const PermutationParams& p) {
  p.validate(x.size());
  return build(x.size(), [&](Index i) { return permuted_sample(x, p, i); });
}

TimeSignal subsample(const TimeSignal& x, Index stride) {
  require_divisor(x.size(), stride);
  return build(x.size() / stride, [&](Index i) { return x[i * stride]; });
}

TimeSignal alias(const TimeSignal& x, Index factor) {
  require_divisor(x.size(), factor);
  const Index buckets = x.size() / factor;
  return build(buckets, [&](Index i) {
    cplx acc{};
    for (Index j = 0; j < factor; ++j) acc += x[i + j * buckets];
    return acc;
  });
}

std::vector<cplx> convolve(std::span<const cplx> x, std::span<const cplx> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::LengthMismatch,
                std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  }
  const auto n = static_cast<Index>(x.size());
  std::vector<cplx> out(x.size());
  for (Index i = 0; i < n; ++i) {
    cplx acc{};
    for (Index j = 0; j < n; ++j) acc += x[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(mod(i - j, n))];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

}  // namespace sfft
