#pragma once

#include <span>
#include <vector>

#include "sfft/signal.hpp"

namespace sfft {

/// Permutation parameters (sigma, tau, b'), b = b' * sigma mod N.
struct PermutationParams {
  Index sigma = 1;
  Index tau = 0;
  Index b_prime = 0;

  Index b(Index n) const { return mod(b_prime * sigma, n); }
  /// Throws NonInvertibleScaling when gcd(sigma, n) != 1.
  void validate(Index n) const;
  /// sigma^{-1} mod n.
  Index sigma_inverse(Index n) const;

  /// Position at which original frequency f appears after permutation:
  /// sigma * (f - b') mod n.
  Index permuted_position(Index f, Index n) const { return mod(mod(sigma, n) * mod(f - b_prime, n) % n, n); }
  /// Inverse of permuted_position.
  Index original_position(Index permuted, Index n) const;
  /// Phase the coefficient picks up: x'_{perm(f)} = x_f * omega^{sigma tau f}.
  cplx phase(Index f, Index n) const;

  static PermutationParams identity() { return {}; }
};

Index gcd(Index a, Index b);
/// Modular inverse of a mod n; throws NonInvertibleScaling when none exists.
Index mod_inverse(Index a, Index n);

/// x-hat_i = (1/N) sum_j x_j omega^{ij}; reads every sample.
std::vector<cplx> dft_dense(const TimeSignal& x);
std::vector<cplx> dft_dense(std::span<const cplx> x);
/// Inverse of dft_dense: x_j = sum_i x-hat_i omega^{-ij}.
std::vector<cplx> idft_dense(std::span<const cplx> spectrum);
/// O(N^2) evaluation of the DFT sum, for oracles.
std::vector<cplx> dft_bruteforce(std::span<const cplx> x);

TimeSignal time_shift(const TimeSignal& x, Index tau);
TimeSignal time_scale(const TimeSignal& x, Index sigma);
TimeSignal freq_shift(const TimeSignal& x, Index b);
TimeSignal permute(const TimeSignal& x, const PermutationParams& p);
TimeSignal subsample(const TimeSignal& x, Index stride);
TimeSignal alias(const TimeSignal& x, Index factor);

/// Permuted sample x'_i = x_{sigma(i - tau)} omega^{b' sigma i} without forming x'.
inline cplx permuted_sample(const TimeSignal& x, const PermutationParams& p, Index i);

/// Cyclic convolution (x * y)_i = sum_j x_j y_{(i-j) mod N}.
std::vector<cplx> convolve(std::span<const cplx> x, std::span<const cplx> y);

}  // namespace sfft

#include "sfft/fft.hpp"

namespace sfft {

inline cplx permuted_sample(const TimeSignal& x, const PermutationParams& p, Index i) {
  const Index n = x.size();
  const Index src = mod(mod(p.sigma, n) * mod(i - p.tau, n) % n, n);
  return x[src] * fft::omega(mod(p.b_prime * p.sigma, n) * mod(i, n) % n, n);
}

}  // namespace sfft
