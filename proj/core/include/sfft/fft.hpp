#pragma once

#include <span>
#include <vector>

#include "sfft/signal.hpp"

namespace sfft::fft {

/// Unnormalized forward transform: out_k = sum_j in_j * exp(-2 pi i jk / n).
/// Any length; backed by FFTW with a per-size plan cache.
std::vector<cplx> forward(std::span<const cplx> in);

/// Unnormalized inverse transform: out_j = sum_k in_k * exp(+2 pi i jk / n).
std::vector<cplx> inverse(std::span<const cplx> in);

/// e^{-2 pi i * e / n}, with the exponent reduced mod n first.
cplx omega(Index e, Index n);
/// e^{-2 pi i * e / n} for a real exponent.
cplx omega_real(double e, Index n);

}  // namespace sfft::fft
