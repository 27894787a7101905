#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sfft/signal.hpp"

namespace sfft {

enum class FilterKind { flat, spike_train, dirichlet_bank };

std::string_view to_string(FilterKind kind);
FilterKind filter_kind_from_string(std::string_view name);

/// Time-domain window plus its tabulated frequency response.
///
/// Tap `i` sits at time `tap_times[i]` (flat windows are centred on t = 0, so
/// their times run over [-support/2, support/2)). The response is tabulated as
///
///     freq_response[f] = sum_i taps[i] * omega_N^{f * tap_times[i]},
///
/// i.e. the unnormalized transform of the taps, so a passband gain of 1 means a
/// coefficient enters its bucket unscaled.
struct WindowFilter {
  FilterKind kind = FilterKind::flat;
  Index n = 0;
  Index num_buckets = 0;   // B
  Index bucket_width = 0;  // L, with B * L = n
  Index support = 0;       // number of time-domain taps
  double gauss_sigma = 0.0;
  Index center_offset = 0;
  bool half_bucket_offset = false;
  std::vector<cplx> taps;
  std::vector<Index> tap_times;
  std::vector<cplx> freq_response;

  cplx response(Index f) const { return freq_response[static_cast<std::size_t>(mod(f, n))]; }

  /// Dirichlet bank: centre frequency of bucket k before any filter shift.
  Index bank_center(Index k) const;
  /// Dirichlet bank: gain of bucket k for a tone at frequency f.
  cplx bank_response(Index k, Index f) const { return response(f - bank_center(k)); }

  std::string to_json() const;
  /// Rebuilds the filter from its JSON description; taps are regenerated.
  static WindowFilter from_json(std::string_view text);
};

/// Smallest even integer >= 4 * B * sqrt(log2 n), capped at n.
Index default_flat_support(Index n, Index num_buckets);
/// B * sqrt(log2 n).
double default_gauss_sigma(Index n, Index num_buckets);

/// Gaussian-windowed sinc with a passband of L = n / B bins.
///
/// The sinc has its first zero B samples from the centre, the Gaussian has
/// standard deviation `gauss_sigma`, and the taps carry a half-bin modulation so
/// the passband covers offsets (-L/2, L/2] around each bucket centre.
WindowFilter make_flat_filter(Index n, Index num_buckets, Index support, double gauss_sigma);
WindowFilter make_flat_filter(Index n, Index num_buckets);

/// L impulses of height sqrt(n)/L at multiples of B = n / L.
WindowFilter make_spike_train(Index n, Index aliasing_factor);

/// B boxes of L taps; bucket k is centred at k*L (half_offset) or k*L + L/2.
/// Taps are normalized to 1/L so the gain at a bucket centre is exactly 1.
WindowFilter make_dirichlet_bank(Index n, Index bucket_width, Index num_buckets, bool half_offset);

/// Moves the passband centre by f0 bins: taps are multiplied by omega^{-f0 t}.
WindowFilter filter_freq_shift(const WindowFilter& filter, Index f0);

}  // namespace sfft
