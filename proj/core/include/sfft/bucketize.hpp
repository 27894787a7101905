#pragma once

#include <string>
#include <vector>

#include "sfft/dsp.hpp"
#include "sfft/filters.hpp"

namespace sfft {

/// Bucket values produced by one bucketization pass.
struct BucketSet {
  std::vector<cplx> values;
  FilterKind filter_kind = FilterKind::flat;
  PermutationParams perm;
  Index shift = 0;  // extra time shift applied on top of perm.tau
  Index n = 0;
  Index num_buckets = 0;
  Index bucket_width = 0;

  std::string to_json() const;
};

/// Flat-window bucketization of the permuted signal delayed by `shift`.
///
/// Reads exactly `filter.support` samples. For the permuted spectrum x-hat',
///
///     values[k] = sum_b H(k L - b) x-hat'_b omega^{shift * b},
///
/// where H is filter.freq_response.
BucketSet bucketize_flat(const TimeSignal& x, const WindowFilter& filter, const PermutationParams& perm,
                         Index shift = 0);

/// Spike-train bucketization at shift tau: reads x[(j L - tau) mod n] for
/// j < B and returns the B-point transform, values[i] = sum_{f = i mod B} x-hat_f omega^{tau f}.
BucketSet bucketize_spike(const TimeSignal& x, Index num_buckets, Index tau);

/// Dirichlet-bank bucketization evaluated at each sample offset s:
///
///     y_k(s) = sum_{t < L} g_t x_{s - t} omega^{c_k (s - t)},
///
/// so a tone at f contributes x-hat_f omega^{-(f - c_k) s} H(f - c_k). One
/// BucketSet per offset; each offset reads L samples.
std::vector<BucketSet> bucketize_dirichlet(const TimeSignal& x, const WindowFilter& bank,
                                           const std::vector<Index>& offsets);

/// Frequency-to-bucket hashing for a given filter family and permutation.
class HashMapView {
 public:
  HashMapView() = default;
  HashMapView(FilterKind kind, Index n, Index num_buckets, PermutationParams perm = {},
              bool half_bucket_offset = true, Index center_offset = 0);
  static HashMapView for_filter(const WindowFilter& filter, const PermutationParams& perm = {});

  /// Bucket that frequency f lands in.
  Index bucket_of(Index f) const;
  /// Position of f inside its bucket: signed offset from the bucket centre
  /// for flat and Dirichlet filters, the alias index (f div B) for spikes.
  Index offset_of(Index f) const;
  /// Original frequencies hashing into bucket k, ascending.
  std::vector<Index> preimage(Index k) const;

  FilterKind kind() const { return kind_; }
  Index n() const { return n_; }
  Index num_buckets() const { return num_buckets_; }
  Index bucket_width() const { return n_ / num_buckets_; }
  const PermutationParams& perm() const { return perm_; }

 private:
  Index centered(Index f) const;

  FilterKind kind_ = FilterKind::flat;
  Index n_ = 1;
  Index num_buckets_ = 1;
  PermutationParams perm_;
  bool half_offset_ = true;
  Index center_offset_ = 0;
};

}  // namespace sfft
