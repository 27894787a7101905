#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace sfft {

using cplx = std::complex<double>;
using Index = std::int64_t;

/// Reduces `v` into [0, n).
constexpr Index mod(Index v, Index n) {
  const Index r = v % n;
  return r < 0 ? r + n : r;
}

/// Length-N complex sample buffer whose reads are counted.
///
/// Every call to operator[] marks the index as touched; `samples_read()` is the
/// number of distinct indices read so far. `peek()` reads without marking and
/// is meant for oracles and test code only. The counter is not synchronized:
/// share a signal across threads only through per-task copies.
class TimeSignal {
 public:
  TimeSignal() = default;
  explicit TimeSignal(std::vector<cplx> samples);

  Index size() const noexcept { return static_cast<Index>(samples_.size()); }

  cplx operator[](Index i) const {
    const auto u = static_cast<std::size_t>(i);
    if (!touched_[u]) {
      touched_[u] = 1;
      ++read_count_;
    }
    return samples_[u];
  }

  cplx peek(Index i) const { return samples_[static_cast<std::size_t>(i)]; }

  /// Instrumented read of index i mod N.
  cplx at_mod(Index i) const { return (*this)[mod(i, size())]; }

  Index samples_read() const noexcept { return read_count_; }
  bool was_read(Index i) const { return touched_[static_cast<std::size_t>(i)] != 0; }
  std::vector<Index> touched_indices() const;

  /// Copy of the samples with a fresh (empty) access counter.
  TimeSignal fresh_copy() const { return TimeSignal(samples_); }

  /// Uninstrumented view of the raw samples.
  std::span<const cplx> raw() const noexcept { return samples_; }

 private:
  std::vector<cplx> samples_;
  mutable std::vector<std::uint8_t> touched_;
  mutable Index read_count_ = 0;
};

/// Sparse map from frequency position to coefficient.
class SparseSpectrum {
 public:
  SparseSpectrum() = default;
  explicit SparseSpectrum(Index n) : n_(n) {}

  Index n() const noexcept { return n_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Sets the coefficient at `pos` (must lie in [0, n)).
  void set(Index pos, cplx value);
  /// Adds `value` to the coefficient at `pos`, inserting if absent.
  void add(Index pos, cplx value);
  void erase(Index pos) { entries_.erase(pos); }
  bool contains(Index pos) const { return entries_.count(pos) != 0; }
  cplx get(Index pos) const;

  const std::map<Index, cplx>& entries() const noexcept { return entries_; }
  std::vector<Index> positions() const;

  /// Keeps the k largest-magnitude entries; ties go to the smaller position.
  SparseSpectrum top_k(std::size_t k) const;
  /// Drops entries whose magnitude is at or below `threshold`.
  void prune(double threshold);

  std::vector<cplx> to_dense() const;
  static SparseSpectrum from_dense(std::span<const cplx> dense, double threshold = 0.0);

 private:
  Index n_ = 0;
  std::map<Index, cplx> entries_;
};

}  // namespace sfft
