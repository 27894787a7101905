#include "sfft/signal.hpp"

#include <algorithm>
#include <cmath>

#include "sfft/error.hpp"

namespace sfft {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonInvertibleScaling: return "NonInvertibleScaling";
    case ErrorKind::NonDivisorParameter: return "NonDivisorParameter";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::FilterKindMismatch: return "FilterKindMismatch";
    case ErrorKind::ZeroTonBucket: return "ZeroTonBucket";
    case ErrorKind::AmbiguousSplit: return "AmbiguousSplit";
    case ErrorKind::SingularMomentMatrix: return "SingularMomentMatrix";
    case ErrorKind::NearZeroResponse: return "NearZeroResponse";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ConfigMismatch: return "ConfigMismatch";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

TimeSignal::TimeSignal(std::vector<cplx> samples)
    : samples_(std::move(samples)), touched_(samples_.size(), 0) {}

std::vector<Index> TimeSignal::touched_indices() const {
  std::vector<Index> out;
  out.reserve(static_cast<std::size_t>(read_count_));
  for (std::size_t i = 0; i < touched_.size(); ++i) {
    if (touched_[i]) out.push_back(static_cast<Index>(i));
  }
  return out;
}

void SparseSpectrum::set(Index pos, cplx value) {
  if (pos < 0 || pos >= n_) {
    throw Error(ErrorKind::InvalidParameter, "position " + std::to_string(pos) + " outside [0, n)");
  }
  entries_[pos] = value;
}

void SparseSpectrum::add(Index pos, cplx value) {
  if (pos < 0 || pos >= n_) {
    throw Error(ErrorKind::InvalidParameter, "position " + std::to_string(pos) + " outside [0, n)");
  }
  entries_[pos] += value;
}

cplx SparseSpectrum::get(Index pos) const {
  const auto it = entries_.find(pos);
  return it == entries_.end() ? cplx{} : it->second;
}

std::vector<Index> SparseSpectrum::positions() const {
  std::vector<Index> out;
  out.reserve(entries_.size());
  for (const auto& [pos, value] : entries_) out.push_back(pos);
  return out;
}

SparseSpectrum SparseSpectrum::top_k(std::size_t k) const {
  std::vector<std::pair<Index, cplx>> items(entries_.begin(), entries_.end());
  // stable_sort keeps the ascending-position order among equal magnitudes.
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    return std::abs(a.second) > std::abs(b.second);
  });
  SparseSpectrum out(n_);
  for (std::size_t i = 0; i < std::min(k, items.size()); ++i) out.entries_.insert(items[i]);
  return out;
}

void SparseSpectrum::prune(double threshold) {
  std::erase_if(entries_, [threshold](const auto& kv) { return std::abs(kv.second) <= threshold; });
}

std::vector<cplx> SparseSpectrum::to_dense() const {
  std::vector<cplx> out(static_cast<std::size_t>(n_));
  for (const auto& [pos, value] : entries_) out[static_cast<std::size_t>(pos)] = value;
  return out;
}

SparseSpectrum SparseSpectrum::from_dense(std::span<const cplx> dense, double threshold) {
  SparseSpectrum out(static_cast<Index>(dense.size()));
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (std::abs(dense[i]) > threshold) out.entries_.emplace(static_cast<Index>(i), dense[i]);
  }
  return out;
}

}  // namespace sfft
