#include "sfft/bucketize.hpp"

#include <algorithm>

#include "json.hpp"
#include "sfft/error.hpp"
#include "sfft/fft.hpp"

namespace sfft {

std::string BucketSet::to_json() const {
  nlohmann::json j;
  j["filter_kind"] = std::string(sfft::to_string(filter_kind));
  j["n"] = n;
  j["num_buckets"] = num_buckets;
  j["bucket_width"] = bucket_width;
  j["shift"] = shift;
  j["perm"] = {{"sigma", perm.sigma}, {"tau", perm.tau}, {"b_prime", perm.b_prime}};
  auto& vals = j["values"] = nlohmann::json::array();
  for (const cplx& v : values) vals.push_back({v.real(), v.imag()});
  return j.dump();
}

BucketSet bucketize_flat(const TimeSignal& x, const WindowFilter& filter, const PermutationParams& perm,
                         Index shift) {
  if (filter.kind != FilterKind::flat) {
    throw Error(ErrorKind::FilterKindMismatch, "bucketize_flat needs a flat filter");
  }
  const Index n = x.size();
  if (filter.n != n) throw Error(ErrorKind::LengthMismatch, "filter and signal lengths differ");
  perm.validate(n);

  const Index b = filter.num_buckets;
  std::vector<cplx> folded(static_cast<std::size_t>(b));
  for (std::size_t i = 0; i < filter.taps.size(); ++i) {
    const Index t = filter.tap_times[i];
    folded[static_cast<std::size_t>(mod(t, b))] += filter.taps[i] * permuted_sample(x, perm, t - shift);
  }

  BucketSet out;
  out.values = fft::forward(folded);
  out.filter_kind = FilterKind::flat;
  out.perm = perm;
  out.shift = shift;
  out.n = n;
  out.num_buckets = b;
  out.bucket_width = filter.bucket_width;
  return out;
}

BucketSet bucketize_spike(const TimeSignal& x, Index num_buckets, Index tau) {
  const Index n = x.size();
  if (num_buckets <= 0 || n % num_buckets != 0) {
    throw Error(ErrorKind::NonDivisorParameter, "bucket count must divide n");
  }
  const Index width = n / num_buckets;
  std::vector<cplx> samples(static_cast<std::size_t>(num_buckets));
  for (Index j = 0; j < num_buckets; ++j) samples[static_cast<std::size_t>(j)] = x.at_mod(j * width - tau);

  BucketSet out;
  out.values = fft::forward(samples);
  const double scale = 1.0 / static_cast<double>(num_buckets);
  for (cplx& v : out.values) v *= scale;
  out.filter_kind = FilterKind::spike_train;
  out.shift = tau;
  out.n = n;
  out.num_buckets = num_buckets;
  out.bucket_width = width;
  return out;
}

std::vector<BucketSet> bucketize_dirichlet(const TimeSignal& x, const WindowFilter& bank,
                                           const std::vector<Index>& offsets) {
  if (bank.kind != FilterKind::dirichlet_bank) {
    throw Error(ErrorKind::FilterKindMismatch, "bucketize_dirichlet needs a Dirichlet bank");
  }
  const Index n = x.size();
  if (bank.n != n) throw Error(ErrorKind::LengthMismatch, "filter and signal lengths differ");

  const Index b = bank.num_buckets;
  const Index base = bank.bank_center(0);
  std::vector<BucketSet> out;
  out.reserve(offsets.size());
  for (const Index s : offsets) {
    std::vector<cplx> folded(static_cast<std::size_t>(b));
    for (std::size_t i = 0; i < bank.taps.size(); ++i) {
      const Index t = s - bank.tap_times[i];
      folded[static_cast<std::size_t>(mod(t, b))] += bank.taps[i] * x.at_mod(t) * fft::omega(base * t, n);
    }
    BucketSet set;
    set.values = fft::forward(folded);
    set.filter_kind = FilterKind::dirichlet_bank;
    set.shift = s;
    set.n = n;
    set.num_buckets = b;
    set.bucket_width = bank.bucket_width;
    out.push_back(std::move(set));
  }
  return out;
}

HashMapView::HashMapView(FilterKind kind, Index n, Index num_buckets, PermutationParams perm,
                         bool half_bucket_offset, Index center_offset)
    : kind_(kind),
      n_(n),
      num_buckets_(num_buckets),
      perm_(perm),
      half_offset_(half_bucket_offset),
      center_offset_(center_offset) {
  if (num_buckets <= 0 || n % num_buckets != 0) {
    throw Error(ErrorKind::NonDivisorParameter, "bucket count must divide n");
  }
  perm_.validate(n);
}

HashMapView HashMapView::for_filter(const WindowFilter& filter, const PermutationParams& perm) {
  return HashMapView(filter.kind, filter.n, filter.num_buckets, perm,
                     filter.kind == FilterKind::flat || filter.half_bucket_offset, filter.center_offset);
}

Index HashMapView::centered(Index f) const {
  const Index b = perm_.permuted_position(mod(f, n_), n_) - center_offset_;
  const Index width = bucket_width();
  return mod(half_offset_ ? b + width / 2 : b, n_);
}

Index HashMapView::bucket_of(Index f) const {
  if (kind_ == FilterKind::spike_train) return mod(perm_.permuted_position(mod(f, n_), n_), num_buckets_);
  return mod(centered(f) / bucket_width(), num_buckets_);
}

Index HashMapView::offset_of(Index f) const {
  if (kind_ == FilterKind::spike_train) return perm_.permuted_position(mod(f, n_), n_) / num_buckets_;
  return centered(f) % bucket_width() - bucket_width() / 2;
}

std::vector<Index> HashMapView::preimage(Index k) const {
  std::vector<Index> out;
  const Index width = bucket_width();
  if (kind_ == FilterKind::spike_train) {
    for (Index j = 0; j < width; ++j) out.push_back(perm_.original_position(k + j * num_buckets_, n_));
  } else {
    const Index start = k * width + center_offset_ - (half_offset_ ? width / 2 : 0);
    for (Index d = 0; d < width; ++d) out.push_back(perm_.original_position(mod(start + d, n_), n_));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sfft
