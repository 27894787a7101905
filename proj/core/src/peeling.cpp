#include <algorithm>
#include <cmath>
#include <numbers>

#include "sfft/bucketize.hpp"
#include "sfft/error.hpp"
#include "sfft/fft.hpp"
#include "sfft/frameworks.hpp"

namespace sfft {

namespace {

struct Fit {
  Index position = 0;
  cplx coefficient;
  double mean = 0.0;   // mean |y| over the moment shifts
  double worst = 0.0;  // largest single-tone residual over all shifts
  double rms = 0.0;
  double peak = 0.0;
};

}  // namespace

PeelingDecoder::PeelingDecoder(const TimeSignal& x, std::vector<Index> stage_buckets, const AlgorithmConfig& cfg)
    : n_(x.size()), moment_count_(2 * cfg.a_max), noise_factor_(cfg.noise_factor), resolved_(x.size()) {
  if (stage_buckets.empty()) throw Error(ErrorKind::ConfigMismatch, "peeling needs at least one stage");
  for (const Index b : stage_buckets) {
    if (b <= 0 || n_ % b != 0) {
      throw Error(ErrorKind::NonDivisorParameter, "stage bucket count " + std::to_string(b) + " does not divide n");
    }
    Stage st;
    st.buckets = b;
    st.width = n_ / b;
    const Index moments = std::min<Index>(moment_count_, st.width);
    for (Index s = 0; s < moments; ++s) st.shifts.push_back(s);
    if (cfg.refine) {
      for (Index t = 8; t <= st.width / 2; t *= 8) {
        if (t >= moments) st.shifts.push_back(t);
      }
    }
    for (const Index s : st.shifts) st.values.push_back(bucketize_spike(x, b, s).values);
    stages_.push_back(std::move(st));
  }
  estimate_floors();
}

namespace {

Fit fit_single(const std::vector<std::vector<cplx>>& values, const std::vector<Index>& shifts, Index bucket,
               Index buckets, Index n, int moment_count) {
  Fit fit;
  const auto bu = static_cast<std::size_t>(bucket);
  std::vector<cplx> moments;
  std::vector<cplx> extra;
  std::vector<Index> extra_shifts;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    const cplx v = values[i][bu];
    fit.peak = std::max(fit.peak, std::abs(v));
    if (static_cast<int>(i) < moment_count && shifts[i] == static_cast<Index>(i)) {
      moments.push_back(v);
      fit.mean += std::abs(v);
    } else {
      extra.push_back(v);
      extra_shifts.push_back(shifts[i]);
    }
  }
  fit.mean /= static_cast<double>(std::max<std::size_t>(moments.size(), 1));
  if (fit.peak == 0.0) return fit;

  double f = moment_frequency(moments, n);
  const double span = static_cast<double>(n);
  for (std::size_t i = 0; i < extra.size(); ++i) {
    if (moments.front() == cplx{}) break;
    const auto t = static_cast<double>(extra_shifts[i]);
    const double phi = -std::arg(extra[i] / moments.front()) / (2.0 * std::numbers::pi);
    const double wraps = std::round(t * f / span - phi);
    f = (phi + wraps) * span / t;
  }
  fit.position = CandidateSet::residue_class(n, bucket, buckets).nearest(f);

  cplx p;
  for (std::size_t i = 0; i < shifts.size(); ++i) p += values[i][bu] * fft::omega(-(shifts[i] * fit.position % n), n);
  p /= static_cast<double>(shifts.size());
  fit.coefficient = p;
  double sq = 0.0;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    const double r = std::abs(values[i][bu] - p * fft::omega(shifts[i] * fit.position % n, n));
    fit.worst = std::max(fit.worst, r);
    sq += r * r;
  }
  fit.rms = std::sqrt(sq / static_cast<double>(shifts.size()));
  return fit;
}

}  // namespace

void PeelingDecoder::estimate_floors() {
  // Bucket noise scales as 1/sqrt(B), so residuals are pooled after scaling.
  std::vector<double> scaled;
  double peak = 0.0;
  for (const Stage& st : stages_) {
    const double root = std::sqrt(static_cast<double>(st.buckets));
    for (Index b = 0; b < st.buckets; ++b) {
      const Fit fit = fit_single(st.values, st.shifts, b, st.buckets, n_, moment_count_);
      scaled.push_back(fit.rms * root);
      peak = std::max(peak, fit.peak);
    }
  }
  auto mid = scaled.begin() + static_cast<std::ptrdiff_t>(scaled.size() / 2);
  std::nth_element(scaled.begin(), mid, scaled.end());
  const double med = *mid;
  for (Stage& st : stages_) {
    st.floor = std::max(noise_factor_ * med / std::sqrt(static_cast<double>(st.buckets)), 1e-10 * peak);
  }
}

TonClass PeelingDecoder::classify(std::size_t stage, Index bucket) const {
  const Stage& st = stages_.at(stage);
  if (bucket < 0 || bucket >= st.buckets) throw Error(ErrorKind::InvalidParameter, "bucket index out of range");
  const Fit fit = fit_single(st.values, st.shifts, bucket, st.buckets, n_, moment_count_);
  TonClass out;
  if (fit.peak == 0.0 || fit.mean < st.floor) return out;
  if (fit.worst <= std::max(st.floor, 1e-9 * fit.peak)) {
    out.kind = TonKind::single_ton;
    out.position = fit.position;
    out.coefficient = fit.coefficient;
    out.count = 1;
    return out;
  }
  out.kind = TonKind::multi_ton;
  out.count = 2;
  return out;
}

void PeelingDecoder::subtract(Index position, cplx value) {
  for (Stage& st : stages_) {
    const auto b = static_cast<std::size_t>(mod(position, st.buckets));
    for (std::size_t i = 0; i < st.shifts.size(); ++i) {
      st.values[i][b] -= value * fft::omega(st.shifts[i] * mod(position, n_) % n_, n_);
    }
  }
}

bool PeelingDecoder::decode(Index k) {
  Index cap = k;
  for (const Stage& st : stages_) cap += st.buckets;
  bool progress = true;
  while (progress && steps_ < cap) {
    progress = false;
    for (std::size_t s = 0; s < stages_.size() && steps_ < cap; ++s) {
      for (Index b = 0; b < stages_[s].buckets && steps_ < cap; ++b) {
        const TonClass c = classify(s, b);
        if (c.kind != TonKind::single_ton) continue;
        resolved_.add(c.position, c.coefficient);
        subtract(c.position, c.coefficient);
        ++steps_;
        progress = true;
      }
    }
  }
  // Back-substitution: each resolved coefficient is corrected by the residual
  // it leaves in every stage, weighted by that stage's bucket count.
  for (int sweep = 0; sweep < 2; ++sweep) {
    for (const Index f : resolved_.positions()) {
      cplx corr;
      double weight = 0.0;
      for (const Stage& st : stages_) {
        const auto b = static_cast<std::size_t>(mod(f, st.buckets));
        cplx r;
        for (std::size_t i = 0; i < st.shifts.size(); ++i) r += st.values[i][b] * fft::omega(-(st.shifts[i] * f % n_), n_);
        r /= static_cast<double>(st.shifts.size());
        const auto w = static_cast<double>(st.buckets * static_cast<Index>(st.shifts.size()));
        corr += w * r;
        weight += w;
      }
      corr /= weight;
      resolved_.add(f, corr);
      subtract(f, corr);
    }
  }
  for (std::size_t s = 0; s < stages_.size(); ++s) {
    for (Index b = 0; b < stages_[s].buckets; ++b) {
      if (classify(s, b).kind != TonKind::zero_ton) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace sfft
