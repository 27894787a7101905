#include "sfft/reconstruct.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "sfft/error.hpp"
#include "sfft/fft.hpp"

namespace sfft {

namespace {

using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;

double circular_distance(double a, double b, Index n) {
  const double span = static_cast<double>(n);
  double d = std::fmod(std::abs(a - b), span);
  return std::min(d, span - d);
}

MatrixC hankel(const MomentSequence& ms, int a) {
  MatrixC m(a, a);
  for (int r = 0; r < a; ++r) {
    for (int c = 0; c < a; ++c) m(r, c) = ms.moments[static_cast<std::size_t>(r + c)];
  }
  return m;
}

MatrixC vandermonde(const std::vector<Index>& positions, const std::vector<Index>& shifts, Index n) {
  MatrixC v(static_cast<Eigen::Index>(shifts.size()), static_cast<Eigen::Index>(positions.size()));
  for (std::size_t r = 0; r < shifts.size(); ++r) {
    for (std::size_t c = 0; c < positions.size(); ++c) {
      v(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          fft::omega(mod(shifts[r], n) * mod(positions[c], n) % n, n);
    }
  }
  return v;
}

VectorC to_vector(const std::vector<cplx>& values) {
  VectorC v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return v;
}

}  // namespace

bool CandidateSet::contains(Index f) const {
  const Index d = mod(f - start, n);
  return d % stride == 0 && d / stride < count;
}

Index CandidateSet::nearest(double f) const {
  const double span = static_cast<double>(n);
  double d = std::fmod(f - static_cast<double>(start), span);
  if (d < 0) d += span;
  const auto j0 = static_cast<Index>(std::floor(d / static_cast<double>(stride)));
  const bool full_circle = stride * count == n;

  std::vector<Index> options{j0, j0 + 1};
  if (!full_circle) {
    options.push_back(0);
    options.push_back(count - 1);
  }
  Index best = -1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (Index j : options) {
    j = full_circle ? mod(j, count) : std::clamp<Index>(j, 0, count - 1);
    const Index cand = at(j);
    const double dist = circular_distance(static_cast<double>(cand), f, n);
    if (dist < best_dist - 1e-9 || (std::abs(dist - best_dist) <= 1e-9 && cand < best)) {
      best = cand;
      best_dist = dist;
    }
  }
  return best;
}

Index locate_phase(cplx y0, cplx y1, const CandidateSet& candidates, double threshold) {
  if (std::abs(y0) < threshold) throw Error(ErrorKind::ZeroTonBucket, "bucket value below threshold");
  const double f = -std::arg(y1 / y0) * static_cast<double>(candidates.n) / (2.0 * std::numbers::pi);
  return candidates.nearest(f);
}

double moment_frequency(const std::vector<cplx>& moments, Index n) {
  cplx acc;
  for (std::size_t k = 1; k < moments.size(); ++k) acc += moments[k] * std::conj(moments[k - 1]);
  double f = -std::arg(acc) * static_cast<double>(n) / (2.0 * std::numbers::pi);
  if (f < 0) f += static_cast<double>(n);
  return f;
}

std::vector<Index> heavy_buckets(const std::vector<cplx>& values, std::size_t count, double min_magnitude) {
  std::vector<Index> order;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::abs(values[i]) > min_magnitude) order.push_back(static_cast<Index>(i));
  }
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return std::abs(values[static_cast<std::size_t>(a)]) > std::abs(values[static_cast<std::size_t>(b)]);
  });
  if (order.size() > count) order.resize(count);
  return order;
}

VoteTable vote_tally(const std::vector<VoteRound>& rounds, const std::vector<Index>& candidates) {
  VoteTable table;
  for (const VoteRound& round : rounds) {
    ++table.rounds;
    const auto heavy = heavy_buckets(round.buckets.values, round.heavy_count, round.min_magnitude);
    if (candidates.empty()) {
      for (const Index k : heavy) {
        for (const Index f : round.hash.preimage(k)) ++table.score[f];
      }
      continue;
    }
    std::vector<std::uint8_t> is_heavy(round.buckets.values.size());
    for (const Index k : heavy) is_heavy[static_cast<std::size_t>(k)] = 1;
    for (const Index f : candidates) {
      if (is_heavy[static_cast<std::size_t>(round.hash.bucket_of(f))]) ++table.score[f];
    }
  }
  return table;
}

std::vector<Index> select_by_votes(const VoteTable& table, std::size_t keep, double min_fraction) {
  const double needed = min_fraction * static_cast<double>(table.rounds);
  std::vector<std::pair<Index, int>> passing;
  for (const auto& [f, score] : table.score) {
    if (score > 0 && static_cast<double>(score) >= needed) passing.emplace_back(f, score);
  }
  std::sort(passing.begin(), passing.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::vector<Index> out;
  for (std::size_t i = 0; i < passing.size() && i < keep; ++i) out.push_back(passing[i].first);
  return out;
}

SearchResult locate_binary_search(const SubBucketizer& sub, Index bucket_width, double noise_floor) {
  return locate_multiscale(sub, bucket_width, 2, noise_floor);
}

SearchResult locate_multiscale(const SubBucketizer& sub, Index bucket_width, Index branching,
                               double noise_floor) {
  if (branching < 2) throw Error(ErrorKind::InvalidParameter, "branching factor must be at least 2");
  Index levels = 0;
  for (Index p = 1; p < bucket_width; p *= branching) ++levels;
  Index check = 1;
  for (Index i = 0; i < levels; ++i) check *= branching;
  if (check != bucket_width) {
    throw Error(ErrorKind::NonDivisorParameter, "bucket width must be a power of the branching factor");
  }

  SearchResult result;
  Index step = 1;
  for (Index level = 0; level < levels; ++level) {
    const Index modulus = step * branching;
    double best = -1.0;
    double runner_up = -1.0;
    Index best_digit = 0;
    for (Index m = 0; m < branching; ++m) {
      const double mag = std::abs(sub(result.residue + m * step, modulus));
      if (mag > best) {
        runner_up = best;
        best = mag;
        best_digit = m;
      } else if (mag > runner_up) {
        runner_up = mag;
      }
    }
    if (best - runner_up < noise_floor) {
      throw Error(ErrorKind::AmbiguousSplit, "sub-buckets indistinguishable at level " + std::to_string(level));
    }
    result.residue += best_digit * step;
    result.digits.push_back(best_digit);
    step = modulus;
  }
  return result;
}

std::vector<std::vector<cplx>> hankel_matrix(const MomentSequence& ms, int a) {
  if (ms.moments.size() < static_cast<std::size_t>(2 * a - 1)) {
    throw Error(ErrorKind::InvalidParameter, "not enough moments for the Hankel matrix");
  }
  std::vector<std::vector<cplx>> out(static_cast<std::size_t>(a), std::vector<cplx>(static_cast<std::size_t>(a)));
  for (int r = 0; r < a; ++r) {
    for (int c = 0; c < a; ++c) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = ms.moments[static_cast<std::size_t>(r + c)];
  }
  return out;
}

std::vector<int> count_collisions(const std::vector<MomentSequence>& sets, int a_max) {
  std::vector<Eigen::VectorXd> per_bucket;
  std::vector<double> pool;
  double global_max = 0.0;
  for (const MomentSequence& ms : sets) {
    if (ms.moments.size() < static_cast<std::size_t>(2 * a_max - 1)) {
      throw Error(ErrorKind::InvalidParameter, "not enough moments for the Hankel matrix");
    }
    Eigen::JacobiSVD<MatrixC> svd(hankel(ms, a_max));
    per_bucket.push_back(svd.singularValues());
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
      pool.push_back(svd.singularValues()(i));
      global_max = std::max(global_max, svd.singularValues()(i));
    }
  }
  const std::size_t top = 2 * sets.size();
  double pooled_cut = -1.0;
  if (pool.size() > top) {
    std::nth_element(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(top - 1), pool.end(), std::greater<>());
    pooled_cut = pool[top - 1];
  }
  const double absolute_floor = std::max(1e-10 * global_max, std::numeric_limits<double>::min());

  std::vector<int> counts;
  for (const auto& sv : per_bucket) {
    const double own = sv.size() > 0 ? sv(0) : 0.0;
    int c = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      if (sv(i) >= pooled_cut && sv(i) > 0.1 * own && sv(i) > absolute_floor) ++c;
    }
    counts.push_back(c);
  }
  return counts;
}

std::vector<Index> locate_prony(const MomentSequence& ms, int a, const CandidateSet& candidates,
                                double max_condition) {
  if (a <= 0) return {};
  if (ms.moments.size() < static_cast<std::size_t>(2 * a)) {
    throw Error(ErrorKind::InvalidParameter, "Prony needs 2a moments");
  }
  const MatrixC m = hankel(ms, a);
  Eigen::JacobiSVD<MatrixC> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smallest = sv(a - 1);
  if (!(smallest > 0.0) || sv(0) / smallest > max_condition) {
    throw Error(ErrorKind::SingularMomentMatrix, "moment matrix M_" + std::to_string(a) + " is singular");
  }
  VectorC rhs(a);
  for (int r = 0; r < a; ++r) rhs(r) = -ms.moments[static_cast<std::size_t>(a + r)];
  const VectorC coeffs = svd.solve(rhs);

  // Roots of z^a + sum_j c_j z^j via the companion matrix.
  MatrixC companion = MatrixC::Zero(a, a);
  for (int r = 1; r < a; ++r) companion(r, r - 1) = 1.0;
  for (int r = 0; r < a; ++r) companion(r, a - 1) = -coeffs(r);
  Eigen::ComplexEigenSolver<MatrixC> eig(companion, false);

  std::vector<Index> positions;
  const double scale = static_cast<double>(ms.n) / (2.0 * std::numbers::pi);
  for (Eigen::Index i = 0; i < a; ++i) {
    const cplx z = eig.eigenvalues()(i);
    positions.push_back(candidates.nearest(-std::arg(z) * scale));
  }
  std::sort(positions.begin(), positions.end());
  return positions;
}

std::vector<cplx> estimate_prony(const std::vector<Index>& positions, const std::vector<cplx>& measurements,
                                 const std::vector<Index>& shifts, Index n) {
  if (measurements.size() != shifts.size()) {
    throw Error(ErrorKind::LengthMismatch, "one measurement per shift expected");
  }
  if (positions.empty()) return {};
  if (shifts.size() < positions.size()) {
    throw Error(ErrorKind::RankDeficient, "fewer measurements than unknown coefficients");
  }
  const MatrixC v = vandermonde(positions, shifts, n);
  Eigen::ColPivHouseholderQR<MatrixC> qr(v);
  qr.setThreshold(1e-10);
  if (qr.rank() < static_cast<Eigen::Index>(positions.size())) {
    throw Error(ErrorKind::RankDeficient, "Vandermonde system is rank deficient");
  }
  const VectorC sol = qr.solve(to_vector(measurements));
  return {sol.data(), sol.data() + sol.size()};
}

std::pair<std::vector<Index>, std::vector<cplx>> estimate_prony_pursuit(const std::vector<Index>& candidates,
                                                                       const std::vector<cplx>& measurements,
                                                                       const std::vector<Index>& shifts,
                                                                       Index n, int a) {
  if (measurements.size() != shifts.size()) {
    throw Error(ErrorKind::LengthMismatch, "one measurement per shift expected");
  }
  const int picks = std::min<int>(a, static_cast<int>(candidates.size()));
  if (picks <= 0) return {};
  const MatrixC dict = vandermonde(candidates, shifts, n);
  const VectorC y = to_vector(measurements);

  auto solve = [&](const std::vector<Eigen::Index>& cols, VectorC& sol) {
    MatrixC sub(dict.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i) sub.col(static_cast<Eigen::Index>(i)) = dict.col(cols[i]);
    Eigen::ColPivHouseholderQR<MatrixC> qr(sub);
    sol = qr.solve(y);
    if (qr.rank() < static_cast<Eigen::Index>(cols.size())) return std::numeric_limits<double>::infinity();
    return (y - sub * sol).norm();
  };

  // Exhaustive subset search when the pool is small, greedy selection otherwise.
  double combos = 1.0;
  for (int i = 0; i < picks; ++i) combos *= static_cast<double>(candidates.size() - static_cast<std::size_t>(i)) / (i + 1);
  std::vector<Eigen::Index> best_cols;
  VectorC best_sol;
  if (combos <= 5000.0) {
    double best = std::numeric_limits<double>::infinity();
    std::vector<Eigen::Index> cols(static_cast<std::size_t>(picks));
    for (int i = 0; i < picks; ++i) cols[static_cast<std::size_t>(i)] = i;
    const auto total = static_cast<Eigen::Index>(candidates.size());
    while (true) {
      VectorC sol;
      const double r = solve(cols, sol);
      if (r < best) {
        best = r;
        best_cols = cols;
        best_sol = sol;
      }
      int i = picks - 1;
      while (i >= 0 && cols[static_cast<std::size_t>(i)] == total - picks + i) --i;
      if (i < 0) break;
      ++cols[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < picks; ++j) cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (best_cols.empty()) throw Error(ErrorKind::RankDeficient, "no full-rank subset of candidates");
  } else {
    VectorC residual = y;
    for (int it = 0; it < picks; ++it) {
      Eigen::Index pick = -1;
      double best_corr = -1.0;
      for (Eigen::Index c = 0; c < dict.cols(); ++c) {
        if (std::find(best_cols.begin(), best_cols.end(), c) != best_cols.end()) continue;
        const double corr = std::abs(dict.col(c).dot(residual));
        if (corr > best_corr) {
          best_corr = corr;
          pick = c;
        }
      }
      best_cols.push_back(pick);
      solve(best_cols, best_sol);
      MatrixC sub(dict.rows(), static_cast<Eigen::Index>(best_cols.size()));
      for (std::size_t i = 0; i < best_cols.size(); ++i) sub.col(static_cast<Eigen::Index>(i)) = dict.col(best_cols[i]);
      residual = y - sub * best_sol;
    }
  }
  std::vector<Index> positions;
  for (const Eigen::Index c : best_cols) positions.push_back(candidates[static_cast<std::size_t>(c)]);
  return {positions, {best_sol.data(), best_sol.data() + best_sol.size()}};
}

TonClass classify_bucket(const MomentSequence& ms, double noise_floor, const CandidateSet& candidates,
                         double tolerance) {
  TonClass out;
  double mean_mag = 0.0;
  double max_mag = 0.0;
  for (const cplx& m : ms.moments) {
    mean_mag += std::abs(m);
    max_mag = std::max(max_mag, std::abs(m));
  }
  mean_mag /= static_cast<double>(std::max<std::size_t>(ms.moments.size(), 1));
  if (ms.moments.empty() || mean_mag < noise_floor || max_mag == 0.0) return out;

  const Index f = candidates.nearest(moment_frequency(ms.moments, ms.n));
  cplx p;
  for (std::size_t k = 0; k < ms.moments.size(); ++k) {
    p += ms.moments[k] * fft::omega(-static_cast<Index>(k) * f, ms.n);
  }
  p /= static_cast<double>(ms.moments.size());

  double worst = 0.0;
  for (std::size_t k = 0; k < ms.moments.size(); ++k) {
    worst = std::max(worst, std::abs(ms.moments[k] - p * fft::omega(static_cast<Index>(k) * f, ms.n)));
  }
  const double tol = std::max(tolerance < 0 ? noise_floor : tolerance, 1e-9 * max_mag);
  if (worst <= tol) {
    out.kind = TonKind::single_ton;
    out.position = f;
    out.coefficient = p;
    out.count = 1;
    return out;
  }
  out.kind = TonKind::multi_ton;
  out.count = ms.a_max > 0 ? std::max(2, count_collisions({ms}, ms.a_max).front()) : 2;
  return out;
}

TonClass classify_bucket(const MomentSequence& ms, double noise_floor) {
  return classify_bucket(ms, noise_floor, CandidateSet::all(ms.n));
}

cplx estimate_energy(cplx bucket_value, Index position, const WindowFilter& filter, const PermutationParams& perm,
                     Index shift, double response_floor) {
  const Index n = filter.n;
  cplx gain;
  switch (filter.kind) {
    case FilterKind::flat: {
      const HashMapView hash = HashMapView::for_filter(filter, perm);
      const Index b = perm.permuted_position(position, n);
      const Index k = hash.bucket_of(position);
      gain = filter.response(k * filter.bucket_width - b) * fft::omega(mod(shift, n) * b % n, n) *
             perm.phase(position, n);
      if (std::abs(filter.response(k * filter.bucket_width - b)) < response_floor) {
        throw Error(ErrorKind::NearZeroResponse, "filter gain too small at position " + std::to_string(position));
      }
      break;
    }
    case FilterKind::spike_train:
      gain = fft::omega(mod(shift, n) * mod(position, n) % n, n);
      break;
    case FilterKind::dirichlet_bank: {
      const HashMapView hash = HashMapView::for_filter(filter, {});
      const Index k = hash.bucket_of(position);
      const Index delta = position - filter.bank_center(k);
      const cplx h = filter.response(delta);
      if (std::abs(h) < response_floor) {
        throw Error(ErrorKind::NearZeroResponse, "filter gain too small at position " + std::to_string(position));
      }
      gain = h * fft::omega(-mod(delta, n) * mod(shift, n) % n, n);
      break;
    }
  }
  return bucket_value / gain;
}

SparseSpectrum estimate_formula(const TimeSignal& x, const std::vector<Index>& positions, Index sample_budget) {
  const Index n = x.size();
  SparseSpectrum out(n);
  if (positions.empty()) return out;
  if (sample_budget <= 0) throw Error(ErrorKind::InvalidParameter, "need at least one sample");
  const Index t = std::min(sample_budget, n);
  std::vector<Index> idx(static_cast<std::size_t>(t));
  std::vector<cplx> samples(static_cast<std::size_t>(t));
  for (Index i = 0; i < t; ++i) {
    idx[static_cast<std::size_t>(i)] = i * n / t;
    samples[static_cast<std::size_t>(i)] = x[i * n / t];
  }
  for (const Index f : positions) {
    cplx acc;
    for (std::size_t i = 0; i < idx.size(); ++i) acc += samples[i] * fft::omega(mod(f, n) * idx[i] % n, n);
    out.set(mod(f, n), acc / static_cast<double>(t));
  }
  return out;
}

cplx estimate_freqshift(const TimeSignal& x, Index f, Index t, std::uint64_t seed) {
  const Index n = x.size();
  if (t <= 0) throw Error(ErrorKind::InvalidParameter, "need at least one sample");
  cplx acc;
  if (t >= n) {
    for (Index j = 0; j < n; ++j) acc += x[j] * fft::omega(mod(f, n) * j % n, n);
    return acc / static_cast<double>(n);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  for (Index i = 0; i < t; ++i) {
    const Index j = pick(rng);
    acc += x[j] * fft::omega(mod(f, n) * j % n, n);
  }
  return acc / static_cast<double>(t);
}

double noise_floor_estimate(const std::vector<cplx>& values, double factor, double relative_floor) {
  if (values.empty()) return 0.0;
  std::vector<double> mags;
  mags.reserve(values.size());
  for (const cplx& v : values) mags.push_back(std::abs(v));
  const double peak = *std::max_element(mags.begin(), mags.end());
  auto mid = mags.begin() + static_cast<std::ptrdiff_t>(mags.size() / 2);
  std::nth_element(mags.begin(), mid, mags.end());
  return std::max(factor * *mid, relative_floor * peak);
}

}  // namespace sfft
