#include "sfft/frameworks.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "sfft/bucketize.hpp"
#include "sfft/dsp.hpp"
#include "sfft/error.hpp"
#include "sfft/fft.hpp"

namespace sfft {

namespace {

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

PermutationParams random_permutation(std::mt19937_64& rng, Index n) {
  std::uniform_int_distribution<Index> any(0, n - 1);
  PermutationParams p;
  do {
    p.sigma = any(rng);
  } while (gcd(p.sigma, n) != 1);
  p.tau = any(rng);
  p.b_prime = any(rng);
  return p;
}

// Shifts 8, 64, ... up to `limit`, used to sharpen a phase estimate.
std::vector<Index> refinement_shifts(Index limit) {
  std::vector<Index> out;
  for (Index t = 8; t <= limit; t *= 8) out.push_back(t);
  return out;
}

// Sharpens a frequency estimate with measurements at growing shifts: at shift
// T the phase of y_T / y_0 fixes T f / n modulo 1, and the previous estimate
// picks the branch.
double refine_frequency(double f, cplx y0, const std::vector<cplx>& ys, const std::vector<Index>& shifts,
                        Index n) {
  const double span = static_cast<double>(n);
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    const auto t = static_cast<double>(shifts[i]);
    const double phi = -std::arg(ys[i] / y0) / (2.0 * std::numbers::pi);
    const double wraps = std::round(t * f / span - phi);
    f = (phi + wraps) * span / t;
  }
  return f;
}

SparseSpectrum finish(SparseSpectrum s, Index k) { return s.top_k(static_cast<std::size_t>(std::max<Index>(k, 0))); }

}  // namespace

// One flat filter with its measurement schedule for the iterative framework.
struct IterLevel {
  WindowFilter filter;
  std::vector<Index> shifts;
  std::vector<Index> refine_index;  // positions of refinement shifts in `shifts`
};

struct SparseFFT::State {
  Index buckets = 0;
  WindowFilter flat;
  Index prestage_buckets = 0;
  std::vector<IterLevel> levels;     // iterative, bucket counts descending
  std::vector<Index> stage_buckets;  // peeling
};

namespace {

IterLevel make_level(Index n, Index buckets, const AlgorithmConfig& cfg, bool first) {
  IterLevel lv;
  const Index support = cfg.support > 0 && first ? cfg.support : default_flat_support(n, buckets);
  const double sigma = cfg.gauss_sigma > 0 && first ? cfg.gauss_sigma : default_gauss_sigma(n, buckets);
  lv.filter = make_flat_filter(n, buckets, support, sigma);
  const Index width = n / buckets;
  if (cfg.location == LocationMethod::phase) {
    lv.shifts = {0, 1};
    if (cfg.refine) {
      for (const Index t : refinement_shifts(n / 16)) {
        lv.refine_index.push_back(static_cast<Index>(lv.shifts.size()));
        lv.shifts.push_back(t);
      }
    }
    return lv;
  }
  const Index l = cfg.location == LocationMethod::binary ? 2 : cfg.branching;
  Index p = 1;
  while (p < width) p *= l;
  if (p != width) throw Error(ErrorKind::ConfigMismatch, "bucket width must be a power of the branching factor");
  lv.shifts = {0};
  for (Index m = l; m <= width; m *= l) {
    for (Index j = 1; j < l; ++j) lv.shifts.push_back(j * (n / m));
  }
  std::sort(lv.shifts.begin(), lv.shifts.end());
  lv.shifts.erase(std::unique(lv.shifts.begin(), lv.shifts.end()), lv.shifts.end());
  return lv;
}

}  // namespace

SparseFFT::SparseFFT(Index n, Index k, AlgorithmConfig cfg)
    : n_(n), k_(k), cfg_(std::move(cfg)), state_(std::make_unique<State>()) {
  if (k < 0 || k > n) throw Error(ErrorKind::InvalidParameter, "sparsity must lie in [0, n]");
  cfg_.validate(n);
  const AlgorithmConfig defaults = default_config(cfg_.framework, n, k);
  State& st = *state_;
  st.buckets = cfg_.buckets > 0 ? cfg_.buckets : defaults.buckets;

  switch (cfg_.framework) {
    case Framework::one_shot:
      if (n / st.buckets < 2 * cfg_.a_max) {
        throw Error(ErrorKind::ConfigMismatch, "bucket width too small for 2 a_max shifts");
      }
      break;
    case Framework::voting: {
      const Index support = cfg_.support > 0 ? cfg_.support : default_flat_support(n, st.buckets);
      const double sigma = cfg_.gauss_sigma > 0 ? cfg_.gauss_sigma : default_gauss_sigma(n, st.buckets);
      st.flat = make_flat_filter(n, st.buckets, support, sigma);
      if (cfg_.prestage) {
        Index b = cfg_.prestage_buckets;
        if (b == 0) {
          const auto target = static_cast<Index>(
              std::ceil(0.5 * std::sqrt(static_cast<double>(n) * static_cast<double>(std::max<Index>(k, 1)))));
          b = n;
          for (Index d = std::min(target, n); d <= n; ++d) {
            if (n % d == 0) {
              b = d;
              break;
            }
          }
        }
        st.prestage_buckets = b;
      }
      break;
    }
    case Framework::iterative: {
      st.levels.push_back(make_level(n, st.buckets, cfg_, true));
      if (cfg_.adaptive_buckets) {
        const Index factor = cfg_.location == LocationMethod::multiscale ? cfg_.branching : 4;
        for (Index b = st.buckets / factor; b >= 16 && st.buckets % b == 0; b /= factor) {
          st.levels.push_back(make_level(n, b, cfg_, false));
        }
      }
      break;
    }
    case Framework::peeling:
      if (!cfg_.stage_buckets.empty()) {
        st.stage_buckets = cfg_.stage_buckets;
      } else {
        st.stage_buckets = peeling_stage_buckets(n, cfg_.factors.empty() ? defaults.factors : cfg_.factors);
      }
      break;
    case Framework::dense:
      break;
  }
}

SparseFFT::~SparseFFT() = default;
SparseFFT::SparseFFT(SparseFFT&&) noexcept = default;
SparseFFT& SparseFFT::operator=(SparseFFT&&) noexcept = default;

namespace {

RecoveryResult oneshot_impl(const TimeSignal& x, Index k, const AlgorithmConfig& cfg, Index buckets) {
  const Index n = x.size();
  RecoveryResult out;
  out.spectrum = SparseSpectrum(n);
  out.iterations = 1;
  const int shifts_count = 2 * cfg.a_max;
  std::vector<std::vector<cplx>> y;
  std::vector<Index> shifts;
  for (int s = 0; s < shifts_count; ++s) {
    y.push_back(bucketize_spike(x, buckets, s).values);
    shifts.push_back(s);
  }

  std::vector<MomentSequence> sets;
  std::vector<double> means;
  for (Index b = 0; b < buckets; ++b) {
    MomentSequence ms{b, n, cfg.a_max, {}};
    double mean = 0.0;
    for (int s = 0; s < shifts_count; ++s) {
      ms.moments.push_back(y[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)]);
      mean += std::abs(ms.moments.back());
    }
    means.push_back(mean / shifts_count);
    sets.push_back(std::move(ms));
  }
  const double peak = *std::max_element(means.begin(), means.end());
  const double floor = std::max(cfg.noise_factor * median_of(means), 1e-9 * peak);

  std::vector<MomentSequence> active;
  for (Index b = 0; b < buckets; ++b) {
    if (means[static_cast<std::size_t>(b)] >= floor && means[static_cast<std::size_t>(b)] > 0.0) {
      active.push_back(sets[static_cast<std::size_t>(b)]);
    }
  }
  if (active.empty()) {
    out.converged = true;
    out.samples_read = x.samples_read();
    return out;
  }
  const std::vector<int> counts = count_collisions(active, cfg.a_max);

  bool all_resolved = true;
  for (std::size_t i = 0; i < active.size(); ++i) {
    const MomentSequence& ms = active[i];
    const CandidateSet cand = CandidateSet::residue_class(n, ms.bucket, buckets);
    const int a0 = std::clamp(counts[i], 1, cfg.a_max);
    std::vector<int> order;
    for (int a = a0; a >= 1; --a) order.push_back(a);
    for (int a = a0 + 1; a <= cfg.a_max; ++a) order.push_back(a);

    double best_resid = std::numeric_limits<double>::infinity();
    std::vector<Index> best_pos;
    std::vector<cplx> best_coef;
    bool accepted = false;
    for (const int a : order) {
      try {
        const std::vector<Index> roots = locate_prony(ms, a, cand);
        std::vector<Index> pool;
        for (const Index r : roots) {
          for (const Index d : {Index{0}, buckets, -buckets, 2 * buckets, -2 * buckets}) pool.push_back(mod(r + d, n));
        }
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        auto [pos, coef] = estimate_prony_pursuit(pool, ms.moments, shifts, n, a);
        double resid = 0.0;
        for (int s = 0; s < shifts_count; ++s) {
          cplx model;
          for (std::size_t j = 0; j < pos.size(); ++j) model += coef[j] * fft::omega(s * pos[j], n);
          resid += std::norm(ms.moments[static_cast<std::size_t>(s)] - model);
        }
        resid = std::sqrt(resid / shifts_count);
        if (resid < best_resid) {
          best_resid = resid;
          best_pos = pos;
          best_coef = coef;
        }
        if (resid <= floor) {
          accepted = true;
          break;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularMomentMatrix && e.kind() != ErrorKind::RankDeficient) throw;
      }
    }
    if (!accepted) all_resolved = false;
    for (std::size_t j = 0; j < best_pos.size(); ++j) out.spectrum.add(best_pos[j], best_coef[j]);
  }
  out.spectrum = finish(std::move(out.spectrum), k);
  out.converged = all_resolved;
  if (!all_resolved) out.note = "unresolved buckets";
  out.samples_read = x.samples_read();
  return out;
}

RecoveryResult voting_impl(const TimeSignal& x, Index k, const AlgorithmConfig& cfg, const SparseFFT::State& st) {
  const Index n = x.size();
  RecoveryResult out;
  out.spectrum = SparseSpectrum(n);
  if (cfg.rounds == 0) {
    out.converged = false;
    out.note = "no voting rounds";
    return out;
  }
  if (k == 0) {
    out.converged = true;
    return out;
  }
  std::mt19937_64 rng(cfg.seed);
  const auto heavy = static_cast<std::size_t>(2 * k);

  std::vector<Index> candidates;
  if (st.prestage_buckets > 0) {
    // Two shifts so that tones sharing a residue cannot cancel in both.
    const BucketSet pre0 = bucketize_spike(x, st.prestage_buckets, 0);
    const BucketSet pre1 = bucketize_spike(x, st.prestage_buckets, 1);
    std::vector<cplx> energy(pre0.values.size());
    for (std::size_t i = 0; i < energy.size(); ++i) {
      energy[i] = std::sqrt(std::norm(pre0.values[i]) + std::norm(pre1.values[i]));
    }
    for (const Index r : heavy_buckets(energy, heavy)) {
      for (Index f = r; f < n; f += st.prestage_buckets) candidates.push_back(f);
    }
    std::sort(candidates.begin(), candidates.end());
    if (candidates.empty()) {
      out.converged = true;
      out.samples_read = x.samples_read();
      return out;
    }
  }

  std::vector<VoteRound> rounds;
  for (int r = 0; r < cfg.rounds; ++r) {
    const PermutationParams perm = random_permutation(rng, n);
    rounds.push_back({bucketize_flat(x, st.flat, perm), HashMapView::for_filter(st.flat, perm), heavy, 0.0});
  }
  out.iterations = cfg.rounds;
  const VoteTable table = vote_tally(rounds, candidates);
  const auto selected = select_by_votes(table, static_cast<std::size_t>(4 * k), cfg.min_vote_fraction);

  // Per-round estimates, median of real and imaginary parts. Later passes
  // first remove the other selected tones from each bucket value.
  const Index width = st.flat.bucket_width;
  auto estimate = [&](const SparseSpectrum* others) {
    SparseSpectrum est(n);
    for (const Index f : selected) {
      std::vector<double> re, im;
      for (const VoteRound& round : rounds) {
        const PermutationParams& perm = round.buckets.perm;
        const Index kb = round.hash.bucket_of(f);
        cplx value = round.buckets.values[static_cast<std::size_t>(kb)];
        if (others) {
          for (const auto& [g, v] : others->entries()) {
            if (g == f) continue;
            const Index b = perm.permuted_position(g, n);
            value -= st.flat.response(kb * width - b) * v * perm.phase(g, n);
          }
        }
        try {
          const cplx v = estimate_energy(value, f, st.flat, perm, 0, cfg.response_floor);
          re.push_back(v.real());
          im.push_back(v.imag());
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NearZeroResponse) throw;
        }
      }
      if (!re.empty()) est.set(f, {median_of(re), median_of(im)});
    }
    return est;
  };
  SparseSpectrum current = finish(estimate(nullptr), k);
  for (int pass = 0; pass < 4; ++pass) current = finish(estimate(&current), k);
  out.spectrum = std::move(current);
  out.converged = true;
  out.samples_read = x.samples_read();
  return out;
}

struct Measurement {
  PermutationParams perm;
  const IterLevel* level = nullptr;
  std::vector<std::vector<cplx>> values;  // [shift][bucket]
  double weight = 1.0;
};

// Joint least squares over every stored bucket measurement for the given support.
void refine_coefficients(SparseSpectrum& spectrum, const std::vector<Measurement>& meas) {
  const Index n = spectrum.n();
  const std::vector<Index> support = spectrum.positions();
  const auto cols = static_cast<Eigen::Index>(support.size());
  Eigen::Index rows = 0;
  for (const Measurement& m : meas) {
    rows += static_cast<Eigen::Index>(m.level->shifts.size()) * m.level->filter.num_buckets;
  }
  if (cols == 0 || rows < 2 * cols) return;
  Eigen::MatrixXcd a(rows, cols);
  Eigen::VectorXcd rhs(rows);
  Eigen::Index r = 0;
  for (const Measurement& m : meas) {
    const WindowFilter& filter = m.level->filter;
    const std::vector<Index>& shifts = m.level->shifts;
    const Index buckets = filter.num_buckets;
    const Index width = filter.bucket_width;
    std::vector<Index> permuted;
    std::vector<cplx> phase;
    for (const Index f : support) {
      permuted.push_back(m.perm.permuted_position(f, n));
      phase.push_back(m.perm.phase(f, n));
    }
    for (std::size_t s = 0; s < shifts.size(); ++s) {
      for (Index kb = 0; kb < buckets; ++kb, ++r) {
        rhs(r) = m.weight * m.values[s][static_cast<std::size_t>(kb)];
        for (Eigen::Index c = 0; c < cols; ++c) {
          const Index b = permuted[static_cast<std::size_t>(c)];
          a(r, c) = m.weight * filter.response(kb * width - b) * phase[static_cast<std::size_t>(c)] *
                    fft::omega(shifts[s] * b % n, n);
        }
      }
    }
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
  if (qr.rank() < cols) return;
  const Eigen::VectorXcd sol = qr.solve(rhs);
  for (Eigen::Index c = 0; c < cols; ++c) spectrum.set(support[static_cast<std::size_t>(c)], sol(c));
}

RecoveryResult iterative_impl(const TimeSignal& x, Index k, const AlgorithmConfig& cfg, const SparseFFT::State& st) {
  const Index n = x.size();
  RecoveryResult out;
  out.spectrum = SparseSpectrum(n);
  if (k == 0) {
    out.converged = true;
    return out;
  }

  std::mt19937_64 rng(cfg.seed);
  SparseSpectrum recovered(n);
  std::vector<Measurement> history;
  double scale = 0.0;

  for (int it = 1; it <= cfg.max_iterations; ++it) {
    out.iterations = it;
    const auto remaining = std::max<Index>(k - static_cast<Index>(recovered.size()), 1);
    const IterLevel* level = &st.levels.front();
    for (const IterLevel& lv : st.levels) {
      if (lv.filter.num_buckets >= std::max(4 * remaining, k)) level = &lv;
    }
    const WindowFilter& filter = level->filter;
    const Index buckets = filter.num_buckets;
    const Index width = filter.bucket_width;
    const std::vector<Index>& shifts = level->shifts;
    std::vector<Index> refine_shift_values;
    for (const Index i : level->refine_index) refine_shift_values.push_back(shifts[static_cast<std::size_t>(i)]);
    Measurement m{random_permutation(rng, n), level, {}};
    for (const Index s : shifts) m.values.push_back(bucketize_flat(x, filter, m.perm, s).values);
    history.push_back(m);

    // Remove the contribution of everything recovered so far.
    std::vector<std::vector<cplx>> y = m.values;
    for (const auto& [f, v] : recovered.entries()) {
      const Index b = m.perm.permuted_position(f, n);
      const cplx c = v * m.perm.phase(f, n);
      for (std::size_t s = 0; s < shifts.size(); ++s) {
        const cplx cs = c * fft::omega(shifts[s] * b % n, n);
        for (Index kb = 0; kb < buckets; ++kb) y[s][static_cast<std::size_t>(kb)] -= filter.response(kb * width - b) * cs;
      }
    }

    std::vector<double> mags;
    double energy = 0.0;
    for (const cplx& v : y[0]) {
      mags.push_back(std::abs(v));
      energy += std::norm(v);
    }
    if (it == 1) scale = *std::max_element(mags.begin(), mags.end());
    const double med = median_of(mags);
    const double floor = std::max(cfg.noise_factor * med, 1e-10 * scale);
    history.back().weight = 1.0 / std::max(med, 1e-9 * scale);
    // Residual energy at the level expected from noise alone means nothing is left.
    const double noise_energy = static_cast<double>(buckets) * med * med / std::log(2.0);
    if (energy <= 1.5 * noise_energy || energy <= 1e-20 * scale * scale || scale == 0.0) {
      out.converged = true;
      break;
    }

    std::map<Index, std::pair<cplx, double>> found;
    for (Index kb = 0; kb < buckets; ++kb) {
      const auto ku = static_cast<std::size_t>(kb);
      const cplx y0 = y[0][ku];
      if (std::abs(y0) < floor || std::abs(y0) == 0.0) continue;
      const CandidateSet passband = CandidateSet::contiguous(n, kb * width - width / 2, width);
      Index b = 0;
      try {
        if (cfg.location == LocationMethod::phase) {
          b = locate_phase(y0, y[1][ku], passband);
          if (!refine_shift_values.empty()) {
            std::vector<cplx> ys;
            for (const Index i : level->refine_index) ys.push_back(y[static_cast<std::size_t>(i)][ku]);
            b = passband.nearest(refine_frequency(static_cast<double>(b), y0, ys, refine_shift_values, n));
          }
        } else {
          const Index l = cfg.location == LocationMethod::binary ? 2 : cfg.branching;
          auto value_at = [&](Index shift) {
            const auto pos = std::lower_bound(shifts.begin(), shifts.end(), shift) - shifts.begin();
            return y[static_cast<std::size_t>(pos)][ku];
          };
          const SubBucketizer sub = [&](Index residue, Index modulus) {
            cplx acc;
            for (Index j = 0; j < l; ++j) {
              const Index shift = j * (n / modulus);
              acc += value_at(shift) * fft::omega(-(shift * mod(residue, n) % n), n);
            }
            return acc / static_cast<double>(l);
          };
          const SearchResult res = cfg.location == LocationMethod::binary
                                       ? locate_binary_search(sub, width, floor)
                                       : locate_multiscale(sub, width, l, floor);
          const Index start = kb * width - width / 2;
          b = mod(start + mod(res.residue - start, width), n);
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::AmbiguousSplit && e.kind() != ErrorKind::ZeroTonBucket) throw;
        continue;
      }

      cplx v;
      for (std::size_t s = 0; s < shifts.size(); ++s) v += y[s][ku] * fft::omega(-(shifts[s] * b % n), n);
      v /= static_cast<double>(shifts.size());
      double worst = 0.0;
      for (std::size_t s = 0; s < shifts.size(); ++s) {
        worst = std::max(worst, std::abs(y[s][ku] - v * fft::omega(shifts[s] * b % n, n)));
      }
      if (worst > std::max(floor, 1e-2 * std::abs(v))) continue;

      const cplx gain = filter.response(kb * width - b);
      if (std::abs(gain) < cfg.response_floor) continue;
      const Index f = m.perm.original_position(b, n);
      const cplx coef = v / (gain * m.perm.phase(f, n));
      auto it_found = found.find(f);
      if (it_found == found.end() || it_found->second.second < std::abs(gain)) {
        found[f] = {coef, std::abs(gain)};
      }
    }
    for (const auto& [f, entry] : found) recovered.add(f, entry.first);
    if (!found.empty()) {
      refine_coefficients(recovered, history);
      recovered.prune(0.5 * floor);
    }
  }

  recovered.prune(1e-12 * std::max(scale, 1e-300));
  refine_coefficients(recovered, history);
  out.spectrum = finish(std::move(recovered), k);
  if (!out.converged) out.note = "iteration cap reached";
  out.samples_read = x.samples_read();
  return out;
}

RecoveryResult dense_impl(const TimeSignal& x, Index k) {
  RecoveryResult out;
  const auto dense = dft_dense(x);
  out.spectrum = finish(SparseSpectrum::from_dense(dense, 0.0), k);
  out.converged = true;
  out.iterations = 1;
  out.samples_read = x.samples_read();
  return out;
}

}  // namespace

RecoveryResult SparseFFT::run(const TimeSignal& x) const {
  if (x.size() != n_) throw Error(ErrorKind::LengthMismatch, "signal length differs from the configured n");
  switch (cfg_.framework) {
    case Framework::one_shot: return oneshot_impl(x, k_, cfg_, state_->buckets);
    case Framework::voting: return voting_impl(x, k_, cfg_, *state_);
    case Framework::iterative: return iterative_impl(x, k_, cfg_, *state_);
    case Framework::peeling: {
      RecoveryResult out;
      PeelingDecoder dec(x, state_->stage_buckets, cfg_);
      out.converged = dec.decode(k_);
      out.spectrum = finish(dec.resolved(), k_);
      out.iterations = dec.steps();
      out.samples_read = x.samples_read();
      if (!out.converged) out.note = "stuck decoder";
      return out;
    }
    case Framework::dense: return dense_impl(x, k_);
  }
  return {};
}

namespace {

RecoveryResult run_checked(const TimeSignal& x, Index k, const AlgorithmConfig& cfg, Framework expected) {
  if (cfg.framework != expected) {
    throw Error(ErrorKind::ConfigMismatch,
                "config is for " + std::string(to_string(cfg.framework)) + ", not " + std::string(to_string(expected)));
  }
  return SparseFFT(x.size(), k, cfg).run(x);
}

}  // namespace

RecoveryResult run_oneshot(const TimeSignal& x, Index k, const AlgorithmConfig& cfg) {
  return run_checked(x, k, cfg, Framework::one_shot);
}
RecoveryResult run_voting(const TimeSignal& x, Index k, const AlgorithmConfig& cfg) {
  return run_checked(x, k, cfg, Framework::voting);
}
RecoveryResult run_iterative(const TimeSignal& x, Index k, const AlgorithmConfig& cfg) {
  return run_checked(x, k, cfg, Framework::iterative);
}
RecoveryResult run_peeling(const TimeSignal& x, Index k, const AlgorithmConfig& cfg) {
  return run_checked(x, k, cfg, Framework::peeling);
}
RecoveryResult run_dense(const TimeSignal& x, Index k) { return dense_impl(x, k); }
RecoveryResult run_algorithm(const TimeSignal& x, Index k, const AlgorithmConfig& cfg) {
  return SparseFFT(x.size(), k, cfg).run(x);
}

bool l2_guarantee_check(const std::vector<cplx>& dense_truth, const SparseSpectrum& result, Index k, double c) {
  const SparseSpectrum best = SparseSpectrum::from_dense(dense_truth).top_k(static_cast<std::size_t>(std::max<Index>(k, 0)));
  double tail = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i < dense_truth.size(); ++i) {
    const auto f = static_cast<Index>(i);
    tail += std::norm(dense_truth[i] - best.get(f));
    err += std::norm(dense_truth[i] - result.get(f));
  }
  tail = std::sqrt(tail);
  err = std::sqrt(err);
  if (tail <= 1e-12) return err <= 1e-6;
  return err <= c * tail;
}

}  // namespace sfft
