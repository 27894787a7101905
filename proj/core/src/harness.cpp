#include "sfft/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"
#include "sfft/dsp.hpp"
#include "sfft/error.hpp"

namespace sfft {

namespace {

std::mutex g_timing_mutex;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

void SignalSpec::validate() const {
  if (n < 2) throw Error(ErrorKind::InvalidSpec, "signal length must be at least 2");
  if (k < 0 || k > n) throw Error(ErrorKind::InvalidSpec, "sparsity must lie in [0, n]");
  if (snr_db && !std::isfinite(*snr_db)) throw Error(ErrorKind::InvalidSpec, "snr must be finite");
  if (!positions.empty()) {
    if (static_cast<Index>(positions.size()) != k) {
      throw Error(ErrorKind::InvalidSpec, "fixture positions must number exactly k");
    }
    if (!values.empty() && values.size() != positions.size()) {
      throw Error(ErrorKind::InvalidSpec, "fixture values must match positions");
    }
    std::set<Index> seen;
    for (const Index p : positions) {
      if (p < 0 || p >= n || !seen.insert(p).second) {
        throw Error(ErrorKind::InvalidSpec, "fixture positions must be distinct and in range");
      }
    }
  }
}

std::string SignalSpec::snr_label() const { return snr_db ? fmt_double(*snr_db) : "exact"; }

GeneratedSignal gen_signal(const SignalSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  std::vector<Index> positions = spec.positions;
  if (positions.empty() && spec.k > 0) {
    if (spec.k * 4 > spec.n) {
      std::vector<Index> all(static_cast<std::size_t>(spec.n));
      std::iota(all.begin(), all.end(), Index{0});
      for (Index i = 0; i < spec.k; ++i) {
        std::uniform_int_distribution<Index> pick(i, spec.n - 1);
        std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(pick(rng))]);
      }
      positions.assign(all.begin(), all.begin() + spec.k);
    } else {
      std::set<Index> chosen;
      std::uniform_int_distribution<Index> pick(0, spec.n - 1);
      while (static_cast<Index>(positions.size()) < spec.k) {
        const Index p = pick(rng);
        if (chosen.insert(p).second) positions.push_back(p);
      }
    }
  }

  GeneratedSignal out;
  out.tones = SparseSpectrum(spec.n);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const cplx v = spec.values.empty() ? std::polar(1.0, phase(rng)) : spec.values[i];
    out.tones.set(positions[i], v);
  }

  std::vector<cplx> samples = idft_dense(out.tones.to_dense());
  if (spec.snr_db) {
    // Signal power per sample equals the spectral energy under this DFT scaling.
    double power = 0.0;
    for (const auto& [f, v] : out.tones.entries()) power += std::norm(v);
    const double variance = power / std::pow(10.0, *spec.snr_db / 10.0);
    std::mt19937_64 noise_rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> gauss(0.0, std::sqrt(variance / 2.0));
    out.noise.resize(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      out.noise[i] = {gauss(noise_rng), gauss(noise_rng)};
      samples[i] += out.noise[i];
    }
  }
  out.signal = TimeSignal(std::move(samples));
  return out;
}

SignalSpec fixture_spec() {
  SignalSpec s;
  s.n = 2048;
  s.k = 4;
  s.positions = {64, 304, 610, 1660};
  s.values = {0.55, 0.7, 0.85, 1.0};
  return s;
}

ErrorMetrics compute_errors(const SparseSpectrum& reference, const SparseSpectrum& result, double tol0) {
  ErrorMetrics m;
  std::set<Index> support;
  for (const auto& [f, v] : reference.entries()) support.insert(f);
  for (const auto& [f, v] : result.entries()) support.insert(f);
  double sq = 0.0;
  for (const Index f : support) {
    const double d = std::abs(reference.get(f) - result.get(f));
    if (d > tol0) ++m.l0;
    m.l1 += d;
    sq += d * d;
  }
  const auto k = static_cast<double>(std::max<std::size_t>(reference.size(), 1));
  m.l1 /= k;
  m.l2 = std::sqrt(sq) / std::sqrt(k);
  return m;
}

ErrorMetrics compute_errors(const std::vector<cplx>& dense_truth, const SparseSpectrum& result, Index k,
                            double tol0) {
  SparseSpectrum reference = SparseSpectrum::from_dense(dense_truth).top_k(static_cast<std::size_t>(std::max<Index>(k, 0)));
  ErrorMetrics m = compute_errors(reference, result, tol0);
  // Normalize by the requested k even when the reference has fewer nonzeros.
  const auto kk = static_cast<double>(std::max<Index>(k, 1));
  const auto have = static_cast<double>(std::max<std::size_t>(reference.size(), 1));
  m.l1 *= have / kk;
  m.l2 *= std::sqrt(have / kk);
  return m;
}

std::string csv_header() {
  return "algorithm,n,k,snr_db,seed,runtime_s,sampling_fraction,l0,l1,l2,converged,config_digest";
}

std::string BenchRecord::csv_row() const {
  return algorithm + "," + std::to_string(spec.n) + "," + std::to_string(spec.k) + "," + spec.snr_label() + "," +
         std::to_string(spec.seed) + "," + fmt_double(runtime_seconds) + "," + fmt_double(sampling_fraction) + "," +
         std::to_string(errors.l0) + "," + fmt_double(errors.l1) + "," + fmt_double(errors.l2) + "," +
         (converged ? "true" : "false") + "," + config_digest;
}

std::string BenchRecord::to_json() const {
  nlohmann::ordered_json j;
  j["algorithm"] = algorithm;
  j["n"] = spec.n;
  j["k"] = spec.k;
  j["snr_db"] = spec.snr_label();
  j["seed"] = spec.seed;
  j["runtime_s"] = runtime_seconds;
  j["sampling_fraction"] = sampling_fraction;
  j["samples_read"] = samples_read;
  j["l0"] = errors.l0;
  j["l1"] = errors.l1;
  j["l2"] = errors.l2;
  j["converged"] = converged;
  j["iterations"] = iterations;
  j["l2_guarantee"] = l2_guarantee;
  j["config_digest"] = config_digest;
  if (!note.empty()) j["note"] = note;
  return j.dump(2);
}

std::string algorithm_id(const AlgorithmConfig& cfg) { return std::string(to_string(cfg.framework)); }

BenchRecord run_experiment(const AlgorithmConfig& cfg, const SignalSpec& spec, int repeats) {
  BenchRecord rec;
  rec.algorithm = algorithm_id(cfg);
  rec.spec = spec;
  rec.config_digest = cfg.digest();
  if (repeats < 1) throw Error(ErrorKind::InvalidParameter, "repeats must be at least 1");

  GeneratedSignal gen;
  try {
    gen = gen_signal(spec);
  } catch (const Error& e) {
    rec.note = e.what();
    return rec;
  }
  const std::vector<cplx> truth = dft_dense(gen.signal.raw());

  RecoveryResult result;
  result.spectrum = SparseSpectrum(spec.n);
  try {
    const SparseFFT plan(spec.n, spec.k, cfg);
    std::vector<double> times;
    for (int r = 0; r < repeats; ++r) {
      const TimeSignal copy = gen.signal.fresh_copy();
      std::lock_guard<std::mutex> lock(g_timing_mutex);
      const auto t0 = std::chrono::steady_clock::now();
      result = plan.run(copy);
      const auto t1 = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
    rec.runtime_seconds = times[times.size() / 2];
    rec.converged = result.converged;
    rec.note = result.note;
  } catch (const Error& e) {
    rec.converged = false;
    rec.note = std::string(to_string(e.kind())) + ": " + e.what();
  }
  rec.samples_read = result.samples_read;
  rec.sampling_fraction = static_cast<double>(result.samples_read) / static_cast<double>(spec.n);
  rec.iterations = result.iterations;
  rec.errors = compute_errors(truth, result.spectrum, spec.k);
  rec.l2_guarantee = l2_guarantee_check(truth, result.spectrum, spec.k, 2.0);
  return rec;
}

SweepKind sweep_kind_from_string(std::string_view s) {
  if (s == "n" || s == "n_sweep") return SweepKind::n_sweep;
  if (s == "k" || s == "k_sweep") return SweepKind::k_sweep;
  if (s == "snr" || s == "snr_sweep") return SweepKind::snr_sweep;
  throw Error(ErrorKind::ConfigMismatch, "unknown sweep kind '" + std::string(s) + "'");
}

std::string_view to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::n_sweep: return "n_sweep";
    case SweepKind::k_sweep: return "k_sweep";
    case SweepKind::snr_sweep: return "snr_sweep";
  }
  return "n_sweep";
}

std::vector<double> default_grid(SweepKind kind) {
  std::vector<double> g;
  switch (kind) {
    case SweepKind::n_sweep:
      for (int e = 10; e <= 18; ++e) g.push_back(std::ldexp(1.0, e));
      break;
    case SweepKind::k_sweep:
      g = {2, 4, 8, 16, 32, 48, 64};
      break;
    case SweepKind::snr_sweep:
      for (int s = -20; s <= 60; s += 10) g.push_back(s);
      break;
  }
  return g;
}

Index coprime_length_near(Index n) {
  static const Index table[] = {20, 105, 315, 1155, 2145, 4095, 8415, 15015, 32760, 65520, 131040, 262080, 524160};
  Index best = table[0];
  double best_d = std::numeric_limits<double>::infinity();
  for (const Index t : table) {
    const double d = std::abs(std::log(static_cast<double>(t)) - std::log(static_cast<double>(n)));
    if (d < best_d) {
      best_d = d;
      best = t;
    }
  }
  return best;
}

std::vector<BenchRecord> run_sweep(SweepKind kind, const std::vector<double>& grid,
                                   const std::vector<AlgorithmConfig>& configs, const SweepOptions& options,
                                   const std::filesystem::path& out) {
  if (grid.empty()) throw Error(ErrorKind::InvalidParameter, "sweep grid is empty");
  struct Cell {
    AlgorithmConfig cfg;
    SignalSpec spec;
  };
  std::vector<Cell> cells;
  for (const double g : grid) {
    for (int t = 0; t < std::max(options.trials, 1); ++t) {
      for (const AlgorithmConfig& cfg : configs) {
        SignalSpec spec = options.base;
        spec.seed = options.base.seed + static_cast<std::uint64_t>(t);
        spec.positions.clear();
        spec.values.clear();
        switch (kind) {
          case SweepKind::n_sweep: spec.n = static_cast<Index>(std::llround(g)); break;
          case SweepKind::k_sweep: spec.k = static_cast<Index>(std::llround(g)); break;
          case SweepKind::snr_sweep:
            if (std::isnan(g)) {
              spec.snr_db.reset();
            } else {
              spec.snr_db = g;
            }
            break;
        }
        const bool pow2 = spec.n > 0 && (spec.n & (spec.n - 1)) == 0;
        AlgorithmConfig cell_cfg = cfg;
        if (cfg.framework == Framework::peeling && pow2) {
          spec.n = coprime_length_near(spec.n);
          cell_cfg.factors.clear();
          cell_cfg.stage_buckets.clear();
        }
        cells.push_back({cell_cfg, spec});
      }
    }
  }

  std::ofstream csv(out);
  if (!csv) throw Error(ErrorKind::InvalidParameter, "cannot open " + out.string());
  csv << csv_header() << '\n';
  csv.flush();

  std::vector<BenchRecord> records(cells.size());
  std::mutex write_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      BenchRecord rec = run_experiment(cells[i].cfg, cells[i].spec, options.repeats);
      std::lock_guard<std::mutex> lock(write_mutex);
      csv << rec.csv_row() << '\n';
      csv.flush();
      records[i] = std::move(rec);
    }
  };
  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

}  // namespace sfft
