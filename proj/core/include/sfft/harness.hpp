#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sfft/frameworks.hpp"
#include "sfft/signal.hpp"

namespace sfft {

struct SignalSpec {
  Index n = 1024;
  Index k = 8;
  std::optional<double> snr_db;  // empty: exactly sparse
  std::uint64_t seed = 1;
  /// Fixture mode: fixed support and coefficients instead of random draws.
  std::vector<Index> positions;
  std::vector<cplx> values;

  /// Throws InvalidSpec.
  void validate() const;
  std::string snr_label() const;
};

struct GeneratedSignal {
  TimeSignal signal;
  SparseSpectrum tones;     // noiseless ground truth
  std::vector<cplx> noise;  // additive time-domain noise (empty when exact)
};

/// K unit-magnitude tones with uniform phases at distinct uniform positions,
/// synthesized by an inverse transform; complex white Gaussian noise is added
/// at the requested SNR.
GeneratedSignal gen_signal(const SignalSpec& spec);

/// The N = 2048, K = 4 fixture: tones 0.55, 0.7, 0.85, 1.0 at 64, 304, 610, 1660.
SignalSpec fixture_spec();

struct ErrorMetrics {
  Index l0 = 0;
  double l1 = 0.0;
  double l2 = 0.0;
};

/// Errors of `result` against the best-k approximation of `dense_truth`:
/// l0 counts entries of the difference above tol0, l1 = sum|d| / k,
/// l2 = ||d||_2 / sqrt(k).
ErrorMetrics compute_errors(const std::vector<cplx>& dense_truth, const SparseSpectrum& result, Index k,
                            double tol0 = 0.01);
/// Same, with a sparse reference used as is.
ErrorMetrics compute_errors(const SparseSpectrum& reference, const SparseSpectrum& result, double tol0 = 0.01);

struct BenchRecord {
  std::string algorithm;
  SignalSpec spec;
  double runtime_seconds = 0.0;
  double sampling_fraction = 0.0;
  Index samples_read = 0;
  ErrorMetrics errors;
  bool converged = false;
  std::string config_digest;
  std::string note;
  int iterations = 0;
  bool l2_guarantee = false;

  std::string to_json() const;
  std::string csv_row() const;
};

std::string csv_header();
std::string algorithm_id(const AlgorithmConfig& cfg);

/// Generates the signal once, runs the algorithm `repeats` times on fresh
/// copies and records the median runtime. Configuration and framework errors
/// become converged=false rows.
BenchRecord run_experiment(const AlgorithmConfig& cfg, const SignalSpec& spec, int repeats = 5);

enum class SweepKind { n_sweep, k_sweep, snr_sweep };
SweepKind sweep_kind_from_string(std::string_view s);
std::string_view to_string(SweepKind kind);
/// Default grid for each sweep family.
std::vector<double> default_grid(SweepKind kind);

/// Co-prime factor product closest to n on a log scale, for peeling runs.
Index coprime_length_near(Index n);

struct SweepOptions {
  SignalSpec base;
  int repeats = 5;
  int workers = 1;
  int trials = 1;  // seeds per cell: base.seed, base.seed + 1, ...
};

/// One BenchRecord per (grid value, trial, config); rows are written to `out`
/// as soon as each cell finishes. A NaN grid entry in an snr sweep means exact.
std::vector<BenchRecord> run_sweep(SweepKind kind, const std::vector<double>& grid,
                                   const std::vector<AlgorithmConfig>& configs, const SweepOptions& options,
                                   const std::filesystem::path& out);

}  // namespace sfft
