#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sfft/filters.hpp"
#include "sfft/reconstruct.hpp"
#include "sfft/signal.hpp"

namespace sfft {

enum class Framework { one_shot, voting, iterative, peeling, dense };
enum class LocationMethod { phase, statistics, binary, multiscale, prony };
enum class EstimationMethod { energy, prony, formula, freqshift };

std::string_view to_string(Framework f);
std::string_view to_string(LocationMethod m);
std::string_view to_string(EstimationMethod m);
Framework framework_from_string(std::string_view s);
LocationMethod location_from_string(std::string_view s);
EstimationMethod estimation_from_string(std::string_view s);

struct AlgorithmConfig {
  Framework framework = Framework::iterative;
  FilterKind filter = FilterKind::flat;
  LocationMethod location = LocationMethod::phase;
  EstimationMethod estimation = EstimationMethod::energy;
  Index buckets = 0;                 // 0 picks a default from (n, k)
  std::vector<Index> factors;        // peeling: pairwise co-prime factors of n
  std::vector<Index> stage_buckets;  // peeling: explicit stage sizes
  int rounds = 9;
  int max_iterations = 10;
  int a_max = 4;
  Index branching = 4;
  Index support = 0;  // flat window taps, 0 = default
  double gauss_sigma = 0.0;
  double noise_factor = 3.0;
  double min_vote_fraction = 0.5;
  double response_floor = 0.6;
  bool prestage = true;
  Index prestage_buckets = 0;
  bool refine = true;  // coarse-to-fine phase refinement shifts
  bool adaptive_buckets = true;  // iterative: fewer buckets once most tones are found
  std::uint64_t seed = 1;

  /// Throws ConfigMismatch for unsupported framework / filter / method
  /// combinations or parameters that do not fit n.
  void validate(Index n) const;
  std::string to_json() const;
  static AlgorithmConfig from_json(std::string_view text);
  /// Stable hex digest of the canonical JSON form.
  std::string digest() const;
};

/// Reasonable defaults for each framework at length n and sparsity k.
AlgorithmConfig default_config(Framework f, Index n, Index k);

struct RecoveryResult {
  SparseSpectrum spectrum;
  Index samples_read = 0;
  int iterations = 0;
  bool converged = false;
  std::string note;
};

/// A configured recovery procedure for one (n, k). Construction does the
/// one-time setup (filters, response tables); run() only touches the signal.
class SparseFFT {
 public:
  SparseFFT(Index n, Index k, AlgorithmConfig cfg);
  ~SparseFFT();
  SparseFFT(SparseFFT&&) noexcept;
  SparseFFT& operator=(SparseFFT&&) noexcept;

  RecoveryResult run(const TimeSignal& x) const;

  Index n() const { return n_; }
  Index k() const { return k_; }
  const AlgorithmConfig& config() const { return cfg_; }

  struct State;

 private:
  Index n_;
  Index k_;
  AlgorithmConfig cfg_;
  std::unique_ptr<State> state_;
};

RecoveryResult run_oneshot(const TimeSignal& x, Index k, const AlgorithmConfig& cfg);
RecoveryResult run_voting(const TimeSignal& x, Index k, const AlgorithmConfig& cfg);
RecoveryResult run_iterative(const TimeSignal& x, Index k, const AlgorithmConfig& cfg);
RecoveryResult run_peeling(const TimeSignal& x, Index k, const AlgorithmConfig& cfg);
RecoveryResult run_dense(const TimeSignal& x, Index k);
RecoveryResult run_algorithm(const TimeSignal& x, Index k, const AlgorithmConfig& cfg);

/// Stage bucket counts used by the peeling decoder for the given factors.
std::vector<Index> peeling_stage_buckets(Index n, const std::vector<Index>& factors);

/// Spike-train peeling decoder over several co-prime bucketizations.
class PeelingDecoder {
 public:
  PeelingDecoder(const TimeSignal& x, std::vector<Index> stage_buckets, const AlgorithmConfig& cfg);

  std::size_t num_stages() const { return stages_.size(); }
  Index stage_buckets(std::size_t s) const { return stages_[s].buckets; }
  TonClass classify(std::size_t stage, Index bucket) const;
  /// Removes a tone's contribution from every stage.
  void subtract(Index position, cplx value);
  /// Peels single-tons until none remain or the step cap (k plus the total
  /// bucket count) is hit. A wrongly peeled tone shows up as a single-ton of
  /// opposite sign elsewhere and is cancelled the same way. Returns whether
  /// every bucket ended as a zero-ton.
  bool decode(Index k);
  const SparseSpectrum& resolved() const { return resolved_; }
  int steps() const { return steps_; }
  double noise_floor(std::size_t stage) const { return stages_[stage].floor; }

 private:
  struct Stage {
    Index buckets = 0;
    Index width = 0;
    std::vector<Index> shifts;
    std::vector<std::vector<cplx>> values;  // [shift][bucket]
    double floor = 0.0;
  };
  void estimate_floors();

  Index n_;
  int moment_count_;
  double noise_factor_;
  std::vector<Stage> stages_;
  SparseSpectrum resolved_;
  int steps_ = 0;
};

/// True when ||truth - result||_2 <= c * ||truth - best_k(truth)||_2, or the
/// tail is zero and the error is at most 1e-6.
bool l2_guarantee_check(const std::vector<cplx>& dense_truth, const SparseSpectrum& result, Index k, double c);

}  // namespace sfft
