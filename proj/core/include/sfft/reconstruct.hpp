#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "sfft/bucketize.hpp"
#include "sfft/dsp.hpp"
#include "sfft/filters.hpp"

namespace sfft {

/// Moments m_k = sum_j p_j z_j^k, k = 0 .. 2 a_max - 1, of one bucket.
/// With spike bucketization at shift k, z_j = omega^{f_j}.
struct MomentSequence {
  Index bucket = 0;
  Index n = 0;
  int a_max = 0;
  std::vector<cplx> moments;
};

/// Arithmetic progression {start + j * stride mod n : j < count} of frequencies
/// a bucket may hold.
struct CandidateSet {
  Index n = 0;
  Index start = 0;
  Index stride = 1;
  Index count = 0;

  static CandidateSet all(Index n) { return {n, 0, 1, n}; }
  /// Frequencies congruent to `residue` mod `modulus`.
  static CandidateSet residue_class(Index n, Index residue, Index modulus) {
    return {n, mod(residue, modulus), modulus, n / modulus};
  }
  /// `count` consecutive frequencies starting at `start`.
  static CandidateSet contiguous(Index n, Index start, Index count) { return {n, mod(start, n), 1, count}; }

  Index at(Index j) const { return mod(start + j * stride, n); }
  bool contains(Index f) const;
  /// Candidate nearest to the real frequency f under circular distance;
  /// ties go to the smaller frequency.
  Index nearest(double f) const;
};

enum class TonKind { zero_ton, single_ton, multi_ton };

struct TonClass {
  TonKind kind = TonKind::zero_ton;
  Index position = 0;
  cplx coefficient;
  int count = 0;
};

/// f = -angle(y1 / y0) * n / (2 pi), rounded to the nearest candidate.
/// Throws ZeroTonBucket when |y0| < threshold.
Index locate_phase(cplx y0, cplx y1, const CandidateSet& candidates, double threshold = 1e-12);

/// Frequency in fractional bins estimated from consecutive moments:
/// the angle of sum_k m_k conj(m_{k-1}).
double moment_frequency(const std::vector<cplx>& moments, Index n);

struct VoteRound {
  BucketSet buckets;
  HashMapView hash;
  std::size_t heavy_count = 0;
  /// Buckets at or below this magnitude never count as heavy.
  double min_magnitude = 0.0;
};

struct VoteTable {
  std::unordered_map<Index, int> score;
  int rounds = 0;
};

/// Indices of the `count` largest-magnitude buckets above `min_magnitude`.
std::vector<Index> heavy_buckets(const std::vector<cplx>& values, std::size_t count, double min_magnitude = 0.0);

/// One vote per round to every frequency hashing into a heavy bucket. With a
/// non-empty `candidates` list only those frequencies are scored.
VoteTable vote_tally(const std::vector<VoteRound>& rounds, const std::vector<Index>& candidates = {});

/// Frequencies with score >= min_fraction * rounds, highest score first (ties
/// by position), at most `keep` of them.
std::vector<Index> select_by_votes(const VoteTable& table, std::size_t keep, double min_fraction);

/// Evaluates the sub-bucketization of one bucket: the coherent sum of the
/// frequencies f = residue mod modulus inside it.
using SubBucketizer = std::function<cplx(Index residue, Index modulus)>;

struct SearchResult {
  Index residue = 0;          // f mod L
  std::vector<Index> digits;  // one per level, least significant first
};

/// Radix-2 search: the residue mod L (a power of two) is fixed one bit per
/// level by comparing the two child sub-buckets. Throws AmbiguousSplit when
/// the magnitudes differ by less than `noise_floor`.
SearchResult locate_binary_search(const SubBucketizer& sub, Index bucket_width, double noise_floor = 1e-12);

/// Radix-l search over log_l(L) levels.
SearchResult locate_multiscale(const SubBucketizer& sub, Index bucket_width, Index branching,
                               double noise_floor = 1e-12);

/// Hankel matrix M_a with entries m_{r + c}, r, c < a.
std::vector<std::vector<cplx>> hankel_matrix(const MomentSequence& ms, int a);

/// Collision count per bucket: the number of Hankel singular values that are
/// among the 2B largest across all buckets and also exceed 0.1 times the
/// bucket's own largest singular value.
std::vector<int> count_collisions(const std::vector<MomentSequence>& sets, int a_max);

/// Roots of the Prony polynomial for `a` tones, each mapped to its nearest
/// candidate. Throws SingularMomentMatrix when M_a is ill-conditioned.
std::vector<Index> locate_prony(const MomentSequence& ms, int a, const CandidateSet& candidates,
                                double max_condition = 1e8);

/// Least-squares coefficients for known positions from measurements
/// y(s) = sum_j p_j omega^{s f_j}. Throws RankDeficient when the Vandermonde
/// system cannot determine them.
std::vector<cplx> estimate_prony(const std::vector<Index>& positions, const std::vector<cplx>& measurements,
                                 const std::vector<Index>& shifts, Index n);

/// Picks the `a` candidate positions whose least-squares fit leaves the
/// smallest residual (exhaustive for small pools, greedy otherwise) and
/// returns them with their coefficients.
std::pair<std::vector<Index>, std::vector<cplx>> estimate_prony_pursuit(const std::vector<Index>& candidates,
                                                                       const std::vector<cplx>& measurements,
                                                                       const std::vector<Index>& shifts,
                                                                       Index n, int a);

/// Zero-ton when the mean moment magnitude is below `noise_floor`;
/// single-ton when one tone reproduces every moment to within `tolerance`
/// (defaults to noise_floor); multi-ton otherwise.
TonClass classify_bucket(const MomentSequence& ms, double noise_floor, const CandidateSet& candidates,
                         double tolerance = -1.0);
TonClass classify_bucket(const MomentSequence& ms, double noise_floor);

/// Coefficient of `position` from a flat or spike bucket value: the bucket
/// value divided by the filter gain and permutation phase. Throws
/// NearZeroResponse when |gain| < response_floor.
cplx estimate_energy(cplx bucket_value, Index position, const WindowFilter& filter, const PermutationParams& perm,
                     Index shift = 0, double response_floor = 0.6);

/// Coefficients at `positions` from the DFT sum over `sample_budget` evenly
/// spaced samples (every sample when the budget is at least n).
SparseSpectrum estimate_formula(const TimeSignal& x, const std::vector<Index>& positions, Index sample_budget);
/// Monte-Carlo estimate (1/t) sum_i x_{j_i} omega^{f j_i} from t uniform
/// draws; t >= n evaluates the full sum.
cplx estimate_freqshift(const TimeSignal& x, Index f, Index t, std::uint64_t seed);

/// 3 * median |value|, floored at `relative_floor` times the largest magnitude.
double noise_floor_estimate(const std::vector<cplx>& values, double factor = 3.0, double relative_floor = 1e-9);

}  // namespace sfft
