#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "sfft/bucketize.hpp"
#include "sfft/error.hpp"
#include "sfft/harness.hpp"
#include "sfft/reconstruct.hpp"

using namespace sfft;

namespace {

PermutationParams random_perm(std::mt19937_64& rng, Index n) {
  std::uniform_int_distribution<Index> pick(0, n - 1);
  PermutationParams p;
  do {
    p.sigma = pick(rng);
  } while (oracle::gcd(p.sigma, n) != 1);
  p.tau = pick(rng);
  p.b_prime = pick(rng);
  return p;
}

// Spectrum of the permuted signal straight from the definition of the permutation.
std::vector<cplx> permuted_spectrum(const std::vector<cplx>& x, const PermutationParams& p) {
  const auto n = static_cast<Index>(x.size());
  std::vector<cplx> y(x.size());
  for (Index i = 0; i < n; ++i) {
    y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(mod(p.sigma * mod(i - p.tau, n), n))] *
                                     oracle::w(static_cast<double>(mod(p.b_prime * p.sigma, n) * i % n), n);
  }
  return oracle::dft(y);
}

std::vector<Index> top_buckets(const std::vector<cplx>& values, std::size_t count) {
  std::vector<Index> idx = heavy_buckets(values, count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

TimeSignal fixture() { return gen_signal(fixture_spec()).signal; }

}  // namespace

TEST(BucketizeFlat, FixtureHeavyBuckets) {
  const WindowFilter w = make_flat_filter(2048, 16);
  const BucketSet bs = bucketize_flat(fixture(), w, PermutationParams::identity());
  EXPECT_EQ(top_buckets(bs.values, 4), (std::vector<Index>{1, 2, 5, 13}));
  EXPECT_EQ(bs.values.size(), 16u);
  EXPECT_EQ(bs.num_buckets, 16);
  EXPECT_EQ(bs.bucket_width, 128);
}

TEST(BucketizeFlat, MatchesFrequencyDomainSum) {
  std::mt19937_64 rng(21);
  const Index n = 1024;
  const WindowFilter w = make_flat_filter(n, 16);
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = oracle::random_vector(rng, n);
    const PermutationParams p = random_perm(rng, n);
    const Index shift = trial;
    const auto xh = permuted_spectrum(x, p);
    std::vector<cplx> expect(16);
    for (Index k = 0; k < 16; ++k) {
      for (Index b = 0; b < n; ++b) {
        expect[static_cast<std::size_t>(k)] += w.response(k * 64 - b) * xh[static_cast<std::size_t>(b)] *
                                               oracle::w(static_cast<double>(shift * b % n), n);
      }
    }
    TimeSignal sig(x);
    const BucketSet bs = bucketize_flat(sig, w, p, shift);
    EXPECT_LT(oracle::rel_error(bs.values, expect), 1e-9);
    EXPECT_EQ(sig.samples_read(), w.support);
  }
}

TEST(BucketizeFlat, CentredToneAndZeroSignal) {
  const Index n = 2048;
  const WindowFilter w = make_flat_filter(n, 16);
  const BucketSet bs = bucketize_flat(TimeSignal(oracle::tones(n, {640}, {cplx(0.0, 2.0)})), w, {});
  double peak = 0.0;
  for (Index f = -64; f < 64; ++f) peak = std::max(peak, std::abs(w.response(f)));
  EXPECT_NEAR(std::abs(bs.values[5]), 2.0 * std::abs(w.response(0)), 1e-9);
  EXPECT_GT(std::abs(bs.values[5]), 0.95 * 2.0 * peak);
  for (Index k = 0; k < 16; ++k) {
    if (k != 5) {
      EXPECT_LT(std::abs(bs.values[static_cast<std::size_t>(k)]), 0.01 * std::abs(bs.values[5]));
    }
  }
  const BucketSet zero = bucketize_flat(TimeSignal(std::vector<cplx>(n)), w, {});
  for (const cplx& v : zero.values) EXPECT_EQ(v, cplx(0.0));
}

TEST(BucketizeFlat, HashCommutesWithPermutation) {
  std::mt19937_64 rng(5);
  const Index n = 512;
  const WindowFilter w = make_flat_filter(n, 16);
  for (int trial = 0; trial < 4; ++trial) {
    const PermutationParams p = trial == 0 ? PermutationParams{} : random_perm(rng, n);
    const HashMapView hash = HashMapView::for_filter(w, p);
    for (Index f = 0; f < n; ++f) {
      const BucketSet bs = bucketize_flat(TimeSignal(oracle::tones(n, {f}, {1.0})), w, p);
      ASSERT_EQ(heavy_buckets(bs.values, 1).front(), hash.bucket_of(f)) << "f=" << f << " sigma=" << p.sigma;
    }
  }
}

TEST(BucketizeFlat, WrongFilterKind) {
  const TimeSignal x(std::vector<cplx>(256, 1.0));
  try {
    (void)bucketize_flat(x, make_spike_train(256, 4), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FilterKindMismatch);
  }
  EXPECT_THROW((void)bucketize_flat(TimeSignal(std::vector<cplx>(128)), make_flat_filter(256, 4), {}), Error);
}

TEST(BucketizeSpike, FixtureHeavyBuckets) {
  const BucketSet bs = bucketize_spike(fixture(), 128, 0);
  EXPECT_EQ(top_buckets(bs.values, 4), (std::vector<Index>{48, 64, 98, 124}));
}

TEST(BucketizeSpike, MatchesAliasedSumExactly) {
  std::mt19937_64 rng(2);
  for (const auto& [n, b] : {std::pair<Index, Index>{256, 16}, {1155, 35}, {1024, 128}}) {
    const auto x = oracle::random_vector(rng, n);
    const auto xh = oracle::dft(x);
    for (const Index tau : {0, 1, 3, -2}) {
      TimeSignal sig(x);
      const BucketSet bs = bucketize_spike(sig, b, tau);
      EXPECT_EQ(sig.samples_read(), b);
      std::vector<cplx> expect(static_cast<std::size_t>(b));
      for (Index f = 0; f < n; ++f) {
        expect[static_cast<std::size_t>(f % b)] +=
            xh[static_cast<std::size_t>(f)] * oracle::w(static_cast<double>(mod(tau * f, n)), n);
      }
      EXPECT_LT(oracle::rel_error(bs.values, expect), 1e-9) << n << " " << tau;
    }
  }
}

TEST(BucketizeSpike, SingleToneZeroSignalAndErrors) {
  const Index n = 2048;
  const BucketSet bs = bucketize_spike(TimeSignal(oracle::tones(n, {1660}, {cplx(0.3, -0.4)})), 128, 0);
  for (Index i = 0; i < 128; ++i) {
    const cplx expect = i == 124 ? cplx(0.3, -0.4) : cplx(0.0);
    EXPECT_NEAR(std::abs(bs.values[static_cast<std::size_t>(i)] - expect), 0.0, 1e-12);
  }
  const BucketSet zero = bucketize_spike(TimeSignal(std::vector<cplx>(n)), 128, 5);
  for (const cplx& v : zero.values) EXPECT_EQ(v, cplx(0.0));
  try {
    (void)bucketize_spike(TimeSignal(std::vector<cplx>(n)), 100, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonDivisorParameter);
  }
}

TEST(BucketizeDirichlet, FixtureHashing) {
  const TimeSignal x = fixture();
  const std::vector<Index> support{64, 304, 610, 1660};
  for (const bool half : {true, false}) {
    const HashMapView hash = HashMapView::for_filter(make_dirichlet_bank(2048, 128, 16, half));
    std::vector<Index> buckets;
    for (const Index f : support) buckets.push_back(hash.bucket_of(f));
    EXPECT_EQ(buckets, half ? (std::vector<Index>{1, 2, 5, 13}) : (std::vector<Index>{0, 2, 4, 12}));
  }
}

TEST(BucketizeDirichlet, MatchesConvolution) {
  std::mt19937_64 rng(8);
  const Index n = 256;
  const Index l = 16;
  const Index b = 16;
  const auto x = oracle::random_vector(rng, n);
  const auto xh = oracle::dft(x);
  for (const bool half : {true, false}) {
    const WindowFilter bank = filter_freq_shift(make_dirichlet_bank(n, l, b, half), 3);
    const std::vector<Index> offsets{0, 5, 200};
    TimeSignal sig(x);
    const auto sets = bucketize_dirichlet(sig, bank, offsets);
    ASSERT_EQ(sets.size(), offsets.size());
    for (std::size_t o = 0; o < offsets.size(); ++o) {
      const Index s = offsets[o];
      for (Index k = 0; k < b; ++k) {
        const Index c = bank.bank_center(k);
        cplx time_domain;
        for (std::size_t i = 0; i < bank.taps.size(); ++i) {
          const Index t = bank.tap_times[i];
          time_domain += bank.taps[i] * x[static_cast<std::size_t>(mod(s - t, n))] *
                         oracle::w(static_cast<double>(mod(c * (s - t), n)), n);
        }
        // Frequency-domain view: each tone weighted by the bank response around the bucket centre.
        cplx freq_domain;
        for (Index f = 0; f < n; ++f) {
          freq_domain += xh[static_cast<std::size_t>(f)] * bank.response(f - c) *
                         oracle::w(-static_cast<double>(mod((f - c) * s, n)), n);
        }
        EXPECT_NEAR(std::abs(sets[o].values[static_cast<std::size_t>(k)] - time_domain), 0.0, 1e-9);
        EXPECT_NEAR(std::abs(sets[o].values[static_cast<std::size_t>(k)] - freq_domain), 0.0, 1e-9);
      }
    }
    TimeSignal one(x);
    (void)bucketize_dirichlet(one, bank, {7});
    EXPECT_EQ(one.samples_read(), l);
  }
  const auto zero = bucketize_dirichlet(TimeSignal(std::vector<cplx>(n)), make_dirichlet_bank(n, l, b, true), {0});
  for (const cplx& v : zero[0].values) EXPECT_EQ(v, cplx(0.0));
  EXPECT_THROW((void)bucketize_dirichlet(TimeSignal(x), make_flat_filter(n, 16), {0}), Error);
}

TEST(HashMapView, WorkedMappings) {
  const HashMapView spike(FilterKind::spike_train, 2048, 128);
  EXPECT_EQ(spike.bucket_of(1660), 124);
  EXPECT_EQ(spike.offset_of(1660), 12);
  const HashMapView flat(FilterKind::flat, 2048, 16);
  EXPECT_EQ(flat.bucket_of(610), 5);
  EXPECT_EQ(flat.offset_of(610), -30);
  EXPECT_EQ(flat.bucket_of(0), 0);
  EXPECT_EQ(flat.bucket_of(64), 1);
  EXPECT_EQ(flat.bucket_of(2047), 0);
}

TEST(HashMapView, PreimagePartitionsFrequencies) {
  std::mt19937_64 rng(4);
  const Index n = 256;
  for (const FilterKind kind : {FilterKind::flat, FilterKind::spike_train, FilterKind::dirichlet_bank}) {
    const PermutationParams p = kind == FilterKind::spike_train ? PermutationParams{} : random_perm(rng, n);
    const HashMapView hash(kind, n, 16, p);
    std::vector<int> seen(static_cast<std::size_t>(n));
    for (Index k = 0; k < 16; ++k) {
      const auto pre = hash.preimage(k);
      EXPECT_EQ(static_cast<Index>(pre.size()), 16);
      for (const Index f : pre) {
        EXPECT_EQ(hash.bucket_of(f), k);
        ++seen[static_cast<std::size_t>(f)];
      }
    }
    for (const int s : seen) EXPECT_EQ(s, 1);
  }
}
