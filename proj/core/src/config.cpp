#include <algorithm>
#include <cstdio>
#include <numeric>

#include "json.hpp"
#include "sfft/error.hpp"
#include "sfft/frameworks.hpp"

namespace sfft {

namespace {

template <typename E, std::size_t N>
E lookup(std::string_view s, const std::pair<E, std::string_view> (&table)[N], std::string_view what) {
  for (const auto& [value, name] : table) {
    if (name == s) return value;
  }
  throw Error(ErrorKind::ConfigMismatch, "unknown " + std::string(what) + " '" + std::string(s) + "'");
}

template <typename E, std::size_t N>
std::string_view name_of(E e, const std::pair<E, std::string_view> (&table)[N]) {
  for (const auto& [value, name] : table) {
    if (value == e) return name;
  }
  return "?";
}

constexpr std::pair<Framework, std::string_view> kFrameworks[] = {{Framework::one_shot, "one_shot"},
                                                                  {Framework::voting, "voting"},
                                                                  {Framework::iterative, "iterative"},
                                                                  {Framework::peeling, "peeling"},
                                                                  {Framework::dense, "dense"}};
constexpr std::pair<LocationMethod, std::string_view> kLocations[] = {{LocationMethod::phase, "phase"},
                                                                      {LocationMethod::statistics, "statistics"},
                                                                      {LocationMethod::binary, "binary"},
                                                                      {LocationMethod::multiscale, "multiscale"},
                                                                      {LocationMethod::prony, "prony"}};
constexpr std::pair<EstimationMethod, std::string_view> kEstimations[] = {{EstimationMethod::energy, "energy"},
                                                                          {EstimationMethod::prony, "prony"},
                                                                          {EstimationMethod::formula, "formula"},
                                                                          {EstimationMethod::freqshift, "freqshift"}};

[[noreturn]] void mismatch(const std::string& msg) { throw Error(ErrorKind::ConfigMismatch, msg); }

Index divisor_at_least(Index n, Index target) {
  for (Index d = std::max<Index>(target, 1); d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

std::vector<Index> prime_power_factors(Index n) {
  std::vector<Index> out;
  for (Index p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    Index q = 1;
    while (n % p == 0) {
      q *= p;
      n /= p;
    }
    out.push_back(q);
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::string_view to_string(Framework f) { return name_of(f, kFrameworks); }
std::string_view to_string(LocationMethod m) { return name_of(m, kLocations); }
std::string_view to_string(EstimationMethod m) { return name_of(m, kEstimations); }
Framework framework_from_string(std::string_view s) { return lookup(s, kFrameworks, "framework"); }
LocationMethod location_from_string(std::string_view s) { return lookup(s, kLocations, "location method"); }
EstimationMethod estimation_from_string(std::string_view s) { return lookup(s, kEstimations, "estimation method"); }

std::vector<Index> peeling_stage_buckets(Index n, const std::vector<Index>& factors) {
  if (factors.empty()) mismatch("peeling needs at least one factor");
  Index product = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) mismatch("peeling factors must be at least 2");
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (std::gcd(factors[i], factors[j]) != 1) mismatch("peeling factors must be pairwise co-prime");
    }
    product *= factors[i];
  }
  if (product != n) mismatch("peeling factors multiply to " + std::to_string(product) + ", not " + std::to_string(n));
  if (factors.size() <= 2) return factors;
  std::vector<Index> out;
  for (std::size_t i = 0; i < factors.size(); ++i) out.push_back(factors[i] * factors[(i + 1) % factors.size()]);
  return out;
}

void AlgorithmConfig::validate(Index n) const {
  if (n < 2) mismatch("signal length must be at least 2");
  if (buckets < 0 || (buckets > 0 && n % buckets != 0)) {
    mismatch("bucket count " + std::to_string(buckets) + " does not divide " + std::to_string(n));
  }
  switch (framework) {
    case Framework::dense:
      return;
    case Framework::one_shot:
      if (filter != FilterKind::spike_train) mismatch("one_shot needs a spike_train filter");
      if (location != LocationMethod::prony || estimation != EstimationMethod::prony) {
        mismatch("one_shot needs Prony location and estimation");
      }
      if (a_max < 1 || a_max > 16) mismatch("a_max must be in [1, 16]");
      if (buckets > 0 && n / buckets < 2 * a_max) mismatch("bucket width too small for 2 a_max shifts");
      return;
    case Framework::voting:
      if (filter != FilterKind::flat) mismatch("voting needs a flat filter");
      if (location != LocationMethod::statistics || estimation != EstimationMethod::energy) {
        mismatch("voting needs statistics location and energy estimation");
      }
      if (rounds < 0) mismatch("rounds must be non-negative");
      if (prestage_buckets < 0 || (prestage_buckets > 0 && n % prestage_buckets != 0)) {
        mismatch("prestage bucket count must divide n");
      }
      return;
    case Framework::iterative:
      if (filter != FilterKind::flat) mismatch("iterative needs a flat filter");
      if (location != LocationMethod::phase && location != LocationMethod::binary &&
          location != LocationMethod::multiscale) {
        mismatch("iterative needs phase, binary or multiscale location");
      }
      if (estimation != EstimationMethod::energy) mismatch("iterative needs energy estimation");
      if (max_iterations < 0) mismatch("max_iterations must be non-negative");
      if (location == LocationMethod::multiscale && branching < 2) mismatch("branching must be at least 2");
      if (buckets > 0 && location != LocationMethod::phase) {
        const Index l = location == LocationMethod::binary ? 2 : branching;
        Index p = 1;
        while (p < n / buckets) p *= l;
        if (p != n / buckets) mismatch("bucket width must be a power of the branching factor");
      }
      return;
    case Framework::peeling:
      if (filter != FilterKind::spike_train) mismatch("peeling needs a spike_train filter");
      if (location != LocationMethod::phase || estimation != EstimationMethod::formula) {
        mismatch("peeling needs phase location and formula estimation");
      }
      if (a_max < 1) mismatch("a_max must be positive");
      if (!stage_buckets.empty()) {
        for (const Index b : stage_buckets) {
          if (b <= 0 || n % b != 0) mismatch("stage bucket count " + std::to_string(b) + " does not divide n");
        }
      } else if (!factors.empty()) {
        peeling_stage_buckets(n, factors);
      }
      return;
  }
}

std::string AlgorithmConfig::to_json() const {
  nlohmann::ordered_json j;
  j["framework"] = std::string(sfft::to_string(framework));
  j["filter_kind"] = std::string(sfft::to_string(filter));
  j["location_method"] = std::string(sfft::to_string(location));
  j["estimation_method"] = std::string(sfft::to_string(estimation));
  j["buckets"] = buckets;
  j["factors"] = factors;
  j["stage_buckets"] = stage_buckets;
  j["rounds"] = rounds;
  j["max_iterations"] = max_iterations;
  j["a_max"] = a_max;
  j["branching"] = branching;
  j["support"] = support;
  j["gauss_sigma"] = gauss_sigma;
  j["noise_factor"] = noise_factor;
  j["min_vote_fraction"] = min_vote_fraction;
  j["response_floor"] = response_floor;
  j["prestage"] = prestage;
  j["prestage_buckets"] = prestage_buckets;
  j["refine"] = refine;
  j["adaptive_buckets"] = adaptive_buckets;
  j["seed"] = seed;
  return j.dump();
}

AlgorithmConfig AlgorithmConfig::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("config JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::SchemaError, "config JSON must be an object");
  AlgorithmConfig c;
  try {
    if (j.contains("framework")) c.framework = framework_from_string(j["framework"].get<std::string>());
    if (j.contains("filter_kind")) c.filter = filter_kind_from_string(j["filter_kind"].get<std::string>());
    if (j.contains("location_method")) c.location = location_from_string(j["location_method"].get<std::string>());
    if (j.contains("estimation_method")) {
      c.estimation = estimation_from_string(j["estimation_method"].get<std::string>());
    }
    c.buckets = j.value("buckets", c.buckets);
    c.factors = j.value("factors", c.factors);
    c.stage_buckets = j.value("stage_buckets", c.stage_buckets);
    c.rounds = j.value("rounds", c.rounds);
    c.max_iterations = j.value("max_iterations", c.max_iterations);
    c.a_max = j.value("a_max", c.a_max);
    c.branching = j.value("branching", c.branching);
    c.support = j.value("support", c.support);
    c.gauss_sigma = j.value("gauss_sigma", c.gauss_sigma);
    c.noise_factor = j.value("noise_factor", c.noise_factor);
    c.min_vote_fraction = j.value("min_vote_fraction", c.min_vote_fraction);
    c.response_floor = j.value("response_floor", c.response_floor);
    c.prestage = j.value("prestage", c.prestage);
    c.prestage_buckets = j.value("prestage_buckets", c.prestage_buckets);
    c.refine = j.value("refine", c.refine);
    c.adaptive_buckets = j.value("adaptive_buckets", c.adaptive_buckets);
    c.seed = j.value("seed", c.seed);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("config JSON: ") + e.what());
  }
  return c;
}

std::string AlgorithmConfig::digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char ch : to_json()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AlgorithmConfig default_config(Framework f, Index n, Index k) {
  AlgorithmConfig c;
  c.framework = f;
  const Index kk = std::max<Index>(k, 1);
  switch (f) {
    case Framework::one_shot:
      c.filter = FilterKind::spike_train;
      c.location = LocationMethod::prony;
      c.estimation = EstimationMethod::prony;
      c.a_max = 4;
      c.buckets = divisor_at_least(n, std::min<Index>(8 * kk, n / (2 * c.a_max)));
      if (n / c.buckets < 2 * c.a_max) c.buckets = divisor_at_least(n, 1);
      break;
    case Framework::voting:
      c.filter = FilterKind::flat;
      c.location = LocationMethod::statistics;
      c.estimation = EstimationMethod::energy;
      c.buckets = divisor_at_least(n, std::min<Index>(4 * kk, n));
      break;
    case Framework::iterative:
      c.filter = FilterKind::flat;
      c.location = LocationMethod::phase;
      c.estimation = EstimationMethod::energy;
      c.buckets = divisor_at_least(n, std::min<Index>(4 * kk, n));
      break;
    case Framework::peeling:
      c.filter = FilterKind::spike_train;
      c.location = LocationMethod::phase;
      c.estimation = EstimationMethod::formula;
      c.a_max = 2;
      c.factors = prime_power_factors(n);
      break;
    case Framework::dense:
      break;
  }
  return c;
}

}  // namespace sfft
