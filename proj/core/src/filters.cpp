#include "sfft/filters.hpp"

#include <cmath>
#include <numbers>

#include "json.hpp"
#include "sfft/error.hpp"
#include "sfft/fft.hpp"

namespace sfft {

namespace {

void require_split(Index n, Index num_buckets, ErrorKind kind = ErrorKind::NonDivisorParameter) {
  if (n <= 0 || num_buckets <= 0 || n % num_buckets != 0) {
    throw Error(kind,
                "bucket count " + std::to_string(num_buckets) + " does not divide " + std::to_string(n));
  }
}

// freq_response[f] = sum_i taps[i] omega^{f t_i}: place the taps at t mod n and
// take an unnormalized forward transform.
void tabulate_response(WindowFilter& w) {
  std::vector<cplx> placed(static_cast<std::size_t>(w.n));
  for (std::size_t i = 0; i < w.taps.size(); ++i) {
    placed[static_cast<std::size_t>(mod(w.tap_times[i], w.n))] += w.taps[i];
  }
  w.freq_response = fft::forward(placed);
}

}  // namespace

std::string_view to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::flat: return "flat";
    case FilterKind::spike_train: return "spike_train";
    case FilterKind::dirichlet_bank: return "dirichlet_bank";
  }
  return "flat";
}

FilterKind filter_kind_from_string(std::string_view name) {
  if (name == "flat") return FilterKind::flat;
  if (name == "spike_train") return FilterKind::spike_train;
  if (name == "dirichlet_bank") return FilterKind::dirichlet_bank;
  throw Error(ErrorKind::InvalidParameter, "unknown filter kind '" + std::string(name) + "'");
}

Index WindowFilter::bank_center(Index k) const {
  return k * bucket_width + (half_bucket_offset ? 0 : bucket_width / 2);
}

Index default_flat_support(Index n, Index num_buckets) {
  const double target = 4.0 * static_cast<double>(num_buckets) * std::sqrt(std::log2(static_cast<double>(n)));
  auto omega = static_cast<Index>(std::ceil(target));
  if (omega % 2 != 0) ++omega;
  return std::min(omega, n);
}

double default_gauss_sigma(Index n, Index num_buckets) {
  return static_cast<double>(num_buckets) * std::sqrt(std::log2(static_cast<double>(n)));
}

WindowFilter make_flat_filter(Index n, Index num_buckets, Index support, double gauss_sigma) {
  require_split(n, num_buckets, ErrorKind::InvalidParameter);
  if (support <= 0 || support > n || support % 2 != 0) {
    throw Error(ErrorKind::InvalidParameter, "flat filter support must be even and in (0, n]");
  }
  if (!(gauss_sigma > 0.0)) throw Error(ErrorKind::InvalidParameter, "gauss_sigma must be positive");

  WindowFilter w;
  w.kind = FilterKind::flat;
  w.n = n;
  w.num_buckets = num_buckets;
  w.bucket_width = n / num_buckets;
  w.support = support;
  w.gauss_sigma = gauss_sigma;
  w.taps.resize(static_cast<std::size_t>(support));
  w.tap_times.resize(static_cast<std::size_t>(support));

  const double pi = std::numbers::pi;
  const auto b = static_cast<double>(num_buckets);
  for (Index i = 0; i < support; ++i) {
    const Index t = i - support / 2;
    const auto td = static_cast<double>(t);
    const double sinc = t == 0 ? 1.0 / b : std::sin(pi * td / b) / (pi * td);
    const double gauss = std::exp(-0.5 * (td / gauss_sigma) * (td / gauss_sigma));
    const cplx half_bin = t == 0 ? cplx{1.0, 0.0} : fft::omega_real(-0.5 * td, n);
    w.taps[static_cast<std::size_t>(i)] = sinc * gauss * half_bin;
    w.tap_times[static_cast<std::size_t>(i)] = t;
  }
  tabulate_response(w);
  return w;
}

WindowFilter make_flat_filter(Index n, Index num_buckets) {
  require_split(n, num_buckets, ErrorKind::InvalidParameter);
  return make_flat_filter(n, num_buckets, default_flat_support(n, num_buckets),
                          default_gauss_sigma(n, num_buckets));
}

WindowFilter make_spike_train(Index n, Index aliasing_factor) {
  require_split(n, aliasing_factor);
  WindowFilter w;
  w.kind = FilterKind::spike_train;
  w.n = n;
  w.bucket_width = aliasing_factor;
  w.num_buckets = n / aliasing_factor;
  w.support = aliasing_factor;
  const double height = std::sqrt(static_cast<double>(n)) / static_cast<double>(aliasing_factor);
  for (Index j = 0; j < aliasing_factor; ++j) {
    w.taps.emplace_back(height, 0.0);
    w.tap_times.push_back(j * w.num_buckets);
  }
  tabulate_response(w);
  return w;
}

WindowFilter make_dirichlet_bank(Index n, Index bucket_width, Index num_buckets, bool half_offset) {
  if (bucket_width <= 0 || num_buckets <= 0 || bucket_width * num_buckets != n) {
    throw Error(ErrorKind::NonDivisorParameter, "Dirichlet bank needs L * B == n");
  }
  WindowFilter w;
  w.kind = FilterKind::dirichlet_bank;
  w.n = n;
  w.bucket_width = bucket_width;
  w.num_buckets = num_buckets;
  w.support = bucket_width;
  w.half_bucket_offset = half_offset;
  const double height = 1.0 / static_cast<double>(bucket_width);
  for (Index t = 0; t < bucket_width; ++t) {
    w.taps.emplace_back(height, 0.0);
    w.tap_times.push_back(t);
  }
  tabulate_response(w);
  return w;
}

WindowFilter filter_freq_shift(const WindowFilter& filter, Index f0) {
  WindowFilter w = filter;
  for (std::size_t i = 0; i < w.taps.size(); ++i) {
    w.taps[i] *= fft::omega(-f0 * w.tap_times[i], w.n);
  }
  w.center_offset = filter.center_offset + f0;
  tabulate_response(w);
  return w;
}

std::string WindowFilter::to_json() const {
  nlohmann::json j;
  j["kind"] = std::string(sfft::to_string(kind));
  j["n"] = n;
  j["num_buckets"] = num_buckets;
  j["bucket_width"] = bucket_width;
  j["support"] = support;
  j["gauss_sigma"] = gauss_sigma;
  j["center_offset"] = center_offset;
  j["half_bucket_offset"] = half_bucket_offset;
  return j.dump();
}

WindowFilter WindowFilter::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("filter JSON: ") + e.what());
  }
  try {
    const FilterKind kind = filter_kind_from_string(j.at("kind").get<std::string>());
    const Index n = j.at("n").get<Index>();
    WindowFilter w;
    switch (kind) {
      case FilterKind::flat:
        w = make_flat_filter(n, j.at("num_buckets").get<Index>(), j.at("support").get<Index>(),
                             j.at("gauss_sigma").get<double>());
        break;
      case FilterKind::spike_train:
        w = make_spike_train(n, j.at("bucket_width").get<Index>());
        break;
      case FilterKind::dirichlet_bank:
        w = make_dirichlet_bank(n, j.at("bucket_width").get<Index>(), j.at("num_buckets").get<Index>(),
                                j.at("half_bucket_offset").get<bool>());
        break;
    }
    const Index shift = j.value("center_offset", Index{0});
    return shift == 0 ? w : filter_freq_shift(w, shift);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("filter JSON: ") + e.what());
  }
}

}  // namespace sfft
