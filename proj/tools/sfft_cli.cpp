// Command line front end: single runs, sweeps, plots and the worked examples.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sfft/bucketize.hpp"
#include "sfft/dsp.hpp"
#include "sfft/error.hpp"
#include "sfft/filters.hpp"
#include "sfft/frameworks.hpp"
#include "sfft/harness.hpp"
#include "sfft/plot.hpp"
#include "sfft/reconstruct.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNotConverged = 3;

using nlohmann::json;
using sfft::Index;

std::optional<double> parse_snr(const std::string& s) {
  if (s.empty() || s == "exact" || s == "inf") return std::nullopt;
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw sfft::Error(sfft::ErrorKind::InvalidSpec, "bad snr '" + s + "'");
  return v;
}

std::string read_config_text(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw sfft::Error(sfft::ErrorKind::SchemaError, "cannot read config file " + arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Defaults for (framework, n, k) overlaid with whatever the user JSON sets.
sfft::AlgorithmConfig build_config(const std::string& algo, const std::string& config_arg, Index n, Index k,
                                   std::uint64_t seed) {
  std::optional<json> user;
  if (!config_arg.empty()) {
    try {
      user = json::parse(read_config_text(config_arg));
    } catch (const json::exception& e) {
      throw sfft::Error(sfft::ErrorKind::SchemaError, std::string("config JSON: ") + e.what());
    }
    if (!user->is_object()) throw sfft::Error(sfft::ErrorKind::SchemaError, "config JSON must be an object");
  }
  std::string name = algo;
  if (user && user->contains("framework") && algo.empty()) name = (*user)["framework"].get<std::string>();
  if (name.empty()) name = "iterative";
  const sfft::Framework fw = sfft::framework_from_string(name);
  json merged = json::parse(sfft::default_config(fw, n, k).to_json());
  merged["seed"] = seed;
  if (user) merged.merge_patch(*user);
  merged["framework"] = std::string(sfft::to_string(fw));
  return sfft::AlgorithmConfig::from_json(merged.dump());
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Index> sorted(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  return v;
}

json fixtures() {
  json out;
  const sfft::GeneratedSignal fx = sfft::gen_signal(sfft::fixture_spec());
  const Index n = fx.signal.size();
  const sfft::PermutationParams id = sfft::PermutationParams::identity();
  out["signal"] = {{"n", n}, {"support", fx.tones.positions()}};

  const sfft::WindowFilter flat = sfft::make_flat_filter(n, 16);
  out["flat_buckets"] = sorted(sfft::heavy_buckets(sfft::bucketize_flat(fx.signal, flat, id).values, 4));
  out["spike_buckets"] = sorted(sfft::heavy_buckets(sfft::bucketize_spike(fx.signal, 128, 0).values, 4));

  for (const bool half : {true, false}) {
    const sfft::WindowFilter bank = sfft::make_dirichlet_bank(n, 128, 16, half);
    const sfft::HashMapView hash = sfft::HashMapView::for_filter(bank);
    std::vector<Index> assigned;
    for (const Index f : fx.tones.positions()) assigned.push_back(hash.bucket_of(f));
    out[half ? "dirichlet_centered_buckets" : "dirichlet_edge_buckets"] = sorted(assigned);
  }

  const sfft::PermutationParams scale{3, 0, 0};
  json mapped = json::array();
  for (const Index f : {64, 98, 610, 1660}) mapped.push_back({f, scale.permuted_position(f, n)});
  out["scaling_sigma3"] = mapped;

  sfft::SignalSpec toy;
  toy.n = 20;
  toy.k = 5;
  toy.positions = {1, 3, 5, 10, 13};
  toy.values.assign(5, sfft::cplx(1.0, 0.0));
  const sfft::GeneratedSignal t = sfft::gen_signal(toy);
  sfft::PeelingDecoder dec(t.signal, {4, 5}, sfft::default_config(sfft::Framework::peeling, 20, 5));
  auto describe = [&](std::size_t stage, Index bucket) {
    const sfft::TonClass c = dec.classify(stage, bucket);
    json j{{"buckets", dec.stage_buckets(stage)}, {"bucket", bucket}};
    switch (c.kind) {
      case sfft::TonKind::zero_ton: j["kind"] = "zero_ton"; break;
      case sfft::TonKind::single_ton: j["kind"] = "single_ton"; j["position"] = c.position; break;
      case sfft::TonKind::multi_ton: j["kind"] = "multi_ton"; break;
    }
    return j;
  };
  json peel;
  peel["y_4_2"] = describe(0, 2);
  peel["y_5_0"] = describe(1, 0);
  peel["decoded"] = dec.decode(5);
  peel["recovered"] = dec.resolved().positions();
  out["peeling_n20"] = peel;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse FFT frameworks: experiments, sweeps and plots"};
  app.require_subcommand(1);

  Index n = 4096;
  Index k = 16;
  std::string snr = "20";
  std::uint64_t seed = 1;
  if (const char* env = std::getenv("SFFT_SEED")) seed = std::strtoull(env, nullptr, 10);
  std::string algo;
  std::string config;
  int repeats = 5;
  std::string out;
  int workers = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", n, "signal length");
    sub->add_option("--k", k, "sparsity");
    sub->add_option("--snr", snr, "SNR in dB, or 'exact'");
    sub->add_option("--seed", seed, "signal seed (default from SFFT_SEED or 1)");
    sub->add_option("--config", config, "algorithm config as JSON text or a JSON file");
    sub->add_option("--repeats", repeats, "timed repeats per cell")->check(CLI::PositiveNumber);
  };

  CLI::App* run = app.add_subcommand("run", "run one experiment and print a JSON record");
  add_common(run);
  run->add_option("--algo", algo, "one_shot | voting | iterative | peeling | dense");

  CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep and write CSV");
  add_common(sweep);
  std::string sweep_kind = "n_sweep";
  std::string grid_arg;
  int trials = 1;
  sweep->add_option("kind", sweep_kind, "n_sweep | k_sweep | snr_sweep")->required();
  sweep->add_option("--algo", algo, "comma-separated frameworks (default: all)");
  sweep->add_option("--grid", grid_arg, "comma-separated grid values ('exact' allowed for snr)");
  sweep->add_option("--trials", trials, "seeds per cell")->check(CLI::PositiveNumber);
  sweep->add_option("--workers", workers, "parallel cells")->check(CLI::PositiveNumber);
  sweep->add_option("--out", out, "CSV path")->required();

  CLI::App* plot = app.add_subcommand("plot", "render SVG plots from a sweep CSV");
  std::string csv_in;
  plot->add_option("csv", csv_in, "sweep CSV")->required();
  plot->add_option("--out", out, "output directory")->required();

  CLI::App* fx = app.add_subcommand("fixtures", "print the worked examples as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) {
      sfft::SignalSpec spec;
      spec.n = n;
      spec.k = k;
      spec.snr_db = parse_snr(snr);
      spec.seed = seed;
      spec.validate();
      const sfft::AlgorithmConfig cfg = build_config(algo, config, n, k, seed);
      cfg.validate(n);
      std::cout << sfft::run_experiment(cfg, spec, repeats).to_json() << '\n';
      return 0;
    }
    if (*sweep) {
      const sfft::SweepKind kind = sfft::sweep_kind_from_string(sweep_kind);
      std::vector<double> grid;
      if (grid_arg.empty()) {
        grid = sfft::default_grid(kind);
      } else {
        for (const std::string& g : split_list(grid_arg)) {
          const auto v = parse_snr(g);
          grid.push_back(v ? *v : std::numeric_limits<double>::quiet_NaN());
        }
      }
      std::vector<std::string> algos = split_list(algo);
      if (algos.empty()) algos = {"one_shot", "peeling", "iterative", "voting", "dense"};
      std::vector<sfft::AlgorithmConfig> configs;
      for (const std::string& a : algos) {
        sfft::AlgorithmConfig cfg = build_config(a, config, n, k, seed);
        // Size-dependent fields are re-derived for every cell.
        cfg.buckets = 0;
        cfg.factors.clear();
        configs.push_back(cfg);
      }
      sfft::SweepOptions opts;
      opts.base.n = n;
      opts.base.k = k;
      opts.base.snr_db = parse_snr(snr);
      opts.base.seed = seed;
      opts.repeats = repeats;
      opts.workers = workers;
      opts.trials = trials;
      const auto records = sfft::run_sweep(kind, grid, configs, opts, out);
      const bool all = std::all_of(records.begin(), records.end(), [](const auto& r) { return r.converged; });
      std::cerr << records.size() << " rows written to " << out << '\n';
      return all ? 0 : kExitNotConverged;
    }
    if (*plot) {
      for (const auto& p : sfft::emit_plots(csv_in, out)) std::cout << p.string() << '\n';
      return 0;
    }
    if (*fx) {
      std::cout << fixtures().dump(2) << '\n';
      return 0;
    }
  } catch (const sfft::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
