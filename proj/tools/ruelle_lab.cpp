// Command-line front end: spectral reports, parameter scans, verification
// suites, entropy reports and path sampling, all driven by one JSON config.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ruelle/checks.hpp"
#include "ruelle/config.hpp"
#include "ruelle/dlr.hpp"
#include "ruelle/entropy.hpp"
#include "ruelle/errors.hpp"
#include "ruelle/io.hpp"
#include "ruelle/kernels.hpp"
#include "ruelle/measures.hpp"
#include "ruelle/transfer.hpp"
#include "ruelle/variational.hpp"
#include "ruelle/version.hpp"

namespace {

using nlohmann::json;
using namespace ruelle;

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  int jobs = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "experiment config (JSON)")
      ->required();
  cmd->add_option("--out", args.out_dir, "output directory");
  cmd->add_option("--seed", args.seed, "override the config seed");
  cmd->add_option("--jobs", args.jobs, "worker thread count");
}

RunConfig prepare(const CommonArgs& args) {
  kernels::set_thread_count(args.jobs);
  RunConfig cfg = load_config(args.config_path);
  if (!args.out_dir.empty()) cfg.out_dir = args.out_dir;
  if (args.seed) cfg.seed = *args.seed;
  std::filesystem::create_directories(cfg.out_dir);
  return cfg;
}

std::string path_in(const RunConfig& cfg, const std::string& name) {
  return (std::filesystem::path(cfg.out_dir) / name).string();
}

void write_manifest(const RunConfig& cfg, const std::string& command,
                    const std::vector<CheckResult>& checks,
                    const std::vector<std::string>& outputs) {
  json manifest{{"artifact", kArtifactName},
                {"version", kVersion},
                {"command", command},
                {"timestamp", timestamp_utc()},
                {"config", cfg.raw},
                {"outputs", outputs}};
  if (!checks.empty()) manifest["checks"] = checks;
  write_text_file(path_in(cfg, "manifest.json"), manifest.dump(2) + "\n");
}

int cmd_rpf(const CommonArgs& args) {
  const RunConfig cfg = prepare(args);
  const json params = cfg.params("rpf");
  RpfOptions opts;
  opts.tol = params.value("tol", opts.tol);
  opts.max_iter = params.value("max_iter", opts.max_iter);

  const TransferMatrix matrix = build_transfer(cfg.potential, cfg.alphabet);
  const SpectralData spectral = rpf_solve(matrix, opts);

  json report = spectral;
  report["normalization_residual"] =
      normalization_residual(normalize(cfg.potential, spectral));
  const std::string out = path_in(cfg, "spectral.json");
  write_text_file(out, report.dump(2) + "\n");
  write_manifest(cfg, "rpf", {}, {out});
  std::cout << "lambda = " << format_number(spectral.lambda)
            << "  log lambda = " << format_number(spectral.log_lambda)
            << "  iterations = " << spectral.iterations << "\n";
  return 0;
}

std::vector<double> scan_grid(const json& params) {
  if (params.contains("betas"))
    return params.at("betas").get<std::vector<double>>();
  const double lo = params.value("beta_min", 0.0);
  const double hi = params.value("beta_max", 1.0);
  const int steps = params.value("steps", 9);
  if (steps < 1) throw std::invalid_argument("scan: steps must be >= 1");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    grid[static_cast<std::size_t>(i)] =
        steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  return grid;
}

int cmd_scan(const CommonArgs& args) {
  const RunConfig cfg = prepare(args);
  const std::vector<double> grid = scan_grid(cfg.params("scan"));
  if (grid.empty()) throw std::invalid_argument("scan: empty grid");

  struct Row {
    double beta = 0.0;
    double pressure = 0.0, energy = 0.0, entropy = 0.0, residual = 0.0;
    std::string status = "ok";
  };
  std::vector<Row> rows(grid.size());

  // unordered parallel map over grid points, merged in grid order below
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(grid.size()); ++i) {
    Row& r = rows[static_cast<std::size_t>(i)];
    r.beta = grid[static_cast<std::size_t>(i)];
    try {
      const Potential scaled = cfg.potential.scaled(r.beta);
      r.pressure = pressure(scaled, cfg.alphabet);
      const MarkovMeasure mu = equilibrium_state(scaled, cfg.alphabet);
      r.energy = integrate_local(mu, cfg.potential);
      r.entropy = specific_entropy_markov(mu);
      r.residual = std::abs(r.entropy + r.beta * r.energy - r.pressure);
    } catch (const std::exception& e) {
      r.status = std::string("error: ") + e.what();
    }
  }

  std::string csv = "beta,pressure,energy,entropy,identity_residual,status\n";
  for (const Row& r : rows) {
    csv += format_number(r.beta) + "," + format_number(r.pressure) + "," +
           format_number(r.energy) + "," + format_number(r.entropy) + "," +
           format_number(r.residual) + "," + r.status + "\n";
  }
  const std::string out = path_in(cfg, "scan.csv");
  write_text_file(out, csv);
  write_manifest(cfg, "scan", {}, {out});

  int failures = 0;
  for (const Row& r : rows)
    if (r.status != "ok") ++failures;
  std::cout << "scan: " << rows.size() - static_cast<std::size_t>(failures)
            << "/" << rows.size() << " rows ok -> " << out << "\n";
  return failures == static_cast<int>(rows.size()) ? 2 : 0;
}

int cmd_verify(const CommonArgs& args) {
  const RunConfig cfg = prepare(args);
  const json params = cfg.params("verify");
  VerifyOptions opts;
  opts.n_max = params.value("n_max", opts.n_max);
  opts.trials = params.value("trials", opts.trials);
  opts.seed = params.value("seed", cfg.seed);
  const std::string which = params.value("which", "all");

  const std::vector<CheckResult> checks =
      run_verify(which, cfg.potential, cfg.alphabet, opts);
  bool all_pass = true;
  for (const CheckResult& c : checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.check
              << "  residual=" << format_number(c.residual)
              << "  tol=" << format_number(c.tolerance) << "\n";
    all_pass = all_pass && c.pass;
  }
  write_manifest(cfg, "verify", checks, {});
  std::cout << (all_pass ? "verify: all checks passed\n"
                         : "verify: FAILURES present\n");
  return all_pass ? 0 : 3;
}

MarkovMeasure measure_from_spec(const json& spec, const RunConfig& cfg) {
  if (spec.is_null() || (spec.is_string() && spec == "equilibrium"))
    return equilibrium_state(cfg.potential, cfg.alphabet);
  if (spec.is_string() && spec == "product")
    return product_measure(cfg.alphabet);
  if (spec.is_object() && spec.contains("random_seed"))
    return random_markov(cfg.alphabet, spec.at("random_seed").get<std::uint64_t>());
  if (spec.is_object() && spec.contains("pi")) return spec.get<MarkovMeasure>();
  throw std::invalid_argument("unknown measure spec");
}

int cmd_entropy(const CommonArgs& args) {
  const RunConfig cfg = prepare(args);
  const json params = cfg.params("entropy");
  const int n_max = params.value("n_max", 10);
  const MarkovMeasure mu = measure_from_spec(
      params.contains("measure") ? params.at("measure") : json(), cfg);

  const EntropyReport report = specific_entropy_limit(mu, n_max);
  std::string csv = "n,H_n,rate,residual\n";
  for (std::size_t i = 0; i < report.H.size(); ++i) {
    const std::string h = report.H[i].finite
                              ? format_number(report.H[i].value)
                              : (report.H[i].inf_sign > 0 ? "inf" : "-inf");
    csv += std::to_string(report.n_values[i]) + "," + h + "," +
           format_number(report.rates[i]) + "," +
           format_number(report.identity_residuals[i]) + "\n";
  }
  const std::string out_csv = path_in(cfg, "entropy.csv");
  const std::string out_json = path_in(cfg, "entropy.json");
  write_text_file(out_csv, csv);
  write_text_file(out_json, json(report).dump(2) + "\n");
  write_manifest(cfg, "entropy", {}, {out_csv, out_json});
  std::cout << "h^s extrapolated = "
            << format_number(report.extrapolated_limit.value)
            << "  closed form = "
            << format_number(report.closed_form.value_or(0.0)) << "\n";
  return 0;
}

int cmd_sample(const CommonArgs& args) {
  const RunConfig cfg = prepare(args);
  const json params = cfg.params("sample");
  const int length = params.value("length", 1000);
  const int paths = params.value("paths", 1);
  if (length < 0 || paths < 0)
    throw std::invalid_argument("sample: length and paths must be >= 0");
  const MarkovMeasure mu = measure_from_spec(
      params.contains("measure") ? params.at("measure") : json(), cfg);

  std::string csv = "path,step,symbol\n";
  for (int p = 0; p < paths && length > 0; ++p) {
    const Word path = sample_path(mu, length, cfg.seed + static_cast<std::uint64_t>(p));
    for (int i = 0; i < length; ++i)
      csv += std::to_string(p) + "," + std::to_string(i) + "," +
             std::to_string(path[static_cast<std::size_t>(i)]) + "\n";
  }
  const std::string out = path_in(cfg, "sample.csv");
  write_text_file(out, csv);
  write_manifest(cfg, "sample", {}, {out});
  std::cout << "sample: " << paths << " path(s) of length " << length
            << " -> " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thermodynamic-formalism engine for one-sided shifts"};
  app.require_subcommand(1);

  CommonArgs rpf_args, scan_args, verify_args, entropy_args, sample_args;
  add_common(app.add_subcommand("rpf", "maximal spectral data of the transfer operator"),
             rpf_args);
  add_common(app.add_subcommand("scan", "pressure/energy/entropy over a beta grid"),
             scan_args);
  add_common(app.add_subcommand("verify", "run verification suites"), verify_args);
  add_common(app.add_subcommand("entropy", "finite-volume entropy report"),
             entropy_args);
  add_common(app.add_subcommand("sample", "sample paths of a measure"), sample_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand("rpf")) return cmd_rpf(rpf_args);
    if (app.got_subcommand("scan")) return cmd_scan(scan_args);
    if (app.got_subcommand("verify")) return cmd_verify(verify_args);
    if (app.got_subcommand("entropy")) return cmd_entropy(entropy_args);
    if (app.got_subcommand("sample")) return cmd_sample(sample_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const ruelle::Error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
