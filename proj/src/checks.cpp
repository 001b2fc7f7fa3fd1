#include "ruelle/checks.hpp"

#include <cmath>
#include <stdexcept>

#include "ruelle/dlr.hpp"
#include "ruelle/entropy.hpp"
#include "ruelle/measures.hpp"
#include "ruelle/rng.hpp"
#include "ruelle/transfer.hpp"
#include "ruelle/variational.hpp"

namespace ruelle {

namespace {

CheckResult row(std::string name, double residual, double tolerance,
                std::string note = "") {
  return CheckResult{std::move(name), residual, tolerance,
                     residual <= tolerance, std::move(note)};
}

}  // namespace

std::vector<CheckResult> verify_theorem1(const Potential& f,
                                         const Alphabet& alphabet,
                                         const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const SpectralData spectral = rpf_solve(build_transfer(f, alphabet));
  const Potential fbar = normalize(f, spectral);
  const MarkovMeasure gibbs = gibbs_from_normalized(fbar, alphabet);
  Rng rng(opts.seed);

  const int m = alphabet.size();
  const int micro_trials = std::max(1, std::min(opts.trials, 5));
  for (int t = 0; t < micro_trials; ++t) {
    const MarkovMeasure mu = random_markov(alphabet, rng.raw());
    const BoundaryCondition y =
        BoundaryCondition::constant(static_cast<int>(rng.raw() % m));
    for (int n : {2, std::max(2, opts.n_max / 2), opts.n_max}) {
      const double res = kernel_entropy_identity(mu, fbar, y, n);
      out.push_back(row("theorem1/kernel_identity[trial=" + std::to_string(t) +
                            ",n=" + std::to_string(n) + "]",
                        res, 1e-12));
    }

    const EntropyReport seq =
        relative_entropy_rate_empirical(mu, gibbs, opts.n_max);
    out.push_back(row("theorem1/affine_volumes[trial=" + std::to_string(t) + "]",
                      seq.affineness_residual, 1e-12));
    const double rate = relative_entropy_rate(mu, f, spectral).value;
    const double empirical = seq.extrapolated_limit.value;
    out.push_back(row("theorem1/rate_identity[trial=" + std::to_string(t) + "]",
                      std::abs(empirical - rate), 1e-8,
                      "limit of H_n(mu|nu)/n vs log lambda - int f dmu - h^s"));
  }
  return out;
}

std::vector<CheckResult> verify_dlr(const Potential& f,
                                    const Alphabet& alphabet,
                                    const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const SpectralData spectral = rpf_solve(build_transfer(f, alphabet));
  const Potential fbar = normalize(f, spectral);
  const MarkovMeasure gibbs = gibbs_from_normalized(fbar, alphabet);
  const MarkovMeasure prior = product_measure(alphabet);

  const int n_top = std::min(opts.n_max, 6);
  for (int n = 1; n <= n_top; ++n)
    out.push_back(row("dlr/invariance[n=" + std::to_string(n) + "]",
                      dlr_check(gibbs, fbar, n), 1e-12,
                      "mu_f gamma_n = mu_f in total variation"));

  const double control = dlr_check(prior, fbar, 2);
  const bool trivial = pair_distance(gibbs, prior) < 1e-3;
  CheckResult negative{"dlr/negative_control", control, 0.01,
                       trivial || control >= 0.01,
                       trivial ? "equilibrium measure is the product measure; "
                                 "control not applicable"
                               : "expected-negative: product measure must "
                                 "fail the DLR equations"};
  out.push_back(negative);
  return out;
}

std::vector<CheckResult> verify_equivalence(const Alphabet& alphabet,
                                            const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  Rng rng(opts.seed);
  const int trials = std::max(1, std::min(opts.trials, 20));
  OptimizationConfig cfg;
  cfg.restarts = 2;
  for (int t = 0; t < trials; ++t) {
    const MarkovMeasure mu = random_markov(alphabet, rng.raw());
    cfg.seed = rng.raw();
    const VariationalReport report = entropy_variational(mu, cfg);
    out.push_back(row("equivalence/hv_vs_hs[trial=" + std::to_string(t) + "]",
                      report.gap, 1e-4));
    out.push_back(
        row("equivalence/sup_side[trial=" + std::to_string(t) + "]",
            report.pressure_check, 1e-10,
            "F at the normalized generator of mu equals h^s(mu)"));
  }

  // analytic pressure gradient against central finite differences
  const Potential g = random_potential(alphabet, 2, rng.raw(), 1.0);
  const std::vector<double> analytic = equilibrium_cylinders(g);
  double worst = 0.0;
  const double h = 1e-6;
  for (std::size_t w = 0; w < analytic.size(); ++w) {
    Potential up = g, down = g;
    up.values[w] += h;
    down.values[w] -= h;
    const double fd =
        (pressure(up, alphabet) - pressure(down, alphabet)) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - analytic[w]) /
                                std::max(1e-12, std::abs(analytic[w])));
  }
  out.push_back(row("equivalence/gradient_check", worst, 1e-6,
                    "pressure gradient vs central differences"));
  return out;
}

std::vector<CheckResult> verify_walters(const Potential& f,
                                        const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const int n_max = std::min(opts.n_max, 6);
  for (int j = 0; j < f.depth; ++j) {
    const double modulus = walters_modulus(f, n_max, j);
    if (j >= f.depth - 1)
      out.push_back(row("walters/modulus_zero[j=" + std::to_string(j) + "]",
                        modulus, 0.0,
                        "depth-" + std::to_string(f.depth) +
                            " potentials have zero modulus beyond j = depth-1"));
    else
      out.push_back(CheckResult{"walters/modulus[j=" + std::to_string(j) + "]",
                                modulus, 0.0, true,
                                "reported oscillation, no assertion"});
  }
  return out;
}

std::vector<CheckResult> verify_corollary(const Potential& f,
                                          const Alphabet& alphabet,
                                          const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const SpectralData spectral = rpf_solve(build_transfer(f, alphabet));
  const MarkovMeasure mu_f = equilibrium_state(f, alphabet);
  Rng rng(opts.seed);

  double min_h = relative_entropy_rate(mu_f, f, spectral).value;
  bool equality_localized = true;
  for (int t = 0; t < opts.trials; ++t) {
    const MarkovMeasure mu = random_markov(alphabet, rng.raw());
    const double h = relative_entropy_rate(mu, f, spectral).value;
    min_h = std::min(min_h, h);
    if (h <= 1e-10 && pair_distance(mu, mu_f) > 1e-8) equality_localized = false;
  }
  out.push_back(row("corollary/nonnegative_rate", std::max(0.0, -min_h), 1e-12,
                    "h(mu | mu_f) >= 0 over random Markov measures"));
  out.push_back(CheckResult{"corollary/equality_only_at_equilibrium", 0.0, 0.0,
                            equality_localized,
                            "h <= 1e-10 only within pair-distance 1e-8"});
  out.push_back(row("corollary/equality_at_equilibrium",
                    std::abs(relative_entropy_rate(mu_f, f, spectral).value),
                    1e-10));
  return out;
}

std::vector<CheckResult> run_verify(const std::string& which,
                                    const Potential& f,
                                    const Alphabet& alphabet,
                                    const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  auto append = [&out](std::vector<CheckResult> rows) {
    for (auto& r : rows) out.push_back(std::move(r));
  };
  const bool all = which == "all";
  if (all || which == "theorem1") append(verify_theorem1(f, alphabet, opts));
  if (all || which == "dlr") append(verify_dlr(f, alphabet, opts));
  if (all || which == "equivalence") append(verify_equivalence(alphabet, opts));
  if (all || which == "walters") append(verify_walters(f, opts));
  if (all || which == "corollary") append(verify_corollary(f, alphabet, opts));
  if (out.empty())
    throw std::invalid_argument("verify: unknown check group " + which);
  return out;
}

void to_json(nlohmann::json& j, const CheckResult& c) {
  j = nlohmann::json{{"check", c.check},
                     {"residual", c.residual},
                     {"tolerance", c.tolerance},
                     {"pass", c.pass}};
  if (!c.note.empty()) j["note"] = c.note;
}

}  // namespace ruelle
