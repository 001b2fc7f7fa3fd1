#include "ruelle/variational.hpp"

#include <cmath>
#include <stdexcept>

#include "ruelle/budget.hpp"
#include "ruelle/errors.hpp"
#include "ruelle/kernels.hpp"
#include "ruelle/rng.hpp"
#include "ruelle/transfer.hpp"

namespace ruelle {

namespace {

// Solves the small SPD system G x = b in place by Gaussian elimination.
std::vector<double> solve_dense(std::vector<double> g, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(g[r * n + c]) > std::abs(g[pivot * n + c])) pivot = r;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(g[c * n + j], g[pivot * n + j]);
      std::swap(b[c], b[pivot]);
    }
    const double d = g[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double factor = g[r * n + c] / d;
      for (std::size_t j = c; j < n; ++j) g[r * n + j] -= factor * g[c * n + j];
      b[r] -= factor * b[c];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t c = n; c-- > 0;) {
    double s = b[c];
    for (std::size_t j = c + 1; j < n; ++j) s -= g[c * n + j] * x[j];
    x[c] = s / g[c * n + c];
  }
  return x;
}

struct Objective {
  const std::vector<double>& mu_cyl;  // length-K cylinder weights of mu
  const Alphabet& alphabet;
  int depth;

  double value(const std::vector<double>& g) const {
    Potential pot{depth, g, alphabet};
    double linear = 0.0;
    for (std::size_t w = 0; w < g.size(); ++w) linear += mu_cyl[w] * g[w];
    return -linear + pressure(pot, alphabet);
  }

  double value_and_grad(const std::vector<double>& g,
                        std::vector<double>& grad) const {
    Potential pot{depth, g, alphabet};
    const std::vector<double> gibbs = equilibrium_cylinders(pot);
    double linear = 0.0;
    for (std::size_t w = 0; w < g.size(); ++w) {
      linear += mu_cyl[w] * g[w];
      grad[w] = gibbs[w] - mu_cyl[w];
    }
    return -linear + pressure(pot, alphabet);
  }
};

// Projects Z onto the tangent space of the shift-invariant pair family:
// row sums equal column sums symbol by symbol, total sum zero.
void project_admissible(std::vector<double>& z, int m) {
  const std::size_t rows = static_cast<std::size_t>(m);  // m-1 flows + total
  const std::size_t dim = static_cast<std::size_t>(m) * m;
  std::vector<double> constraint(rows * dim, 0.0);
  for (int a = 0; a + 1 < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      constraint[static_cast<std::size_t>(a) * dim +
                 static_cast<std::size_t>(a) * m + b] += 1.0;
      constraint[static_cast<std::size_t>(a) * dim +
                 static_cast<std::size_t>(b) * m + a] -= 1.0;
    }
  for (std::size_t j = 0; j < dim; ++j)
    constraint[(rows - 1) * dim + j] = 1.0;

  std::vector<double> residual(rows, 0.0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < dim; ++j)
      residual[r] += constraint[r * dim + j] * z[j];
  std::vector<double> gram(rows * rows, 0.0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t s = 0; s < rows; ++s)
      for (std::size_t j = 0; j < dim; ++j)
        gram[r * rows + s] += constraint[r * dim + j] * constraint[s * dim + j];
  const std::vector<double> mult = solve_dense(std::move(gram), residual);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t j = 0; j < dim; ++j)
      z[j] -= mult[r] * constraint[r * dim + j];
}

}  // namespace

double pressure(const Potential& f, const Alphabet& alphabet) {
  return rpf_solve(build_transfer(f, alphabet)).log_lambda;
}

std::vector<double> equilibrium_cylinders(const Potential& g) {
  const Alphabet& alphabet = g.alphabet;
  const int m = alphabet.size();
  const int k = std::max(g.depth, 2);
  const TransferMatrix matrix = build_transfer(g, alphabet);
  const SpectralData spectral = rpf_solve(matrix);
  const Potential gbar = normalize(g, spectral);

  // invariant marginal on the index space A^{k-1}
  const std::size_t dim = matrix.dim();
  std::vector<double> pi(dim);
  for (std::size_t i = 0; i < dim; ++i) pi[i] = spectral.h[i] * spectral.nu[i];

  const std::size_t count = checked_word_count(m, k);
  std::vector<double> out(count);
  std::vector<int> word(static_cast<std::size_t>(k));
  for (std::size_t w = 0; w < count; ++w) {
    unpack_word(w, m, k, word);
    const std::size_t suffix = w % dim;  // last k-1 symbols
    out[w] = alphabet.weight(word[0]) * std::exp(gbar.at(word)) * pi[suffix];
  }
  if (g.depth >= 2) return out;
  // depth-1 potentials were lifted to depth 2; marginalize back
  std::vector<double> single(static_cast<std::size_t>(m), 0.0);
  for (std::size_t w = 0; w < count; ++w)
    single[w / static_cast<std::size_t>(m)] += out[w];
  return single;
}

VariationalReport entropy_variational(const MarkovMeasure& mu,
                                      const OptimizationConfig& cfg) {
  if (cfg.family_depth < 2)
    throw std::invalid_argument("entropy_variational: family_depth >= 2");
  if (!(cfg.grad_tol > 0.0) || !(cfg.step_tol > 0.0))
    throw std::invalid_argument("entropy_variational: tolerances > 0");
  validate(mu);
  const Alphabet& alphabet = mu.alphabet;
  const int K = cfg.family_depth;
  const std::size_t dim = checked_word_count(alphabet.size(), K);
  const std::vector<double> mu_cyl = marginal(mu, K);
  const Objective objective{mu_cyl, alphabet, K};

  Rng rng(cfg.seed);
  std::vector<double> best_g;
  double best_value = 0.0;
  int total_iterations = 0;
  bool converged = false;

  const int starts = std::max(1, cfg.restarts);
  for (int start = 0; start < starts; ++start) {
    std::vector<double> g(dim, 0.0);
    if (start > 0)
      for (double& x : g) x = rng.uniform(-1.0, 1.0);

    std::vector<double> grad(dim), trial(dim);
    double value = 0.0;
    double step = 1.0;
    bool settled = false;
    for (int it = 0; it < cfg.max_iter; ++it) {
      value = objective.value_and_grad(g, grad);
      ++total_iterations;
      double gnorm = 0.0, gsq = 0.0;
      for (double x : grad) {
        gnorm = std::max(gnorm, std::abs(x));
        gsq += x * x;
      }
      if (gnorm < cfg.grad_tol) {
        settled = true;
        break;
      }
      // Armijo backtracking
      double s = step;
      bool moved = false;
      while (s > cfg.step_tol) {
        for (std::size_t w = 0; w < dim; ++w) trial[w] = g[w] - s * grad[w];
        if (objective.value(trial) <= value - 0.3 * s * gsq) {
          g.swap(trial);
          step = std::min(s * 2.0, 8.0);
          moved = true;
          break;
        }
        s *= 0.5;
      }
      if (!moved) {
        settled = true;  // no descent direction at floating-point resolution
        break;
      }
    }
    value = objective.value(g);
    if (start == 0 || value < best_value) {
      best_value = value;
      best_g = g;
    }
    converged = converged || settled;
  }

  VariationalReport report;
  report.h_v = best_value;
  report.h_s = specific_entropy_markov(mu);
  report.gap = std::abs(report.h_v - report.h_s);
  report.iterations = total_iterations;
  report.converged = converged;

  // gauge fix: shift the minimizer so its pressure vanishes
  Potential minimizer{K, std::move(best_g), alphabet};
  const double shift = pressure(minimizer, alphabet);
  report.minimizer = minimizer.shifted(-shift);

  // internal sup-side check: F at the normalized generator of mu is h^s(mu)
  if (K == 2) {
    const int m = alphabet.size();
    std::vector<double> generator(dim, 0.0);
    bool full_support = true;
    for (int a = 0; a < m && full_support; ++a)
      for (int b = 0; b < m; ++b) {
        const double w = mu.pair_at(a, b);
        if (w <= 0.0) {
          full_support = false;
          break;
        }
        generator[static_cast<std::size_t>(a) * m + b] = std::log(
            w / (alphabet.weight(a) * mu.pi[static_cast<std::size_t>(b)]));
      }
    report.pressure_check =
        full_support ? std::abs(objective.value(generator) - report.h_s) : 0.0;
  }
  return report;
}

MarkovMeasure equilibrium_state(const Potential& f, const Alphabet& alphabet) {
  if (std::max(f.depth, 2) > 2)
    throw std::invalid_argument(
        "equilibrium_state: pair measures require depth <= 2 potentials");
  const SpectralData spectral = rpf_solve(build_transfer(f, alphabet));
  return gibbs_from_normalized(normalize(f, spectral), alphabet);
}

PressureCheckReport pressure_variational_check(const Potential& f,
                                               const Alphabet& alphabet,
                                               int trials, std::uint64_t seed) {
  if (trials < 0)
    throw std::invalid_argument("pressure_variational_check: trials >= 0");
  PressureCheckReport report;
  report.trials = trials;
  const SpectralData spectral = rpf_solve(build_transfer(f, alphabet));
  report.log_lambda = spectral.log_lambda;
  const MarkovMeasure mu_f = equilibrium_state(f, alphabet);

  auto value_of = [&](const MarkovMeasure& mu) {
    return specific_entropy_markov(mu) + integrate_local(mu, f);
  };

  const double at_equilibrium = value_of(mu_f);
  report.equality_residual = std::abs(report.log_lambda - at_equilibrium);
  report.sup_value = at_equilibrium;
  report.min_deficit = report.log_lambda - at_equilibrium;

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const MarkovMeasure mu = random_markov(alphabet, rng.raw());
    const double v = value_of(mu);
    report.sup_value = std::max(report.sup_value, v);
    report.min_deficit = std::min(report.min_deficit, report.log_lambda - v);
  }
  report.max_violation = std::max(0.0, report.sup_value - report.log_lambda);
  report.pass =
      report.max_violation <= 1e-12 && report.equality_residual <= 1e-10;
  return report;
}

UniquenessReport uniqueness_probe(const Potential& f, const Alphabet& alphabet,
                                  int trials, double eps, std::uint64_t seed) {
  if (eps < 0.0)
    throw std::invalid_argument("uniqueness_probe: eps must be >= 0");
  const int m = alphabet.size();
  const SpectralData spectral = rpf_solve(build_transfer(f, alphabet));
  const MarkovMeasure mu_f = equilibrium_state(f, alphabet);

  UniquenessReport report;
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<double> direction(static_cast<std::size_t>(m) * m);
    for (double& x : direction) x = rng.uniform(-1.0, 1.0);
    project_admissible(direction, m);
    double scale = 0.0;
    for (double x : direction) scale = std::max(scale, std::abs(x));
    if (scale <= 0.0) continue;
    for (double& x : direction) x /= scale;

    // keep the perturbed pair weights strictly positive
    double feasible = eps;
    for (std::size_t i = 0; i < direction.size(); ++i)
      if (direction[i] < 0.0)
        feasible = std::min(feasible, 0.9 * mu_f.pair[i] / -direction[i]);

    auto perturbed = [&](double t_step) {
      MarkovMeasure mu = mu_f;
      for (std::size_t i = 0; i < direction.size(); ++i)
        mu.pair[i] += t_step * direction[i];
      const int mm = mu.alphabet.size();
      for (int a = 0; a < mm; ++a) {
        double row = 0.0;
        for (int b = 0; b < mm; ++b) row += mu.pair_at(a, b);
        mu.pi[static_cast<std::size_t>(a)] = row;
      }
      validate(mu, 1e-10);
      return mu;
    };

    UniquenessTrial trial;
    const MarkovMeasure mu_eps = perturbed(feasible);
    const MarkovMeasure mu_half = perturbed(0.5 * feasible);
    trial.distance = pair_distance(mu_eps, mu_f);
    trial.h = relative_entropy_rate(mu_eps, f, spectral).value;
    trial.h_half = relative_entropy_rate(mu_half, f, spectral).value;
    trial.order =
        trial.h_half > 1e-300 ? std::log2(trial.h / trial.h_half) : 0.0;
    report.trials.push_back(trial);
  }

  report.min_h = 0.0;
  report.fitted_order = 0.0;
  if (!report.trials.empty()) {
    report.min_h = report.trials.front().h;
    for (const auto& t : report.trials) {
      report.min_h = std::min(report.min_h, t.h);
      report.fitted_order += t.order;
    }
    report.fitted_order /= static_cast<double>(report.trials.size());
  }
  return report;
}

}  // namespace ruelle
