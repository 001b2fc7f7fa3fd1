#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ruelle/rng.hpp"
#include "ruelle/variational.hpp"

using namespace ruelle;

namespace {
const Alphabet two = Alphabet::uniform_finite(2);
}

TEST_CASE("pressure closed forms") {
  CHECK(std::abs(pressure(constant_potential(two, 0.0), two)) <= 1e-13);
  CHECK(pressure(constant_potential(two, 0.9), two) ==
        doctest::Approx(0.9).epsilon(1e-13));
  CHECK(pressure(ising_potential(two, 1.0), two) ==
        doctest::Approx(std::log(std::cosh(1.0))).epsilon(1e-12));
}

TEST_CASE("pressure is monotone in the potential") {
  Rng rng(2);
  for (int t = 0; t < 6; ++t) {
    const Potential f = random_potential(two, 2, rng.raw(), 1.0);
    Potential g = f;
    for (double& v : g.values) v += rng.uniform(0.0, 1.0);
    CHECK(pressure(f, two) <= pressure(g, two) + 1e-12);
  }
}

TEST_CASE("equilibrium cylinders are the analytic pressure gradient") {
  Rng rng(9);
  for (int t = 0; t < 4; ++t) {
    const int m = 2 + static_cast<int>(rng.raw() % 2);
    const Alphabet alphabet = Alphabet::uniform_finite(m);
    const Potential g = random_potential(alphabet, 2, rng.raw(), 1.0);
    const std::vector<double> analytic = equilibrium_cylinders(g);

    double total = 0.0;
    for (double w : analytic) total += w;
    CHECK(std::abs(total - 1.0) <= 1e-11);

    const double step = 1e-6;
    for (std::size_t w = 0; w < analytic.size(); ++w) {
      Potential up = g, down = g;
      up.values[w] += step;
      down.values[w] -= step;
      const double fd =
          (pressure(up, alphabet) - pressure(down, alphabet)) / (2.0 * step);
      CHECK(std::abs(fd - analytic[w]) <=
            1e-6 * std::max(1e-12, std::abs(analytic[w])));
    }
  }
}

TEST_CASE("equilibrium cylinders match the gibbs pair weights at depth 2") {
  const Potential f = ising_potential(two, 1.0);
  const std::vector<double> cylinders = equilibrium_cylinders(f);
  const MarkovMeasure mu = equilibrium_state(f, two);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      CHECK(cylinders[static_cast<std::size_t>(a) * 2 + b] ==
            doctest::Approx(mu.pair_at(a, b)).epsilon(1e-11));
}

TEST_CASE("variational entropy of the product measure is zero") {
  const MarkovMeasure p = product_measure(two);
  OptimizationConfig cfg;
  cfg.restarts = 3;
  const VariationalReport report = entropy_variational(p, cfg);
  CHECK(std::abs(report.h_v) <= 1e-8);
  CHECK(std::abs(report.h_s) <= 1e-14);
  CHECK(report.gap <= 1e-8);
  CHECK(std::abs(pressure(report.minimizer, two)) <= 1e-10);
}

TEST_CASE("variational entropy recovers the specific entropy on the ising chain") {
  const MarkovMeasure gibbs = equilibrium_state(ising_potential(two, 1.0), two);
  OptimizationConfig cfg;
  const VariationalReport report = entropy_variational(gibbs, cfg);
  CHECK(report.gap <= 1e-6);
  CHECK(report.pressure_check <= 1e-10);
  CHECK(report.converged);

  // the gauge-fixed minimizer generates the same equilibrium measure
  const MarkovMeasure back = equilibrium_state(report.minimizer, two);
  CHECK(pair_distance(back, gibbs) <= 1e-5);
}

TEST_CASE("variational entropy matches h^s on random markov measures") {
  Rng rng(77);
  for (int t = 0; t < 6; ++t) {
    const int m = 2 + static_cast<int>(rng.raw() % 2);
    const Alphabet alphabet = Alphabet::uniform_finite(m);
    const MarkovMeasure mu = random_markov(alphabet, rng.raw());
    OptimizationConfig cfg;
    cfg.seed = rng.raw();
    cfg.restarts = 2;
    const VariationalReport report = entropy_variational(mu, cfg);
    CHECK(report.gap <= 1e-4);
  }
}

TEST_CASE("every depth-2 potential gives a one-sided entropy bound") {
  Rng rng(31);
  const MarkovMeasure mu = random_markov(two, 400);
  const double hs = specific_entropy_markov(mu);
  for (int t = 0; t < 20; ++t) {
    const Potential g = random_potential(two, 2, rng.raw(), 1.5);
    const double bound = -integrate_local(mu, g) + pressure(g, two);
    CHECK(hs <= bound + 1e-12);
  }
}

TEST_CASE("equilibrium states of trivial potentials") {
  const MarkovMeasure from_zero = equilibrium_state(constant_potential(two, 0.0), two);
  const MarkovMeasure from_const = equilibrium_state(constant_potential(two, 2.2), two);
  const MarkovMeasure p = product_measure(two);
  CHECK(pair_distance(from_zero, p) <= 1e-12);
  CHECK(pair_distance(from_const, p) <= 1e-12);
}

TEST_CASE("equilibrium state attains the variational supremum") {
  const Potential f = ising_potential(two, 1.0);
  const MarkovMeasure mu = equilibrium_state(f, two);
  const double value = specific_entropy_markov(mu) + integrate_local(mu, f);
  CHECK(std::abs(value - std::log(std::cosh(1.0))) <= 1e-10);
  CHECK(mu.pair_at(0, 0) ==
        doctest::Approx(std::exp(1.0) / (4.0 * std::cosh(1.0))).epsilon(1e-12));
}

TEST_CASE("pressure variational check") {
  const PressureCheckReport zero =
      pressure_variational_check(constant_potential(two, 0.0), two, 30, 5);
  CHECK(zero.pass);
  CHECK(std::abs(zero.log_lambda) <= 1e-13);
  CHECK(std::abs(zero.sup_value) <= 1e-10);

  const PressureCheckReport ising =
      pressure_variational_check(ising_potential(two, 1.0), two, 100, 6);
  CHECK(ising.pass);
  CHECK(ising.max_violation <= 1e-12);
  CHECK(ising.equality_residual <= 1e-10);
  CHECK(ising.min_deficit >= -1e-12);
}

TEST_CASE("uniqueness probe") {
  const Potential f = ising_potential(two, 1.0);
  const UniquenessReport report = uniqueness_probe(f, two, 100, 0.05, 31);
  CHECK(report.trials.size() == 100);
  CHECK(report.min_h > 0.0);
  CHECK(report.fitted_order == doctest::Approx(2.0).epsilon(0.15));
  for (const UniquenessTrial& t : report.trials) {
    CHECK(t.distance > 1e-8);
    CHECK(t.h > 0.0);
    CHECK(t.h_half < t.h);
  }

  // shrinking the perturbation shrinks the rate roughly quadratically
  const UniquenessReport fine = uniqueness_probe(f, two, 20, 0.0125, 31);
  CHECK(fine.min_h > 0.0);
  CHECK(fine.min_h < report.min_h);
}

TEST_CASE("uniqueness probe with zero perturbation returns zero rate") {
  const Potential f = ising_potential(two, 0.5);
  const UniquenessReport report = uniqueness_probe(f, two, 3, 0.0, 7);
  for (const UniquenessTrial& t : report.trials) {
    CHECK(std::abs(t.h) <= 1e-12);
    CHECK(t.distance <= 1e-14);
  }
}
