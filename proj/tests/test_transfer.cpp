#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ruelle/errors.hpp"
#include "ruelle/rng.hpp"
#include "ruelle/transfer.hpp"

using namespace ruelle;

namespace {
const Alphabet two = Alphabet::uniform_finite(2);
}

TEST_CASE("transfer matrix of the zero potential is the averaging matrix") {
  const TransferMatrix m = build_transfer(constant_potential(two, 0.0), two);
  CHECK(m.dim() == 2);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      CHECK(m.entry(r, c) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("ising transfer entries") {
  const TransferMatrix m = build_transfer(ising_potential(two, 1.0), two);
  CHECK(m.entry(0, 0) == doctest::Approx(0.5 * std::exp(1.0)).epsilon(1e-15));
  CHECK(m.entry(0, 1) == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-15));
  CHECK(m.entry(1, 0) == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-15));
  CHECK(m.entry(1, 1) == doctest::Approx(0.5 * std::exp(1.0)).epsilon(1e-15));
}

TEST_CASE("the zero potential fixes the constant function") {
  const TransferMatrix m = build_transfer(constant_potential(two, 0.0), two);
  const std::vector<double> ones = apply_n(m, {1.0, 1.0}, 1);
  CHECK(ones[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ones[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rpf data for trivial potentials") {
  const SpectralData zero = rpf_solve(build_transfer(constant_potential(two, 0.0), two));
  CHECK(zero.lambda == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(zero.h[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(zero.h[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(zero.nu[0] == doctest::Approx(0.5).epsilon(1e-12));

  const SpectralData c = rpf_solve(build_transfer(constant_potential(two, 0.31), two));
  CHECK(c.lambda == doctest::Approx(std::exp(0.31)).epsilon(1e-13));
}

TEST_CASE("rpf eigenvalue of the ising chain is cosh(beta)") {
  for (double beta : {0.25, 0.5, 1.0, 2.0}) {
    const SpectralData s = rpf_solve(build_transfer(ising_potential(two, beta), two));
    CHECK(std::abs(s.lambda - std::cosh(beta)) <= 1e-11);
    CHECK(std::abs(s.h[0] - s.h[1]) <= 1e-11);
    CHECK(std::abs(s.nu[0] - 0.5) <= 1e-11);
    CHECK(s.residual_h <= 1e-13);
    CHECK(s.residual_nu <= 1e-13);
    // normalization conventions
    CHECK(std::abs(s.nu[0] + s.nu[1] - 1.0) <= 1e-12);
    CHECK(std::abs(s.h[0] * s.nu[0] + s.h[1] * s.nu[1] - 1.0) <= 1e-10);
  }
}

TEST_CASE("normalization of trivial potentials gives the zero potential") {
  for (double c : {0.0, 0.85}) {
    const Potential f = constant_potential(two, c);
    const Potential fbar = normalize(f, rpf_solve(build_transfer(f, two)));
    for (double v : fbar.values) CHECK(std::abs(v) <= 1e-12);
  }
}

TEST_CASE("normalized ising potential") {
  const Potential f = ising_potential(two, 1.0);
  const Potential fbar = normalize(f, rpf_solve(build_transfer(f, two)));
  const double expected_same = 1.0 - std::log(std::cosh(1.0));
  const double expected_diff = -1.0 - std::log(std::cosh(1.0));
  CHECK(fbar.values[0] == doctest::Approx(expected_same).epsilon(1e-12));
  CHECK(fbar.values[1] == doctest::Approx(expected_diff).epsilon(1e-12));
  CHECK(normalization_residual(fbar) <= 1e-12);
}

TEST_CASE("normalization residual is small for random potentials") {
  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    const int m = 2 + static_cast<int>(rng.raw() % 4);
    const Alphabet alphabet = Alphabet::uniform_finite(m);
    const Potential f = random_potential(alphabet, 2, rng.raw(), 1.0);
    const Potential fbar = normalize(f, rpf_solve(build_transfer(f, alphabet)));
    CHECK(normalization_residual(fbar) <= 1e-11);
  }
}

TEST_CASE("apply_n basics") {
  const TransferMatrix m = build_transfer(ising_potential(two, 0.7), two);
  const std::vector<double> phi = {0.3, 1.7};
  CHECK(apply_n(m, phi, 0) == phi);

  const Potential f = ising_potential(two, 0.7);
  const Potential fbar = normalize(f, rpf_solve(build_transfer(f, two)));
  const TransferMatrix mbar = build_transfer(fbar, two);
  const std::vector<double> ones = apply_n(mbar, {1.0, 1.0}, 6);
  CHECK(ones[0] == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(ones[1] == doctest::Approx(1.0).epsilon(1e-11));

  // zero potential averages any vector in one step
  const TransferMatrix avg = build_transfer(constant_potential(two, 0.0), two);
  const std::vector<double> mixed = apply_n(avg, {1.0, 0.0}, 1);
  CHECK(mixed[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(mixed[1] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("spectral radius estimate") {
  const auto trivial = spectral_radius_estimate(constant_potential(two, 0.0), two, 5);
  CHECK(trivial.value == doctest::Approx(1.0).epsilon(1e-13));

  const auto scaled = spectral_radius_estimate(constant_potential(two, 0.4), two, 7);
  CHECK(scaled.value == doctest::Approx(std::exp(0.4)).epsilon(1e-13));

  const auto ising = spectral_radius_estimate(ising_potential(two, 1.0), two, 20);
  CHECK(std::abs(ising.value - std::cosh(1.0)) <= 1e-6);
  CHECK(std::abs(ising.gap) <= 1e-6);
}

TEST_CASE("log-space estimate survives large potentials") {
  const auto est = spectral_radius_estimate(constant_potential(two, 300.0), two, 8);
  CHECK(est.value == doctest::Approx(std::exp(300.0)).epsilon(1e-10));
}

TEST_CASE("homogeneity: adding a constant scales the eigenvalue") {
  Rng rng(3);
  for (int t = 0; t < 8; ++t) {
    const Potential f = random_potential(two, 2, rng.raw(), 1.0);
    const double c = rng.uniform(-2.0, 2.0);
    const double lam = rpf_solve(build_transfer(f, two)).lambda;
    const double lam_shift = rpf_solve(build_transfer(f.shifted(c), two)).lambda;
    CHECK(lam_shift == doctest::Approx(std::exp(c) * lam).epsilon(1e-11));
  }
}

TEST_CASE("duality: the eigenmeasure of a normalized potential is invariant") {
  Rng rng(5);
  const Potential f = random_potential(two, 2, 77, 1.0);
  const Potential fbar = normalize(f, rpf_solve(build_transfer(f, two)));
  const TransferMatrix mbar = build_transfer(fbar, two);
  const SpectralData sbar = rpf_solve(mbar);
  CHECK(sbar.lambda == doctest::Approx(1.0).epsilon(1e-12));
  for (int t = 0; t < 10; ++t) {
    std::vector<double> phi = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const std::vector<double> lphi = apply_n(mbar, phi, 1);
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      lhs += lphi[i] * sbar.nu[i];
      rhs += phi[i] * sbar.nu[i];
    }
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
  }
}

TEST_CASE("pressure is convex along potential mixtures") {
  Rng rng(29);
  for (int t = 0; t < 10; ++t) {
    const Potential f = random_potential(two, 2, rng.raw(), 1.0);
    const Potential g = random_potential(two, 2, rng.raw(), 1.0);
    Potential mid = f;
    for (std::size_t i = 0; i < mid.values.size(); ++i)
      mid.values[i] = 0.5 * (f.values[i] + g.values[i]);
    const double pf = std::log(rpf_solve(build_transfer(f, two)).lambda);
    const double pg = std::log(rpf_solve(build_transfer(g, two)).lambda);
    const double pm = std::log(rpf_solve(build_transfer(mid, two)).lambda);
    CHECK(pm <= 0.5 * (pf + pg) + 1e-12);
  }
}

TEST_CASE("positivity is preserved") {
  const TransferMatrix m = build_transfer(random_potential(two, 2, 9, 2.0), two);
  const std::vector<double> out = apply_n(m, {0.2, 3.0}, 3);
  for (double x : out) CHECK(x > 0.0);
}

TEST_CASE("depth-3 potentials use the lifted index space") {
  const Potential f = random_potential(two, 3, 12, 0.8);
  const TransferMatrix m = build_transfer(f, two);
  CHECK(m.dim() == 4);
  const SpectralData s = rpf_solve(m);
  CHECK(s.lambda > 0.0);
  CHECK(s.residual_h <= 1e-13);
  const Potential fbar = normalize(f, s);
  CHECK(fbar.depth == 3);
  CHECK(normalization_residual(fbar) <= 1e-11);
}

TEST_CASE("overflow and non-convergence are reported") {
  CHECK_THROWS_AS(build_transfer(constant_potential(two, 1000.0), two),
                  OverflowError);
  RpfOptions strict;
  strict.max_iter = 1;
  CHECK_THROWS_AS(rpf_solve(build_transfer(ising_potential(two, 1.0), two), strict),
                  ConvergenceError);
}
