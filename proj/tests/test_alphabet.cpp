#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ruelle/alphabet.hpp"
#include "ruelle/errors.hpp"
#include "ruelle/rng.hpp"

using namespace ruelle;

namespace {
const auto lebesgue = [](double) { return 1.0; };
}

TEST_CASE("uniform finite alphabets") {
  const Alphabet two = Alphabet::uniform_finite(2);
  CHECK(two.size() == 2);
  CHECK(two.weight(0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(two.weight(1) == doctest::Approx(0.5).epsilon(1e-15));

  const Alphabet one = Alphabet::uniform_finite(1);
  CHECK(one.size() == 1);
  CHECK(one.weight(0) == 1.0);

  const Alphabet three = Alphabet::uniform_finite(3);
  double sum = 0.0;
  for (int a = 0; a < 3; ++a) sum += three.weight(a);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(Alphabet::uniform_finite(0), std::invalid_argument);
}

TEST_CASE("weighted alphabets renormalize and require full support") {
  const Alphabet a = Alphabet::weighted_finite({2.0, 1.0, 1.0});
  CHECK(a.weight(0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(Alphabet::weighted_finite({1.0, 0.0}),
                  DegenerateMeasureError);
}

TEST_CASE("all constructed alphabets are probability measures") {
  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    std::vector<double> w(2 + t % 4);
    for (double& x : w) x = rng.uniform(0.1, 3.0);
    const Alphabet a = Alphabet::weighted_finite(w);
    double sum = 0.0, min_w = 1.0;
    for (int s = 0; s < a.size(); ++s) {
      sum += a.weight(s);
      min_w = std::min(min_w, a.weight(s));
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    CHECK(min_w > 0.0);
  }
}

TEST_CASE("midpoint discretization of the unit interval") {
  const Alphabet a =
      Alphabet::discretize_interval(0.0, 1.0, lebesgue, 2, QuadratureRule::midpoint);
  CHECK(a.point(0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(a.point(1) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(a.weight(0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(a.weight(1) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("gauss weights normalize and integrate moments exactly") {
  const Alphabet a =
      Alphabet::discretize_interval(0.0, 1.0, lebesgue, 64, QuadratureRule::gauss);
  double sum = 0.0;
  for (int s = 0; s < a.size(); ++s) sum += a.weight(s);
  CHECK(std::abs(sum - 1.0) <= 1e-14);

  const double first_moment = integrate(a, [&](int s) { return a.point(s); });
  CHECK(std::abs(first_moment - 0.5) <= 1e-14);
}

TEST_CASE("degenerate density is rejected") {
  CHECK_THROWS_AS(Alphabet::discretize_interval(
                      0.0, 1.0, [](double) { return 0.0; }, 8,
                      QuadratureRule::gauss),
                  DegenerateMeasureError);
  CHECK_THROWS_AS(Alphabet::discretize_interval(1.0, 0.0, lebesgue, 8,
                                                QuadratureRule::gauss),
                  std::invalid_argument);
}

TEST_CASE("integrate basics") {
  const Alphabet two = Alphabet::uniform_finite(2);
  CHECK(integrate(two, [](int) { return 1.0; }) == doctest::Approx(1.0));
  CHECK(integrate(two, [](int a) { return a == 0 ? 1.0 : 0.0; }) ==
        doctest::Approx(0.5));
}

TEST_CASE("integrate is linear") {
  Rng rng(5);
  const Alphabet a = Alphabet::weighted_finite({0.4, 1.1, 0.7, 0.9});
  for (int t = 0; t < 20; ++t) {
    std::vector<double> f(4), g(4);
    for (double& x : f) x = rng.uniform(-2.0, 2.0);
    for (double& x : g) x = rng.uniform(-2.0, 2.0);
    const double ca = rng.uniform(-3.0, 3.0), cb = rng.uniform(-3.0, 3.0);
    const double combined =
        integrate(a, [&](int s) { return ca * f[static_cast<std::size_t>(s)] +
                                         cb * g[static_cast<std::size_t>(s)]; });
    const double split = ca * integrate(a, [&](int s) { return f[static_cast<std::size_t>(s)]; }) +
                         cb * integrate(a, [&](int s) { return g[static_cast<std::size_t>(s)]; });
    CHECK(std::abs(combined - split) <= 1e-12);
  }
}

TEST_CASE("midpoint refinement converges monotonically on a smooth integrand") {
  auto integral_with = [&](int nodes) {
    const Alphabet a = Alphabet::discretize_interval(0.0, 1.0, lebesgue, nodes,
                                                     QuadratureRule::midpoint);
    return integrate(a, [&](int s) { return std::exp(a.point(s)); });
  };
  double prev_gap = 1e9;
  double prev = integral_with(4);
  for (int nodes = 8; nodes <= 128; nodes *= 2) {
    const double current = integral_with(nodes);
    const double gap = std::abs(current - prev);
    CHECK(gap < prev_gap);
    prev_gap = gap;
    prev = current;
  }
}

TEST_CASE("alphabet JSON round trip") {
  const Alphabet a =
      Alphabet::discretize_interval(-1.0, 1.0, lebesgue, 8, QuadratureRule::gauss);
  nlohmann::json j = a;
  const Alphabet back = j.get<Alphabet>();
  CHECK(back.size() == a.size());
  for (int s = 0; s < a.size(); ++s) {
    CHECK(back.point(s) == a.point(s));
    CHECK(back.weight(s) == a.weight(s));
  }
  CHECK(back.metric() == a.metric());
}

TEST_CASE("metrics") {
  const Alphabet fin = Alphabet::uniform_finite(3);
  CHECK(fin.distance(0, 0) == 0.0);
  CHECK(fin.distance(0, 2) == 1.0);
  const Alphabet box =
      Alphabet::discretize_interval(0.0, 1.0, lebesgue, 4, QuadratureRule::midpoint);
  CHECK(box.distance(0, 3) == doctest::Approx(0.75).epsilon(1e-14));
}
