#include "ruelle/alphabet.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ruelle/errors.hpp"

namespace ruelle {

namespace {

constexpr double kWeightSumTol = 1e-12;

std::string metric_name(Alphabet::Metric m) {
  switch (m) {
    case Alphabet::Metric::discrete: return "discrete";
    case Alphabet::Metric::absolute_difference: return "absolute-difference";
    case Alphabet::Metric::circle_arc: return "circle";
  }
  return "discrete";
}

Alphabet::Metric metric_from_name(const std::string& name) {
  if (name == "discrete") return Alphabet::Metric::discrete;
  if (name == "absolute-difference")
    return Alphabet::Metric::absolute_difference;
  if (name == "circle") return Alphabet::Metric::circle_arc;
  throw std::invalid_argument("unknown metric: " + name);
}

}  // namespace

Alphabet::Alphabet(Kind kind, std::vector<double> points,
                   std::vector<double> weights, Metric metric,
                   double circumference)
    : kind_(kind),
      points_(std::move(points)),
      weights_(std::move(weights)),
      metric_(metric),
      circumference_(circumference) {
  validate();
}

void Alphabet::validate() const {
  if (points_.empty() || points_.size() != weights_.size())
    throw std::invalid_argument("alphabet: points/weights size mismatch");
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw DegenerateMeasureError(
          "alphabet: a priori weights must be strictly positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTol)
    throw std::invalid_argument("alphabet: weights must sum to 1");
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i] == points_[j])
        throw std::invalid_argument("alphabet: points must be distinct");
}

Alphabet Alphabet::uniform_finite(int m) {
  if (m < 1) throw std::invalid_argument("uniform_finite: m must be >= 1");
  std::vector<double> points(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) points[static_cast<std::size_t>(a)] = a;
  std::vector<double> weights(static_cast<std::size_t>(m), 1.0 / m);
  return Alphabet(Kind::finite, std::move(points), std::move(weights),
                  Metric::discrete, 0.0);
}

Alphabet Alphabet::weighted_finite(std::vector<double> weights) {
  if (weights.empty())
    throw std::invalid_argument("weighted_finite: empty weight vector");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w))
      throw DegenerateMeasureError(
          "weighted_finite: weights must be strictly positive");
    sum += w;
  }
  for (double& w : weights) w /= sum;
  std::vector<double> points(weights.size());
  for (std::size_t a = 0; a < weights.size(); ++a)
    points[a] = static_cast<double>(a);
  return Alphabet(Kind::finite, std::move(points), std::move(weights),
                  Metric::discrete, 0.0);
}

// Nodes and weights via Newton iteration on the Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
}

Alphabet Alphabet::discretize_interval(
    double lo, double hi, const std::function<double(double)>& density,
    int n_nodes, QuadratureRule rule) {
  if (!(lo < hi))
    throw std::invalid_argument("discretize_interval: need lo < hi");
  if (n_nodes < 1)
    throw std::invalid_argument("discretize_interval: need n_nodes >= 1");

  std::vector<double> nodes(static_cast<std::size_t>(n_nodes));
  std::vector<double> qw(static_cast<std::size_t>(n_nodes));
  if (rule == QuadratureRule::midpoint) {
    const double h = (hi - lo) / n_nodes;
    for (int i = 0; i < n_nodes; ++i) {
      nodes[static_cast<std::size_t>(i)] = lo + (i + 0.5) * h;
      qw[static_cast<std::size_t>(i)] = h;
    }
  } else {
    std::vector<double> x, w;
    gauss_legendre(n_nodes, x, w);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int i = 0; i < n_nodes; ++i) {
      nodes[static_cast<std::size_t>(i)] = mid + half * x[static_cast<std::size_t>(i)];
      qw[static_cast<std::size_t>(i)] = half * w[static_cast<std::size_t>(i)];
    }
  }

  double mass = 0.0;
  std::vector<double> weights(static_cast<std::size_t>(n_nodes));
  for (int i = 0; i < n_nodes; ++i) {
    const double d = density(nodes[static_cast<std::size_t>(i)]);
    if (d < 0.0 || !std::isfinite(d))
      throw std::invalid_argument(
          "discretize_interval: density must be nonnegative and finite");
    weights[static_cast<std::size_t>(i)] = qw[static_cast<std::size_t>(i)] * d;
    mass += weights[static_cast<std::size_t>(i)];
  }
  if (!(mass > 1e-14))
    throw DegenerateMeasureError(
        "discretize_interval: density integrates to ~0 (no full support)");
  for (double& w : weights) w /= mass;
  for (double w : weights)
    if (!(w > 0.0))
      throw DegenerateMeasureError(
          "discretize_interval: density vanishes at a quadrature node");

  return Alphabet(Kind::discretized, std::move(nodes), std::move(weights),
                  Metric::absolute_difference, 0.0);
}

double Alphabet::distance(int a, int b) const {
  switch (metric_) {
    case Metric::discrete:
      return a == b ? 0.0 : 1.0;
    case Metric::absolute_difference:
      return std::abs(point(a) - point(b));
    case Metric::circle_arc: {
      const double d = std::abs(point(a) - point(b));
      return std::min(d, circumference_ - d);
    }
  }
  return 0.0;
}

double Alphabet::spin(int a) const {
  if (kind_ == Kind::discretized) return point(a);
  if (size() == 2) return a == 0 ? 1.0 : -1.0;
  throw std::invalid_argument(
      "spin: defined for two-symbol finite or discretized alphabets");
}

bool Alphabet::same_support(const Alphabet& other) const {
  return kind_ == other.kind_ && points_ == other.points_;
}

void to_json(nlohmann::json& j, const Alphabet& a) {
  j = nlohmann::json{
      {"kind", a.kind_ == Alphabet::Kind::finite ? "finite" : "discretized"},
      {"points", a.points_},
      {"weights", a.weights_},
      {"metric", metric_name(a.metric_)}};
  if (a.metric_ == Alphabet::Metric::circle_arc)
    j["circumference"] = a.circumference_;
}

void from_json(const nlohmann::json& j, Alphabet& a) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "finite" && kind != "discretized")
    throw std::invalid_argument("alphabet: unknown kind " + kind);
  Alphabet parsed(
      kind == "finite" ? Alphabet::Kind::finite : Alphabet::Kind::discretized,
      j.at("points").get<std::vector<double>>(),
      j.at("weights").get<std::vector<double>>(),
      metric_from_name(j.at("metric").get<std::string>()),
      j.value("circumference", 0.0));
  a = std::move(parsed);
}

}  // namespace ruelle
