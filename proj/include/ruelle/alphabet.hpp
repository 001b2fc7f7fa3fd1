#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ruelle {

enum class QuadratureRule { midpoint, gauss };

// Symbol space with its a priori probability weights. Finite alphabets carry
// the symbols 0..m-1 directly; a compact interval is represented by
// quadrature nodes whose weights absorb the a priori density. Weights are
// strictly positive (full support) and sum to 1.
class Alphabet {
 public:
  enum class Kind { finite, discretized };
  enum class Metric { discrete, absolute_difference, circle_arc };

  static Alphabet uniform_finite(int m);
  static Alphabet weighted_finite(std::vector<double> weights);
  static Alphabet discretize_interval(double lo, double hi,
                                      const std::function<double(double)>& density,
                                      int n_nodes, QuadratureRule rule);

  int size() const { return static_cast<int>(weights_.size()); }
  Kind kind() const { return kind_; }
  Metric metric() const { return metric_; }
  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  double point(int a) const { return points_[static_cast<std::size_t>(a)]; }
  double weight(int a) const { return weights_[static_cast<std::size_t>(a)]; }

  // Base metric d_A between two symbols.
  double distance(int a, int b) const;

  // Spin/coordinate value used by the bilinear (Ising-type) potential
  // family: +1/-1 on the two-symbol finite alphabet, the node coordinate on
  // a discretized one.
  double spin(int a) const;

  bool same_support(const Alphabet& other) const;

  friend void to_json(nlohmann::json& j, const Alphabet& a);
  friend void from_json(const nlohmann::json& j, Alphabet& a);

  Alphabet() = default;  // for deserialization only

 private:
  Alphabet(Kind kind, std::vector<double> points, std::vector<double> weights,
           Metric metric, double circumference);
  void validate() const;

  Kind kind_ = Kind::finite;
  std::vector<double> points_;
  std::vector<double> weights_;
  Metric metric_ = Metric::discrete;
  double circumference_ = 0.0;  // circle_arc only
};

// Integral against the a priori weights: sum_a w_a f(a). f takes the symbol
// index; use alphabet.point(a) inside f for coordinate-dependent integrands.
template <class F>
double integrate(const Alphabet& alphabet, F&& f) {
  double sum = 0.0, carry = 0.0;
  for (int a = 0; a < alphabet.size(); ++a) {
    const double x = alphabet.weight(a) * f(a);
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

// Gauss-Legendre nodes/weights on [-1, 1], exposed for tests.
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace ruelle
