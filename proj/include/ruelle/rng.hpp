#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ruelle {

// Seeded generator with portable output. std::mt19937_64 has a fully
// specified output sequence, and we derive doubles from raw bits ourselves,
// so identical seeds give identical streams on every platform. The
// distribution classes from <random> are implementation-defined and are
// deliberately not used anywhere results must be reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Index into [0, n) proportional to the given nonnegative weights.
  int pick(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = uniform() * total;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      u -= weights[i];
      if (u < 0.0) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ruelle
