#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "ruelle/alphabet.hpp"
#include "ruelle/potential.hpp"
#include "ruelle/transfer.hpp"

namespace ruelle {

// Shift-invariant pair-Markov measure: single-site marginal pi plus the pair
// cylinder weights mu[x1 = a, x2 = b]. Consistency (both row and column sums
// of pair equal pi) makes every cylinder weight well defined through the
// backward chain mu[a0 w] = P(a0 | w1) mu[w] with P(a|b) = pair[a,b] / pi_b.
struct MarkovMeasure {
  Alphabet alphabet;
  std::vector<double> pi;    // m entries
  std::vector<double> pair;  // m*m entries, row-major [a*m + b]

  double pair_at(int a, int b) const {
    return pair[static_cast<std::size_t>(a) * pi.size() +
                static_cast<std::size_t>(b)];
  }
};

// Checks normalization, consistency and nonnegativity; throws on violation.
void validate(const MarkovMeasure& mu, double tol = 1e-10);

// The a priori product measure p x p x ...
MarkovMeasure product_measure(const Alphabet& alphabet);

// The Gibbs measure of a normalized depth-2 potential: the unique fixed
// point of the dual operator, with pair[a,b] = p_a e^{fbar(a,b)} pi_b.
MarkovMeasure gibbs_from_normalized(const Potential& fbar,
                                    const Alphabet& alphabet,
                                    double normalization_tol = 1e-9);

double cylinder_weight(const MarkovMeasure& mu, std::span<const int> word);

// All m^n cylinder weights of the given length in lexicographic order.
std::vector<double> marginal(const MarkovMeasure& mu, int length);

// integral of a depth-k potential: sum over A^k of mu[w] f(w).
double integrate_local(const MarkovMeasure& mu, const Potential& f);

// One path of the measure, deterministic per seed.
Word sample_path(const MarkovMeasure& mu, int length, std::uint64_t seed);

// Random shift-invariant measure: a positive random pair tensor projected
// onto the consistency constraints by iterative proportional fitting.
MarkovMeasure random_markov(const Alphabet& alphabet, std::uint64_t seed);

// Convex mixture: pair constraints are linear, so this stays admissible.
MarkovMeasure mix(const MarkovMeasure& a, const MarkovMeasure& b, double t);

// max |pair difference|, the pair-distance used by uniqueness statements.
double pair_distance(const MarkovMeasure& a, const MarkovMeasure& b);

void to_json(nlohmann::json& j, const MarkovMeasure& mu);
void from_json(const nlohmann::json& j, MarkovMeasure& mu);

}  // namespace ruelle
