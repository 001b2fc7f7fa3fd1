#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "ruelle/measures.hpp"
#include "ruelle/potential.hpp"
#include "ruelle/symbolic.hpp"
#include "ruelle/transfer.hpp"

namespace ruelle {

// Extended real for entropy bookkeeping. Infinities are an explicit flag
// (absolute-continuity failures), never a floating-point overflow.
struct ExtReal {
  double value = 0.0;
  bool finite = true;
  int inf_sign = 0;

  static ExtReal of(double v) { return {v, true, 0}; }
  static ExtReal pos_inf() { return {0.0, false, +1}; }
  static ExtReal neg_inf() { return {0.0, false, -1}; }
  ExtReal negate() const { return finite ? of(-value) : ExtReal{0.0, false, -inf_sign}; }
};

struct EntropyReport {
  std::vector<int> n_values;
  std::vector<ExtReal> H;                  // per-volume entropies
  std::vector<double> rates;               // H_n / n (finite entries only)
  std::optional<double> closed_form;
  std::vector<double> identity_residuals;  // per-n |second difference|
  ExtReal extrapolated_limit;
  double affineness_residual = 0.0;        // max second difference
};

// H_{Lambda_n}(mu | nu) = sum_w mu[w] log(mu[w] / nu[w]) over length-n words;
// +inf when mu charges a nu-null cylinder; 0 log 0 = 0.
ExtReal relative_entropy_volume(const MarkovMeasure& mu,
                                const MarkovMeasure& nu, int n);

// Volume entropy relative to the a priori product measure (nonpositive).
ExtReal volume_entropy(const MarkovMeasure& mu, int n);

// Finite-volume sequence of volume entropies with rates. For pair-Markov
// measures the sequence is affine in n, so the last increment is already the
// limit; the affineness residual reports how exactly that holds.
EntropyReport specific_entropy_limit(const MarkovMeasure& mu, int n_max);

// Closed form h^s(mu) = -sum_ab mu[ab] log(mu[ab] / (p_a pi_b)).
double specific_entropy_markov(const MarkovMeasure& mu);

// Entropy of the depth-k Markovization of a measure given its length-k and
// length-(k-1) cylinder weights: -sum_w rho[w] log(rho[w]/(p_{w1} rho[w'])),
// w' the length-(k-1) suffix.
double markovization_entropy(const std::vector<double>& weights_k,
                             const std::vector<double>& weights_km1,
                             const Alphabet& alphabet, int k);

// Relative-entropy rate against the equilibrium measure of f, by the
// identity rate = log lambda_f - int f dmu - h^s(mu).
ExtReal relative_entropy_rate(const MarkovMeasure& mu, const Potential& f,
                              const SpectralData& spectral);

// The same rate from the finite-volume sequence H_n(mu|nu)/n.
EntropyReport relative_entropy_rate_empirical(const MarkovMeasure& mu,
                                              const MarkovMeasure& nu,
                                              int n_max);

// |LHS - RHS| of the finite-volume kernel identity
// H_{Lambda_n}(mu | gamma_n(.|y)) = -Hvol_n(mu) - int S_n(fbar) dmu.
double kernel_entropy_identity(const MarkovMeasure& mu, const Potential& fbar,
                               const BoundaryCondition& y, int n);

void to_json(nlohmann::json& j, const ExtReal& x);
void to_json(nlohmann::json& j, const EntropyReport& r);

}  // namespace ruelle
