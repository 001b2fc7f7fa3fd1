#pragma once

#include <cstdint>
#include <vector>

#include "ruelle/entropy.hpp"
#include "ruelle/measures.hpp"
#include "ruelle/potential.hpp"

namespace ruelle {

// log lambda_f, the topological pressure of the potential.
double pressure(const Potential& f, const Alphabet& alphabet);

// Length-K cylinder weights of the equilibrium measure of a depth-K
// potential; this is also the gradient of pressure in the tensor entries.
std::vector<double> equilibrium_cylinders(const Potential& g);

struct OptimizationConfig {
  int family_depth = 2;  // K
  int max_iter = 20000;
  double step_tol = 1e-14;
  double grad_tol = 1e-9;
  int restarts = 5;
  std::uint64_t seed = 0;
};

struct VariationalReport {
  double h_v = 0.0;
  Potential minimizer;  // gauge-fixed so lambda(minimizer) = 1
  double h_s = 0.0;
  double gap = 0.0;             // |h_v - h_s|
  double pressure_check = 0.0;  // |F(normalized generator of mu) - h_s|
  int iterations = 0;
  bool converged = false;
};

// Variational entropy: numerical infimum of F(g) = -int g dmu + log lambda_g
// over depth-K tensors, by gradient descent with the analytic gradient
// -mu[w] + mu_g[w] and backtracking line search, multi-started.
VariationalReport entropy_variational(const MarkovMeasure& mu,
                                      const OptimizationConfig& cfg);

// The equilibrium state of f (depth <= 2): Gibbs measure of the normalized
// cohomologous potential.
MarkovMeasure equilibrium_state(const Potential& f, const Alphabet& alphabet);

struct PressureCheckReport {
  double log_lambda = 0.0;
  double sup_value = 0.0;           // max over trials of h^s(mu) + int f dmu
  double max_violation = 0.0;       // max(0, sup_value - log_lambda)
  double equality_residual = 0.0;   // |log_lambda - value at mu_f|
  double min_deficit = 0.0;         // min over trials of h(mu | mu_f)
  int trials = 0;
  bool pass = false;
};

// Checks sup_mu { h^s(mu) + int f dmu } = log lambda_f over random Markov
// measures plus the equilibrium state itself.
PressureCheckReport pressure_variational_check(const Potential& f,
                                               const Alphabet& alphabet,
                                               int trials, std::uint64_t seed);

struct UniquenessTrial {
  double distance = 0.0;  // pair-distance of the perturbed measure
  double h = 0.0;         // h(mu_eps | mu_f)
  double h_half = 0.0;    // same at eps/2
  double order = 0.0;     // log2(h / h_half)
};

struct UniquenessReport {
  std::vector<UniquenessTrial> trials;
  double min_h = 0.0;
  double fitted_order = 0.0;  // mean of per-trial orders
};

// Perturbs the equilibrium state inside the shift-invariant pair family and
// reports the relative-entropy rate back to it: positive off the equilibrium
// state, vanishing to second order as the perturbation shrinks.
UniquenessReport uniqueness_probe(const Potential& f, const Alphabet& alphabet,
                                  int trials, double eps, std::uint64_t seed);

}  // namespace ruelle
