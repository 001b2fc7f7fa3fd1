#pragma once

#include <vector>

#include "ruelle/measures.hpp"
#include "ruelle/potential.hpp"
#include "ruelle/symbolic.hpp"

namespace ruelle {

// Finite-volume conditional kernel gamma_n(.|y) of a normalized potential:
// the weight of the length-n word w given boundary y is
// prod_i p_{w_i} * exp(S_n(fbar)(w y_{>n})). For a depth-k potential only the
// window y_{n+1..n+k-1} enters, so the kernel is materialized as one
// probability vector per boundary window.
struct GibbsKernel {
  Potential fbar;
  int n = 1;
  int window = 1;  // boundary coordinates that matter: depth - 1
  std::vector<std::vector<double>> table;  // [window word index][word index]

  const std::vector<double>& for_boundary(const BoundaryCondition& y) const;
};

GibbsKernel make_kernel(const Potential& fbar, int n,
                        double normalization_tol = 1e-9);

// gamma_n(.|y) as a probability vector over A^n in lexicographic order.
std::vector<double> gamma(const Potential& fbar, int n,
                          const BoundaryCondition& y,
                          double normalization_tol = 1e-9);

// mu gamma_n: the kernel integrated over the boundary against mu.
std::vector<double> mu_gamma(const MarkovMeasure& mu, const Potential& fbar,
                             int n, double normalization_tol = 1e-9);

// Total-variation distance between mu gamma_n and mu's own n-marginal;
// zero exactly on the Gibbs measure of fbar.
double dlr_check(const MarkovMeasure& mu, const Potential& fbar, int n,
                 double normalization_tol = 1e-9);

// max over boundary pairs agreeing on the first probe_depth coordinates past
// n of |int phi dgamma_n(.|y) - int phi dgamma_n(.|y')| for a local phi.
double quasilocality_gap(const Potential& fbar, int n, const Potential& phi,
                         int probe_depth, double normalization_tol = 1e-9);

}  // namespace ruelle
