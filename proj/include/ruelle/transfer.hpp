#pragma once

#include <vector>

#include <json.hpp>

#include "ruelle/alphabet.hpp"
#include "ruelle/potential.hpp"

namespace ruelle {

// Matrix form of the transfer operator for a depth-k potential, acting on
// functions of r = k-1 coordinates (depth-1 potentials are lifted to depth 2).
// Row u, column (a, u_1..u_{r-1}): weight_a * exp(f(a.u)). For r = 1 the
// matrix is strictly positive; for r >= 2 it is primitive with m nonzero
// entries per row, and power iteration applies unchanged.
struct TransferMatrix {
  int order = 1;  // r
  Alphabet alphabet;
  std::vector<double> entries;  // dense (m^r x m^r), row-major

  std::size_t dim() const;
  double entry(std::size_t row, std::size_t col) const {
    return entries[row * dim() + col];
  }
};

// Maximal eigendata: lambda with right eigenvector h (positive) and left
// eigenvector nu normalized so that sum(nu) = 1 and sum(h .* nu) = 1; then
// h .* nu is the invariant marginal of the Gibbs measure on the index space.
struct SpectralData {
  double lambda = 0.0;
  double log_lambda = 0.0;
  std::vector<double> h;
  std::vector<double> nu;
  double residual_h = 0.0;   // ||M h - lambda h||_inf / lambda
  double residual_nu = 0.0;  // ||M^T nu - lambda nu||_1 / lambda
  int iterations = 0;
};

struct RpfOptions {
  double tol = 1e-13;
  int max_iter = 100000;
};

TransferMatrix build_transfer(const Potential& f, const Alphabet& alphabet);

SpectralData rpf_solve(const TransferMatrix& matrix, RpfOptions opts = {});

// Cohomologous normalized potential: f + log h - log(h o sigma) - log lambda.
Potential normalize(const Potential& f, const SpectralData& spectral);

// max_u |sum_a p_a exp(f(a.u)) - 1|; zero exactly when f is normalized.
double normalization_residual(const Potential& f);

std::vector<double> apply_n(const TransferMatrix& matrix,
                            std::vector<double> phi, int n);

struct SpectralRadiusEstimate {
  double value = 0.0;       // ||L^n 1||_inf^{1/n}, computed in log space
  double rpf_lambda = 0.0;  // maximal eigenvalue from rpf_solve
  double gap = 0.0;         // value - rpf_lambda
};

SpectralRadiusEstimate spectral_radius_estimate(const Potential& f,
                                                const Alphabet& alphabet,
                                                int n);

void to_json(nlohmann::json& j, const SpectralData& s);

}  // namespace ruelle
