#include "ruelle/transfer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ruelle/budget.hpp"
#include "ruelle/errors.hpp"
#include "ruelle/kernels.hpp"

namespace ruelle {

namespace {

// Word (a, u_1, ..., u_r) for row word u and prepended symbol a.
void prepend_word(std::size_t u, int m, int r, int a, std::span<int> out) {
  out[0] = a;
  unpack_word(u, m, r, out.subspan(1));
}

double power_iterate(const TransferMatrix& matrix, std::vector<double>& vec,
                     bool transpose, const RpfOptions& opts, double* residual,
                     int* iterations) {
  const std::size_t dim = matrix.dim();
  std::vector<double> next(dim);
  double lambda = 0.0;
  double res = 0.0;
  for (int it = 1; it <= opts.max_iter; ++it) {
    if (transpose)
      kernels::matvec_transpose(matrix.entries.data(), vec.data(), next.data(),
                                dim, dim);
    else
      kernels::matvec(matrix.entries.data(), vec.data(), next.data(), dim, dim);

    double dot_vv = 0.0, dot_vn = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      dot_vv += vec[i] * vec[i];
      dot_vn += vec[i] * next[i];
    }
    const double rayleigh = dot_vn / dot_vv;

    res = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      res = std::max(res, std::abs(next[i] - rayleigh * vec[i]));

    double norm = 0.0;
    for (double x : next) norm = std::max(norm, std::abs(x));
    if (!(norm > 0.0) || !std::isfinite(norm))
      throw OverflowError("rpf_solve: iterate overflowed or vanished");
    for (std::size_t i = 0; i < dim; ++i) vec[i] = next[i] / norm;

    const bool rayleigh_settled =
        std::abs(rayleigh - lambda) < opts.tol * std::max(1.0, std::abs(rayleigh));
    lambda = rayleigh;
    if (rayleigh_settled && res <= opts.tol * lambda) {
      *iterations = it;
      *residual = res / lambda;
      return lambda;
    }
  }
  throw ConvergenceError("rpf_solve: power iteration did not converge",
                         res / std::max(lambda, 1e-300));
}

}  // namespace

std::size_t TransferMatrix::dim() const {
  std::size_t d = 1;
  for (int i = 0; i < order; ++i) d *= static_cast<std::size_t>(alphabet.size());
  return d;
}

TransferMatrix build_transfer(const Potential& f, const Alphabet& alphabet) {
  if (!f.alphabet.same_support(alphabet))
    throw std::invalid_argument("build_transfer: potential alphabet mismatch");
  const int m = alphabet.size();
  const int k = std::max(f.depth, 2);
  const int r = k - 1;
  const std::size_t dim = checked_word_count(m, r);
  checked_word_count(m, k);  // the build itself walks A^k

  TransferMatrix matrix{r, alphabet, std::vector<double>(dim * dim, 0.0)};
  const std::size_t tail = dim / static_cast<std::size_t>(m);  // m^{r-1}
  for (std::size_t u = 0; u < dim; ++u) {
    std::vector<int> word(static_cast<std::size_t>(k));
    for (int a = 0; a < m; ++a) {
      prepend_word(u, m, r, a, word);
      const std::size_t col =
          static_cast<std::size_t>(a) * tail + u / static_cast<std::size_t>(m);
      const double value = alphabet.weight(a) * std::exp(f.at(word));
      if (!std::isfinite(value))
        throw OverflowError(
            "build_transfer: exp overflow; rescale the potential");
      matrix.entries[u * dim + col] = value;
    }
  }
  return matrix;
}

SpectralData rpf_solve(const TransferMatrix& matrix, RpfOptions opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("rpf_solve: tol > 0");
  const std::size_t dim = matrix.dim();
  SpectralData out;
  out.h.assign(dim, 1.0);
  out.nu.assign(dim, 1.0);

  int it_h = 0, it_nu = 0;
  out.lambda = power_iterate(matrix, out.h, false, opts, &out.residual_h, &it_h);
  const double lambda_nu =
      power_iterate(matrix, out.nu, true, opts, &out.residual_nu, &it_nu);
  out.iterations = it_h + it_nu;
  if (std::abs(lambda_nu - out.lambda) >
      10.0 * opts.tol * std::max(1.0, out.lambda))
    throw ConvergenceError("rpf_solve: left/right eigenvalues disagree",
                           std::abs(lambda_nu - out.lambda));
  out.log_lambda = std::log(out.lambda);

  double nu_sum = 0.0;
  for (double x : out.nu) nu_sum += x;
  for (double& x : out.nu) x /= nu_sum;
  double pairing = 0.0;
  for (std::size_t i = 0; i < dim; ++i) pairing += out.h[i] * out.nu[i];
  for (double& x : out.h) x /= pairing;

  // residuals were measured against the unnormalized iterates; rescaling h
  // and nu leaves the relative residuals unchanged
  return out;
}

Potential normalize(const Potential& f, const SpectralData& spectral) {
  const int m = f.alphabet.size();
  const int k = std::max(f.depth, 2);
  const int r = k - 1;
  const std::size_t dim = checked_word_count(m, r);
  if (spectral.h.size() != dim)
    throw std::invalid_argument("normalize: spectral data has wrong dimension");

  std::vector<double> log_h(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(spectral.h[i] > 0.0))
      throw ContractError("normalize: eigenfunction must be positive");
    log_h[i] = std::log(spectral.h[i]);
  }

  const std::size_t count = checked_word_count(m, k);
  Potential fbar{k, std::vector<double>(count), f.alphabet};
  std::vector<int> word(static_cast<std::size_t>(k));
  for (std::size_t w = 0; w < count; ++w) {
    unpack_word(w, m, k, word);
    const std::size_t head = w / static_cast<std::size_t>(m);  // first r symbols
    const std::size_t shifted = w % dim;                       // last r symbols
    fbar.values[w] =
        f.at(word) + log_h[head] - log_h[shifted] - spectral.log_lambda;
  }
  return fbar;
}

double normalization_residual(const Potential& f) {
  const int m = f.alphabet.size();
  const int k = std::max(f.depth, 2);
  const int r = k - 1;
  const std::size_t dim = checked_word_count(m, r);
  std::vector<int> word(static_cast<std::size_t>(k));
  double worst = 0.0;
  for (std::size_t u = 0; u < dim; ++u) {
    kernels::KahanSum row;
    for (int a = 0; a < m; ++a) {
      prepend_word(u, m, r, a, word);
      row.add(f.alphabet.weight(a) * std::exp(f.at(word)));
    }
    worst = std::max(worst, std::abs(row.value() - 1.0));
  }
  return worst;
}

std::vector<double> apply_n(const TransferMatrix& matrix,
                            std::vector<double> phi, int n) {
  if (n < 0) throw std::invalid_argument("apply_n: n must be >= 0");
  const std::size_t dim = matrix.dim();
  if (phi.size() != dim)
    throw std::invalid_argument("apply_n: vector has wrong dimension");
  std::vector<double> next(dim);
  for (int step = 0; step < n; ++step) {
    kernels::matvec(matrix.entries.data(), phi.data(), next.data(), dim, dim);
    phi.swap(next);
  }
  return phi;
}

SpectralRadiusEstimate spectral_radius_estimate(const Potential& f,
                                                const Alphabet& alphabet,
                                                int n) {
  if (n < 1)
    throw std::invalid_argument("spectral_radius_estimate: n must be >= 1");
  const TransferMatrix matrix = build_transfer(f, alphabet);
  const std::size_t dim = matrix.dim();
  const int m = alphabet.size();
  const std::size_t tail = dim / static_cast<std::size_t>(m);

  // iterate log(L^t 1) with log-sum-exp rows; immune to overflow for any
  // potential scale
  std::vector<double> log_phi(dim, 0.0), next(dim);
  for (int t = 0; t < n; ++t) {
    for (std::size_t u = 0; u < dim; ++u) {
      double peak = -std::numeric_limits<double>::infinity();
      for (int a = 0; a < m; ++a) {
        const std::size_t col =
            static_cast<std::size_t>(a) * tail + u / static_cast<std::size_t>(m);
        const double term = std::log(matrix.entries[u * dim + col]) + log_phi[col];
        peak = std::max(peak, term);
      }
      double sum = 0.0;
      for (int a = 0; a < m; ++a) {
        const std::size_t col =
            static_cast<std::size_t>(a) * tail + u / static_cast<std::size_t>(m);
        sum += std::exp(std::log(matrix.entries[u * dim + col]) + log_phi[col] -
                        peak);
      }
      next[u] = peak + std::log(sum);
    }
    log_phi.swap(next);
  }
  double log_sup = log_phi[0];
  for (double x : log_phi) log_sup = std::max(log_sup, x);

  SpectralRadiusEstimate est;
  est.value = std::exp(log_sup / n);
  est.rpf_lambda = rpf_solve(matrix).lambda;
  est.gap = est.value - est.rpf_lambda;
  return est;
}

void to_json(nlohmann::json& j, const SpectralData& s) {
  j = nlohmann::json{{"lambda", s.lambda},
                     {"log_lambda", s.log_lambda},
                     {"h", s.h},
                     {"nu", s.nu},
                     {"residuals",
                      {{"eigenfunction", s.residual_h},
                       {"eigenmeasure", s.residual_nu}}},
                     {"iterations", s.iterations}};
}

}  // namespace ruelle
