#include "ruelle/dlr.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "ruelle/budget.hpp"
#include "ruelle/errors.hpp"
#include "ruelle/kernels.hpp"

namespace ruelle {

namespace {

constexpr int kMaxWordLen = 64;

void require_normalized(const Potential& fbar, double tol) {
  const double res = normalization_residual(fbar);
  if (res > tol)
    throw ContractError("dlr: potential is not normalized (residual " +
                        std::to_string(res) + ")");
}

}  // namespace

const std::vector<double>& GibbsKernel::for_boundary(
    const BoundaryCondition& y) const {
  std::array<int, kMaxWordLen> buf{};
  for (int i = 0; i < window; ++i)
    buf[static_cast<std::size_t>(i)] =
        y.at(static_cast<std::size_t>(n + i));  // coordinates n+1 .. n+window
  const std::size_t idx = pack_word(
      std::span<const int>(buf.data(), static_cast<std::size_t>(window)),
      fbar.alphabet.size());
  return table[idx];
}

GibbsKernel make_kernel(const Potential& fbar, int n,
                        double normalization_tol) {
  if (n < 1) throw std::invalid_argument("make_kernel: n must be >= 1");
  require_normalized(fbar, normalization_tol);
  const int m = fbar.alphabet.size();
  const int window = std::max(fbar.depth, 2) - 1;
  const std::size_t words = checked_word_count(m, n);
  const std::size_t windows = checked_word_count(m, window);

  GibbsKernel kernel{fbar, n, window, {}};
  kernel.table.assign(windows, std::vector<double>(words));
  for (std::size_t b = 0; b < windows; ++b) {
    const Word boundary = word_from_index(b, m, window);
    auto& row = kernel.table[b];
    kernels::fill_indexed(words, row.data(), [&](std::size_t w) {
      std::array<int, kMaxWordLen> buf{};
      unpack_word(w, m, n, std::span<int>(buf.data(), static_cast<std::size_t>(n)));
      double log_weight = 0.0;
      for (int i = 0; i < n; ++i)
        log_weight +=
            std::log(fbar.alphabet.weight(buf[static_cast<std::size_t>(i)]));
      // S_n(fbar) on the spliced configuration w . boundary
      Word spliced(buf.begin(), buf.begin() + n);
      spliced.insert(spliced.end(), boundary.begin(), boundary.end());
      const Sequence x =
          concat(std::move(spliced), BoundaryCondition::constant(boundary.back()));
      log_weight += birkhoff_sum(fbar, n, x);
      return std::exp(log_weight);
    });
  }
  return kernel;
}

std::vector<double> gamma(const Potential& fbar, int n,
                          const BoundaryCondition& y,
                          double normalization_tol) {
  if (n < 1) throw std::invalid_argument("gamma: n must be >= 1");
  require_normalized(fbar, normalization_tol);
  const int m = fbar.alphabet.size();
  const std::size_t words = checked_word_count(m, n);
  std::vector<double> out(words);
  kernels::fill_indexed(words, out.data(), [&](std::size_t w) {
    std::array<int, kMaxWordLen> buf{};
    unpack_word(w, m, n, std::span<int>(buf.data(), static_cast<std::size_t>(n)));
    double log_weight = 0.0;
    for (int i = 0; i < n; ++i)
      log_weight +=
          std::log(fbar.alphabet.weight(buf[static_cast<std::size_t>(i)]));
    const Sequence x = concat(Word(buf.begin(), buf.begin() + n), y);
    log_weight += birkhoff_sum(fbar, n, x);
    return std::exp(log_weight);
  });
  return out;
}

std::vector<double> mu_gamma(const MarkovMeasure& mu, const Potential& fbar,
                             int n, double normalization_tol) {
  if (!mu.alphabet.same_support(fbar.alphabet))
    throw std::invalid_argument("mu_gamma: alphabet mismatch");
  const GibbsKernel kernel = make_kernel(fbar, n, normalization_tol);
  const int m = mu.alphabet.size();
  const std::size_t words = checked_word_count(m, n);
  const std::size_t windows = kernel.table.size();

  // the boundary window y_{n+1..n+window} has law equal to mu's own
  // window-marginal, by shift invariance
  const std::vector<double> window_law = marginal(mu, kernel.window);
  std::vector<double> out(words, 0.0);
  for (std::size_t b = 0; b < windows; ++b) {
    const double wb = window_law[b];
    if (wb <= 0.0) continue;
    const auto& row = kernel.table[b];
    for (std::size_t w = 0; w < words; ++w) out[w] += wb * row[w];
  }
  return out;
}

double dlr_check(const MarkovMeasure& mu, const Potential& fbar, int n,
                 double normalization_tol) {
  const std::vector<double> mixed = mu_gamma(mu, fbar, n, normalization_tol);
  const std::vector<double> own = marginal(mu, n);
  kernels::KahanSum acc;
  for (std::size_t w = 0; w < mixed.size(); ++w)
    acc.add(std::abs(mixed[w] - own[w]));
  return 0.5 * acc.value();
}

double quasilocality_gap(const Potential& fbar, int n, const Potential& phi,
                         int probe_depth, double normalization_tol) {
  if (probe_depth < 0)
    throw std::invalid_argument("quasilocality_gap: probe_depth must be >= 0");
  if (phi.depth > n)
    throw std::invalid_argument(
        "quasilocality_gap: local function must have depth <= n");
  const GibbsKernel kernel = make_kernel(fbar, n, normalization_tol);
  const int m = fbar.alphabet.size();
  const std::size_t words = kernel.table.front().size();

  // expectation of phi under each boundary-window kernel row
  std::vector<double> expectation(kernel.table.size());
  for (std::size_t b = 0; b < kernel.table.size(); ++b) {
    const auto& row = kernel.table[b];
    expectation[b] = kernels::sum_indexed(words, [&](std::size_t w) {
      std::array<int, kMaxWordLen> buf{};
      unpack_word(w, m, n, std::span<int>(buf.data(), static_cast<std::size_t>(n)));
      return row[w] *
             phi.at(std::span<const int>(buf.data(), static_cast<std::size_t>(n)));
    });
  }

  // boundaries agreeing on coordinates n+1 .. n+probe_depth share the first
  // `agree` symbols of the window word
  const int agree = std::min(probe_depth, kernel.window);
  const std::size_t shared = checked_word_count(m, agree);
  const std::size_t free_count = expectation.size() / shared;
  double gap = 0.0;
  for (std::size_t s = 0; s < shared; ++s)
    for (std::size_t i = 0; i < free_count; ++i)
      for (std::size_t j = i + 1; j < free_count; ++j)
        gap = std::max(gap, std::abs(expectation[s * free_count + i] -
                                     expectation[s * free_count + j]));
  return gap;
}

}  // namespace ruelle
