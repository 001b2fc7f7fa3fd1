#include "ruelle/entropy.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "ruelle/budget.hpp"
#include "ruelle/dlr.hpp"
#include "ruelle/kernels.hpp"

namespace ruelle {

namespace {

constexpr int kMaxWordLen = 64;

std::span<const int> decode(std::size_t index, int m, int n,
                            std::array<int, kMaxWordLen>& buf) {
  unpack_word(index, m, n, std::span<int>(buf.data(), static_cast<std::size_t>(n)));
  return {buf.data(), static_cast<std::size_t>(n)};
}

void finish_report(EntropyReport& r) {
  const std::size_t count = r.H.size();
  r.rates.assign(count, 0.0);
  for (std::size_t i = 0; i < count; ++i)
    if (r.H[i].finite) r.rates[i] = r.H[i].value / r.n_values[i];
  r.identity_residuals.assign(count, 0.0);
  r.affineness_residual = 0.0;
  for (std::size_t i = 2; i < count; ++i) {
    if (!(r.H[i].finite && r.H[i - 1].finite && r.H[i - 2].finite)) continue;
    const double second =
        std::abs(r.H[i].value - 2.0 * r.H[i - 1].value + r.H[i - 2].value);
    r.identity_residuals[i] = second;
    r.affineness_residual = std::max(r.affineness_residual, second);
  }
  if (count >= 2 && r.H[count - 1].finite && r.H[count - 2].finite)
    r.extrapolated_limit =
        ExtReal::of(r.H[count - 1].value - r.H[count - 2].value);
  else if (count >= 1)
    r.extrapolated_limit = r.H[count - 1];
}

}  // namespace

ExtReal relative_entropy_volume(const MarkovMeasure& mu,
                                const MarkovMeasure& nu, int n) {
  if (n < 1)
    throw std::invalid_argument("relative_entropy_volume: n must be >= 1");
  if (!mu.alphabet.same_support(nu.alphabet))
    throw std::invalid_argument("relative_entropy_volume: alphabet mismatch");
  const int m = mu.alphabet.size();
  const std::size_t count = checked_word_count(m, n);

  // absolute continuity first: any mu-positive, nu-null cylinder means +inf
  const double violation = kernels::max_indexed(count, [&](std::size_t w) {
    std::array<int, kMaxWordLen> buf{};
    const auto word = decode(w, m, n, buf);
    return (cylinder_weight(mu, word) > 0.0 && cylinder_weight(nu, word) <= 0.0)
               ? 1.0
               : 0.0;
  });
  if (violation > 0.0) return ExtReal::pos_inf();

  const double sum = kernels::sum_indexed(count, [&](std::size_t w) {
    std::array<int, kMaxWordLen> buf{};
    const auto word = decode(w, m, n, buf);
    const double mw = cylinder_weight(mu, word);
    if (mw <= 0.0) return 0.0;
    return mw * std::log(mw / cylinder_weight(nu, word));
  });
  return ExtReal::of(sum);
}

ExtReal volume_entropy(const MarkovMeasure& mu, int n) {
  return relative_entropy_volume(mu, product_measure(mu.alphabet), n).negate();
}

EntropyReport specific_entropy_limit(const MarkovMeasure& mu, int n_max) {
  if (n_max < 1)
    throw std::invalid_argument("specific_entropy_limit: n_max must be >= 1");
  EntropyReport r;
  for (int n = 1; n <= n_max; ++n) {
    r.n_values.push_back(n);
    r.H.push_back(volume_entropy(mu, n));
  }
  finish_report(r);
  r.closed_form = specific_entropy_markov(mu);
  return r;
}

double specific_entropy_markov(const MarkovMeasure& mu) {
  const int m = mu.alphabet.size();
  kernels::KahanSum acc;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const double w = mu.pair_at(a, b);
      if (w <= 0.0) continue;  // 0 log 0 = 0; consistency rules out w>0, pi_b=0
      acc.add(w * std::log(w / (mu.alphabet.weight(a) *
                                mu.pi[static_cast<std::size_t>(b)])));
    }
  return -acc.value();
}

double markovization_entropy(const std::vector<double>& weights_k,
                             const std::vector<double>& weights_km1,
                             const Alphabet& alphabet, int k) {
  if (k < 2)
    throw std::invalid_argument("markovization_entropy: k must be >= 2");
  const int m = alphabet.size();
  const std::size_t count = checked_word_count(m, k);
  const std::size_t suffix_count = count / static_cast<std::size_t>(m);
  if (weights_k.size() != count || weights_km1.size() != suffix_count)
    throw std::invalid_argument("markovization_entropy: shape mismatch");
  kernels::KahanSum acc;
  for (std::size_t w = 0; w < count; ++w) {
    const double rho = weights_k[w];
    if (rho <= 0.0) continue;
    const int first = static_cast<int>(w / suffix_count);
    const double tail = weights_km1[w % suffix_count];
    acc.add(rho * std::log(rho / (alphabet.weight(first) * tail)));
  }
  return -acc.value();
}

ExtReal relative_entropy_rate(const MarkovMeasure& mu, const Potential& f,
                              const SpectralData& spectral) {
  const double hs = specific_entropy_markov(mu);
  return ExtReal::of(spectral.log_lambda - integrate_local(mu, f) - hs);
}

EntropyReport relative_entropy_rate_empirical(const MarkovMeasure& mu,
                                              const MarkovMeasure& nu,
                                              int n_max) {
  if (n_max < 1)
    throw std::invalid_argument(
        "relative_entropy_rate_empirical: n_max must be >= 1");
  EntropyReport r;
  bool hit_infinity = false;
  for (int n = 1; n <= n_max; ++n) {
    r.n_values.push_back(n);
    if (hit_infinity) {
      // relative entropy is nondecreasing in the volume
      r.H.push_back(ExtReal::pos_inf());
      continue;
    }
    ExtReal h = relative_entropy_volume(mu, nu, n);
    hit_infinity = !h.finite;
    r.H.push_back(h);
  }
  finish_report(r);
  return r;
}

double kernel_entropy_identity(const MarkovMeasure& mu, const Potential& fbar,
                               const BoundaryCondition& y, int n) {
  if (n < 1)
    throw std::invalid_argument("kernel_entropy_identity: n must be >= 1");
  const int m = mu.alphabet.size();
  const std::size_t count = checked_word_count(m, n);
  const std::vector<double> kernel = gamma(fbar, n, y);

  const double lhs = kernels::sum_indexed(count, [&](std::size_t w) {
    std::array<int, kMaxWordLen> buf{};
    const auto word = decode(w, m, n, buf);
    const double mw = cylinder_weight(mu, word);
    if (mw <= 0.0) return 0.0;
    return mw * std::log(mw / kernel[w]);
  });

  const double vol = volume_entropy(mu, n).value;
  const double birkhoff = kernels::sum_indexed(count, [&](std::size_t w) {
    std::array<int, kMaxWordLen> buf{};
    const auto word = decode(w, m, n, buf);
    const double mw = cylinder_weight(mu, word);
    if (mw == 0.0) return 0.0;
    const Sequence spliced = concat(Word(word.begin(), word.end()), y);
    return mw * birkhoff_sum(fbar, n, spliced);
  });
  const double rhs = -vol - birkhoff;
  return std::abs(lhs - rhs);
}

void to_json(nlohmann::json& j, const ExtReal& x) {
  if (x.finite)
    j = x.value;
  else
    j = x.inf_sign > 0 ? "inf" : "-inf";
}

void to_json(nlohmann::json& j, const EntropyReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < r.H.size(); ++i) {
    nlohmann::json row{{"n", r.n_values[i]},
                       {"H", r.H[i]},
                       {"rate", r.rates[i]},
                       {"residual", r.identity_residuals[i]}};
    rows.push_back(row);
  }
  j = nlohmann::json{{"rows", rows},
                     {"extrapolated_limit", r.extrapolated_limit},
                     {"affineness_residual", r.affineness_residual}};
  if (r.closed_form) j["closed_form"] = *r.closed_form;
}

}  // namespace ruelle
