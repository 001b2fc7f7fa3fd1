#include "ruelle/measures.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "ruelle/budget.hpp"
#include "ruelle/errors.hpp"
#include "ruelle/kernels.hpp"
#include "ruelle/rng.hpp"

namespace ruelle {

namespace {

constexpr int kMaxWordLen = 64;

std::vector<double> row_sums(const std::vector<double>& pair, int m) {
  std::vector<double> r(static_cast<std::size_t>(m), 0.0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      r[static_cast<std::size_t>(a)] +=
          pair[static_cast<std::size_t>(a) * m + b];
  return r;
}

std::vector<double> col_sums(const std::vector<double>& pair, int m) {
  std::vector<double> c(static_cast<std::size_t>(m), 0.0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      c[static_cast<std::size_t>(b)] +=
          pair[static_cast<std::size_t>(a) * m + b];
  return c;
}

}  // namespace

void validate(const MarkovMeasure& mu, double tol) {
  const int m = mu.alphabet.size();
  if (mu.pi.size() != static_cast<std::size_t>(m) ||
      mu.pair.size() != static_cast<std::size_t>(m) * m)
    throw std::invalid_argument("markov measure: shape mismatch");
  double pi_sum = 0.0, pair_sum = 0.0;
  for (double x : mu.pi) {
    if (x < 0.0 || !std::isfinite(x))
      throw std::invalid_argument("markov measure: negative marginal");
    pi_sum += x;
  }
  for (double x : mu.pair) {
    if (x < 0.0 || !std::isfinite(x))
      throw std::invalid_argument("markov measure: negative pair weight");
    pair_sum += x;
  }
  if (std::abs(pi_sum - 1.0) > tol || std::abs(pair_sum - 1.0) > tol)
    throw std::invalid_argument("markov measure: weights must sum to 1");
  const auto rows = row_sums(mu.pair, m);
  const auto cols = col_sums(mu.pair, m);
  for (int a = 0; a < m; ++a) {
    if (std::abs(rows[static_cast<std::size_t>(a)] -
                 mu.pi[static_cast<std::size_t>(a)]) > tol ||
        std::abs(cols[static_cast<std::size_t>(a)] -
                 mu.pi[static_cast<std::size_t>(a)]) > tol)
      throw std::invalid_argument(
          "markov measure: pair weights inconsistent with marginal");
  }
}

MarkovMeasure product_measure(const Alphabet& alphabet) {
  const int m = alphabet.size();
  MarkovMeasure mu{alphabet, alphabet.weights(),
                   std::vector<double>(static_cast<std::size_t>(m) * m)};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      mu.pair[static_cast<std::size_t>(a) * m + b] =
          alphabet.weight(a) * alphabet.weight(b);
  return mu;
}

MarkovMeasure gibbs_from_normalized(const Potential& fbar,
                                    const Alphabet& alphabet,
                                    double normalization_tol) {
  if (fbar.depth > 2)
    throw std::invalid_argument(
        "gibbs_from_normalized: pair measures need depth <= 2");
  if (!fbar.alphabet.same_support(alphabet))
    throw std::invalid_argument("gibbs_from_normalized: alphabet mismatch");
  const double res = normalization_residual(fbar);
  if (res > normalization_tol)
    throw ContractError(
        "gibbs_from_normalized: potential is not normalized (residual " +
        std::to_string(res) + ")");

  const int m = alphabet.size();
  // B[a][b] = p_a e^{fbar(a,b)} is column-stochastic; pi is its fixed point.
  std::vector<double> B(static_cast<std::size_t>(m) * m);
  std::array<int, 2> word{};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      word = {a, b};
      B[static_cast<std::size_t>(a) * m + b] =
          alphabet.weight(a) * std::exp(fbar.at(word));
    }

  std::vector<double> pi(static_cast<std::size_t>(m), 1.0 / m), next(pi);
  double diff = 0.0;
  bool converged = false;
  for (int it = 0; it < 100000 && !converged; ++it) {
    kernels::matvec_serial(B.data(), pi.data(), next.data(),
                           static_cast<std::size_t>(m),
                           static_cast<std::size_t>(m));
    double sum = 0.0;
    for (double x : next) sum += x;
    diff = 0.0;
    for (int a = 0; a < m; ++a) {
      next[static_cast<std::size_t>(a)] /= sum;
      diff = std::max(diff, std::abs(next[static_cast<std::size_t>(a)] -
                                     pi[static_cast<std::size_t>(a)]));
    }
    pi.swap(next);
    converged = diff < 1e-14;
  }
  if (!converged)
    throw ConvergenceError("gibbs_from_normalized: pi fixed point stalled",
                           diff);

  MarkovMeasure mu{alphabet, pi,
                   std::vector<double>(static_cast<std::size_t>(m) * m)};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      mu.pair[static_cast<std::size_t>(a) * m + b] =
          B[static_cast<std::size_t>(a) * m + b] *
          pi[static_cast<std::size_t>(b)];
  validate(mu, 1e-10);
  return mu;
}

double cylinder_weight(const MarkovMeasure& mu, std::span<const int> word) {
  if (word.empty())
    throw std::invalid_argument("cylinder_weight: word must be nonempty");
  const std::size_t n = word.size();
  double w = mu.pi[static_cast<std::size_t>(word[n - 1])];
  // backward chain: conditionals of w_i given w_{i+1}; zero marginals give
  // zero weight rather than an error
  for (std::size_t i = n - 1; i-- > 0;) {
    const double denom = mu.pi[static_cast<std::size_t>(word[i + 1])];
    if (denom <= 0.0) return 0.0;
    w *= mu.pair_at(word[i], word[i + 1]) / denom;
  }
  return w;
}

std::vector<double> marginal(const MarkovMeasure& mu, int length) {
  const int m = mu.alphabet.size();
  const std::size_t count = checked_word_count(m, length);
  std::vector<double> out(count);
  kernels::fill_indexed(count, out.data(), [&](std::size_t w) {
    std::array<int, kMaxWordLen> buf{};
    unpack_word(w, m, length, std::span<int>(buf.data(), static_cast<std::size_t>(length)));
    return cylinder_weight(
        mu, std::span<const int>(buf.data(), static_cast<std::size_t>(length)));
  });
  return out;
}

double integrate_local(const MarkovMeasure& mu, const Potential& f) {
  if (!f.alphabet.same_support(mu.alphabet))
    throw std::invalid_argument("integrate_local: alphabet mismatch");
  const int m = mu.alphabet.size();
  const int k = f.depth;
  const std::size_t count = checked_word_count(m, k);
  return kernels::sum_indexed(count, [&](std::size_t w) {
    std::array<int, kMaxWordLen> buf{};
    unpack_word(w, m, k, std::span<int>(buf.data(), static_cast<std::size_t>(k)));
    const std::span<const int> word(buf.data(), static_cast<std::size_t>(k));
    return cylinder_weight(mu, word) * f.at(word);
  });
}

Word sample_path(const MarkovMeasure& mu, int length, std::uint64_t seed) {
  if (length < 1)
    throw std::invalid_argument("sample_path: length must be >= 1");
  const int m = mu.alphabet.size();
  Rng rng(seed);
  Word path(static_cast<std::size_t>(length));
  path[0] = rng.pick(mu.pi);
  std::vector<double> forward(static_cast<std::size_t>(m));
  for (int i = 1; i < length; ++i) {
    const int prev = path[static_cast<std::size_t>(i - 1)];
    const double denom = mu.pi[static_cast<std::size_t>(prev)];
    for (int b = 0; b < m; ++b)
      forward[static_cast<std::size_t>(b)] =
          denom > 0.0 ? mu.pair_at(prev, b) / denom : mu.pi[static_cast<std::size_t>(b)];
    path[static_cast<std::size_t>(i)] = rng.pick(forward);
  }
  return path;
}

MarkovMeasure random_markov(const Alphabet& alphabet, std::uint64_t seed) {
  const int m = alphabet.size();
  Rng rng(seed);
  std::vector<double> pair(static_cast<std::size_t>(m) * m);
  double total = 0.0;
  for (double& x : pair) {
    const double u = rng.uniform();
    x = u * u + 1e-3;
    total += x;
  }
  for (double& x : pair) x /= total;

  // iterative proportional fitting toward equal row and column marginals
  double gap = 0.0;
  bool converged = false;
  for (int it = 0; it < 100000 && !converged; ++it) {
    const auto rows = row_sums(pair, m);
    const auto cols = col_sums(pair, m);
    gap = 0.0;
    for (int a = 0; a < m; ++a)
      gap = std::max(gap, std::abs(rows[static_cast<std::size_t>(a)] -
                                   cols[static_cast<std::size_t>(a)]));
    if (gap < 1e-13) {
      converged = true;
      break;
    }
    std::vector<double> target(static_cast<std::size_t>(m));
    double tsum = 0.0;
    for (int a = 0; a < m; ++a) {
      target[static_cast<std::size_t>(a)] =
          0.5 * (rows[static_cast<std::size_t>(a)] +
                 cols[static_cast<std::size_t>(a)]);
      tsum += target[static_cast<std::size_t>(a)];
    }
    for (double& t : target) t /= tsum;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        pair[static_cast<std::size_t>(a) * m + b] *=
            target[static_cast<std::size_t>(a)] /
            rows[static_cast<std::size_t>(a)];
    const auto cols2 = col_sums(pair, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        pair[static_cast<std::size_t>(a) * m + b] *=
            target[static_cast<std::size_t>(b)] /
            cols2[static_cast<std::size_t>(b)];
    double sum = 0.0;
    for (double x : pair) sum += x;
    for (double& x : pair) x /= sum;
  }
  if (!converged)
    throw ConvergenceError("random_markov: proportional fitting stalled", gap);

  MarkovMeasure mu{alphabet, row_sums(pair, m), std::move(pair)};
  validate(mu, 1e-10);
  return mu;
}

MarkovMeasure mix(const MarkovMeasure& a, const MarkovMeasure& b, double t) {
  if (!a.alphabet.same_support(b.alphabet))
    throw std::invalid_argument("mix: alphabet mismatch");
  if (t < 0.0 || t > 1.0)
    throw std::invalid_argument("mix: t must lie in [0, 1]");
  MarkovMeasure out = a;
  for (std::size_t i = 0; i < out.pi.size(); ++i)
    out.pi[i] = (1.0 - t) * a.pi[i] + t * b.pi[i];
  for (std::size_t i = 0; i < out.pair.size(); ++i)
    out.pair[i] = (1.0 - t) * a.pair[i] + t * b.pair[i];
  return out;
}

double pair_distance(const MarkovMeasure& a, const MarkovMeasure& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.pair.size(); ++i)
    d = std::max(d, std::abs(a.pair[i] - b.pair[i]));
  return d;
}

void to_json(nlohmann::json& j, const MarkovMeasure& mu) {
  const int m = mu.alphabet.size();
  nlohmann::json rows = nlohmann::json::array();
  for (int a = 0; a < m; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < m; ++b) row.push_back(mu.pair_at(a, b));
    rows.push_back(row);
  }
  j = nlohmann::json{{"alphabet", mu.alphabet}, {"pi", mu.pi}, {"pair", rows}};
}

void from_json(const nlohmann::json& j, MarkovMeasure& mu) {
  MarkovMeasure parsed;
  parsed.alphabet = j.at("alphabet").get<Alphabet>();
  parsed.pi = j.at("pi").get<std::vector<double>>();
  const auto rows = j.at("pair");
  const int m = parsed.alphabet.size();
  parsed.pair.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      parsed.pair[static_cast<std::size_t>(a) * m + b] =
          rows.at(static_cast<std::size_t>(a))
              .at(static_cast<std::size_t>(b))
              .get<double>();
  validate(parsed, 1e-10);
  mu = std::move(parsed);
}

}  // namespace ruelle
