#include "ruelle/potential.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "ruelle/budget.hpp"
#include "ruelle/errors.hpp"
#include "ruelle/kernels.hpp"
#include "ruelle/rng.hpp"

namespace ruelle {

namespace {

constexpr int kMaxDepth = 48;

void check_shape(const Potential& f) {
  if (f.depth < 1) throw std::invalid_argument("potential: depth must be >= 1");
  const std::size_t expected =
      checked_word_count(f.alphabet.size(), f.depth);
  if (f.values.size() != expected)
    throw std::invalid_argument("potential: value tensor has wrong size");
  for (double v : f.values)
    if (!std::isfinite(v))
      throw std::invalid_argument("potential: values must be finite");
}

}  // namespace

double Potential::at(std::span<const int> word) const {
  const int m = alphabet.size();
  std::size_t index = 0;
  for (int i = 0; i < depth; ++i)
    index = index * static_cast<std::size_t>(m) +
            static_cast<std::size_t>(word[static_cast<std::size_t>(i)]);
  return values[index];
}

double Potential::eval(const Sequence& x) const {
  const int m = alphabet.size();
  std::size_t index = 0;
  for (int i = 0; i < depth; ++i)
    index = index * static_cast<std::size_t>(m) +
            static_cast<std::size_t>(x.at(static_cast<std::size_t>(i)));
  return values[index];
}

Potential Potential::scaled(double factor) const {
  Potential out = *this;
  for (double& v : out.values) v *= factor;
  return out;
}

Potential Potential::shifted(double constant) const {
  Potential out = *this;
  for (double& v : out.values) v += constant;
  return out;
}

Potential constant_potential(const Alphabet& alphabet, double value) {
  Potential f{1, std::vector<double>(static_cast<std::size_t>(alphabet.size()),
                                     value),
              alphabet};
  check_shape(f);
  return f;
}

Potential ising_potential(const Alphabet& alphabet, double beta) {
  const int m = alphabet.size();
  Potential f{2, std::vector<double>(static_cast<std::size_t>(m) * m),
              alphabet};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      f.values[static_cast<std::size_t>(a) * m + b] =
          beta * alphabet.spin(a) * alphabet.spin(b);
  check_shape(f);
  return f;
}

Potential random_potential(const Alphabet& alphabet, int depth,
                           std::uint64_t seed, double amplitude) {
  if (depth < 1)
    throw std::invalid_argument("random_potential: depth must be >= 1");
  const std::size_t count = checked_word_count(alphabet.size(), depth);
  Rng rng(seed);
  Potential f{depth, std::vector<double>(count), alphabet};
  for (double& v : f.values) v = rng.uniform(-amplitude, amplitude);
  return f;
}

Potential tensor_potential(const Alphabet& alphabet, int depth,
                           std::vector<double> values) {
  Potential f{depth, std::move(values), alphabet};
  check_shape(f);
  return f;
}

double birkhoff_sum(const Potential& f, int n, const Sequence& x) {
  if (n < 0) throw std::invalid_argument("birkhoff_sum: n must be >= 0");
  kernels::KahanSum acc;
  Sequence cursor = x;
  for (int j = 0; j < n; ++j) {
    acc.add(f.eval(cursor));
    cursor.offset += 1;
  }
  return acc.value();
}

double variation(const Potential& f, int j) {
  if (j < 0) throw std::invalid_argument("variation: j must be >= 0");
  const int k = f.depth;
  if (j >= k) return 0.0;
  const int m = f.alphabet.size();
  const std::size_t prefixes = checked_word_count(m, j);
  const std::size_t suffixes = checked_word_count(m, k - j);
  // pair (u, v) share the prefix; suffixes range independently
  const std::size_t pairs = prefixes * suffixes * suffixes;
  return kernels::max_indexed(pairs, [&](std::size_t t) {
    const std::size_t sv = t % suffixes;
    const std::size_t su = (t / suffixes) % suffixes;
    const std::size_t pre = t / (suffixes * suffixes);
    const std::size_t u = pre * suffixes + su;
    const std::size_t v = pre * suffixes + sv;
    return std::abs(f.values[u] - f.values[v]);
  });
}

double walters_modulus(const Potential& f, int n_max, int j) {
  if (n_max < 1)
    throw std::invalid_argument("walters_modulus: n_max must be >= 1");
  if (j < 0) throw std::invalid_argument("walters_modulus: j must be >= 0");
  const int k = f.depth;
  const int m = f.alphabet.size();

  // Tails realized as words of length k + j padded by a constant boundary;
  // coordinates past k - 1 never enter any window of S_n. The j >= k - 1
  // zero is left to emerge from the enumeration itself.
  const int tail_len = k + j;
  const std::size_t tails = checked_word_count(m, tail_len);
  const std::size_t shared = checked_word_count(m, j);
  const std::size_t free_len = tails / shared;  // m^k tail suffixes

  double worst = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const std::size_t prefixes = checked_word_count(m, n);
    const std::size_t budget = enumeration_budget();
    if (prefixes > budget / (shared * free_len * free_len))
      throw EnumerationError("walters_modulus: pair enumeration exceeds budget");
    const std::size_t combos = prefixes * shared * free_len * free_len;
    const double level = kernels::max_indexed(combos, [&](std::size_t t) {
      const std::size_t fy = t % free_len;
      const std::size_t fx = (t / free_len) % free_len;
      const std::size_t common = (t / (free_len * free_len)) % shared;
      const std::size_t prefix = t / (free_len * free_len * shared);

      std::array<int, kMaxDepth> buf_x{}, buf_y{};
      unpack_word(prefix, m, n, std::span<int>(buf_x.data(), static_cast<std::size_t>(n)));
      unpack_word(prefix, m, n, std::span<int>(buf_y.data(), static_cast<std::size_t>(n)));
      unpack_word(common * free_len + fx, m, tail_len,
                  std::span<int>(buf_x.data() + n, static_cast<std::size_t>(tail_len)));
      unpack_word(common * free_len + fy, m, tail_len,
                  std::span<int>(buf_y.data() + n, static_cast<std::size_t>(tail_len)));

      Sequence x = concat(Word(buf_x.begin(), buf_x.begin() + n + tail_len),
                          BoundaryCondition::constant(0));
      Sequence y = concat(Word(buf_y.begin(), buf_y.begin() + n + tail_len),
                          BoundaryCondition::constant(0));
      return std::abs(birkhoff_sum(f, n, x) - birkhoff_sum(f, n, y));
    });
    worst = std::max(worst, level);
  }
  return worst;
}

Potential depth_project(const std::function<double(const Sequence&)>& evaluator,
                        int depth, const Alphabet& alphabet,
                        const BoundaryCondition& ystar) {
  if (depth < 1)
    throw std::invalid_argument("depth_project: depth must be >= 1");
  const int m = alphabet.size();
  const std::size_t count = checked_word_count(m, depth);
  Potential f{depth, std::vector<double>(count), alphabet};
  for (std::size_t w = 0; w < count; ++w) {
    Word word = word_from_index(w, m, depth);
    // splice semantics: the tail contributes its own coordinates past depth
    BoundaryCondition tail = ystar;
    f.values[w] = evaluator(concat(std::move(word), std::move(tail)));
  }
  return f;
}

void to_json(nlohmann::json& j, const Potential& f) {
  j = nlohmann::json{
      {"depth", f.depth}, {"alphabet", f.alphabet}, {"values", f.values}};
}

void from_json(const nlohmann::json& j, Potential& f) {
  Potential parsed{j.at("depth").get<int>(),
                   j.at("values").get<std::vector<double>>(),
                   j.at("alphabet").get<Alphabet>()};
  check_shape(parsed);
  f = std::move(parsed);
}

}  // namespace ruelle
