#include "ruelle/symbolic.hpp"

#include <stdexcept>

#include "ruelle/budget.hpp"

namespace ruelle {

BoundaryCondition BoundaryCondition::periodic(Word period) {
  if (period.empty())
    throw std::invalid_argument("boundary condition: period must be nonempty");
  return {{}, std::move(period)};
}

Sequence concat(Word prefix, BoundaryCondition tail) {
  if (tail.period.empty())
    throw std::invalid_argument("concat: boundary period must be nonempty");
  return Sequence{std::move(prefix), std::move(tail), 0};
}

Sequence as_sequence(const BoundaryCondition& y) { return Sequence{{}, y, 0}; }

Sequence shift(Sequence x, std::size_t count) {
  x.offset += count;
  return x;
}

ProductMetricValue product_metric(const Sequence& x, const Sequence& y,
                                  const Alphabet& alphabet,
                                  std::size_t truncation) {
  if (truncation < 1)
    throw std::invalid_argument("product_metric: truncation must be >= 1");
  double sum = 0.0;
  double scale = 0.5;  // 2^-n for n = 1, 2, ...
  for (std::size_t i = 0; i < truncation; ++i) {
    const double d = alphabet.distance(x.at(i), y.at(i));
    sum += scale * d / (1.0 + d);
    scale *= 0.5;
  }
  return {sum, scale * 2.0};  // scale has already advanced past term N
}

std::size_t pack_word(std::span<const int> word, int alphabet_size) {
  std::size_t index = 0;
  for (int s : word)
    index = index * static_cast<std::size_t>(alphabet_size) +
            static_cast<std::size_t>(s);
  return index;
}

void unpack_word(std::size_t index, int alphabet_size, int length,
                 std::span<int> out) {
  for (int i = length - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] =
        static_cast<int>(index % static_cast<std::size_t>(alphabet_size));
    index /= static_cast<std::size_t>(alphabet_size);
  }
}

Word word_from_index(std::size_t index, int alphabet_size, int length) {
  Word w(static_cast<std::size_t>(length));
  unpack_word(index, alphabet_size, length, w);
  return w;
}

WordRange::WordRange(const Alphabet& alphabet, int length)
    : WordRange(alphabet.size(), length) {}

WordRange::WordRange(int alphabet_size, int length)
    : m_(alphabet_size),
      n_(length),
      count_(checked_word_count(alphabet_size, length)) {}

WordRange::iterator::iterator(const WordRange* range, std::size_t index)
    : range_(range), index_(index) {
  if (index_ < range_->count())
    current_ = word_from_index(index_, range_->m_, range_->n_);
}

WordRange::iterator& WordRange::iterator::operator++() {
  ++index_;
  if (index_ < range_->count()) {
    // odometer increment keeps lexicographic order without re-dividing
    for (int i = range_->n_ - 1; i >= 0; --i) {
      auto& digit = current_[static_cast<std::size_t>(i)];
      if (++digit < range_->m_) break;
      digit = 0;
    }
  }
  return *this;
}

std::string word_to_string(std::span<const int> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

}  // namespace ruelle
