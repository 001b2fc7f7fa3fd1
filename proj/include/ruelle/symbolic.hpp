#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ruelle/alphabet.hpp"

namespace ruelle {

// A finite word of symbol indices. Coordinates are 0-based in code; the
// sequence site called 1 in reports is index 0 here.
using Word = std::vector<int>;

// Eventually periodic infinite sequence, used as the boundary condition y:
// coordinates run preperiod first, then the period repeats forever.
struct BoundaryCondition {
  Word preperiod;
  Word period;  // nonempty

  int at(std::size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    return period[(i - preperiod.size()) % period.size()];
  }

  static BoundaryCondition constant(int symbol) { return {{}, {symbol}}; }
  static BoundaryCondition periodic(Word period);
};

// Accessor for an infinite sequence of the form (finite prefix, boundary
// tail), possibly shifted. The tail is indexed on the same global axis as
// the prefix: coordinate i of concat(x, y) is x_i for i < |x| and y_i
// beyond, matching the splice x_Lambda y_Lambda^c.
struct Sequence {
  Word prefix;
  BoundaryCondition tail;
  std::size_t offset = 0;

  int at(std::size_t i) const {
    const std::size_t j = i + offset;
    return j < prefix.size() ? prefix[j] : tail.at(j);
  }
};

Sequence concat(Word prefix, BoundaryCondition tail);
Sequence as_sequence(const BoundaryCondition& y);
Sequence shift(Sequence x, std::size_t count = 1);

struct ProductMetricValue {
  double value;       // truncated sum
  double tail_bound;  // 2^-N bound on the discarded tail
};

// d_Omega(x, y) = sum_n 2^-n d_A(x_n, y_n) / (1 + d_A(x_n, y_n)),
// truncated after N terms.
ProductMetricValue product_metric(const Sequence& x, const Sequence& y,
                                  const Alphabet& alphabet,
                                  std::size_t truncation);

// --- word indexing ------------------------------------------------------
// Lexicographic order over symbol indices == numeric order of the mixed
// radix encoding with the leftmost symbol most significant.

std::size_t pack_word(std::span<const int> word, int alphabet_size);
void unpack_word(std::size_t index, int alphabet_size, int length,
                 std::span<int> out);
Word word_from_index(std::size_t index, int alphabet_size, int length);

// All m^n words of the given length in lexicographic order. Construction
// checks the enumeration budget.
class WordRange {
 public:
  WordRange(const Alphabet& alphabet, int length);
  WordRange(int alphabet_size, int length);

  std::size_t count() const { return count_; }

  class iterator {
   public:
    iterator(const WordRange* range, std::size_t index);
    const Word& operator*() const { return current_; }
    iterator& operator++();
    bool operator!=(const iterator& other) const {
      return index_ != other.index_;
    }

   private:
    const WordRange* range_;
    std::size_t index_;
    Word current_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, count_); }

  int alphabet_size() const { return m_; }
  int length() const { return n_; }

 private:
  int m_;
  int n_;
  std::size_t count_;
};

std::string word_to_string(std::span<const int> word);

}  // namespace ruelle
