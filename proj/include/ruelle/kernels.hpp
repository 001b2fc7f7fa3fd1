#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// Data-parallel inner loops shared by the whole library: indexed reductions
// over cylinder enumerations and dense mat-vec products. Each kernel has an
// OpenMP version and a serial reference (`*_serial`) kept for testing and for
// the benchmark target.
//
// Determinism contract: the parallel reductions split the index range into a
// fixed number of chunks that depends only on the range size, accumulate each
// chunk with compensated summation, and combine the partials in chunk order.
// Results are therefore bit-identical for any thread count, including 1.

namespace ruelle::kernels {

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

inline std::size_t chunk_count(std::size_t n) {
  if (n <= 4096) return 1;
  return std::min<std::size_t>(1024, (n + 4095) / 4096);
}

// sum_{i=0}^{n-1} term(i), serial reference.
template <class Term>
double sum_indexed_serial(std::size_t n, Term&& term) {
  KahanSum acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(term(i));
  return acc.value();
}

// sum_{i=0}^{n-1} term(i), parallel.
template <class Term>
double sum_indexed(std::size_t n, Term&& term) {
  const std::size_t chunks = chunk_count(n);
  if (chunks <= 1) return sum_indexed_serial(n, term);
  std::vector<double> partial(chunks, 0.0);
  const std::size_t step = (n + chunks - 1) / chunks;
#pragma omp parallel for schedule(dynamic)
  for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * step;
    const std::size_t hi = std::min(n, lo + step);
    KahanSum acc;
    for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
    partial[static_cast<std::size_t>(c)] = acc.value();
  }
  KahanSum total;
  for (double p : partial) total.add(p);
  return total.value();
}

// max_{i<n} term(i); n must be >= 1.
template <class Term>
double max_indexed_serial(std::size_t n, Term&& term) {
  double best = term(0);
  for (std::size_t i = 1; i < n; ++i) best = std::max(best, term(i));
  return best;
}

template <class Term>
double max_indexed(std::size_t n, Term&& term) {
  const std::size_t chunks = chunk_count(n);
  if (chunks <= 1) return max_indexed_serial(n, term);
  std::vector<double> partial(chunks);
  const std::size_t step = (n + chunks - 1) / chunks;
#pragma omp parallel for schedule(dynamic)
  for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
    const std::size_t lo = static_cast<std::size_t>(c) * step;
    const std::size_t hi = std::min(n, lo + step);
    double best = term(lo);
    for (std::size_t i = lo + 1; i < hi; ++i) best = std::max(best, term(i));
    partial[static_cast<std::size_t>(c)] = best;
  }
  return *std::max_element(partial.begin(), partial.end());
}

// out[i] = fill(i) for i in [0, n). Embarrassingly parallel, bit-exact
// against the serial version.
template <class Fill>
void fill_indexed_serial(std::size_t n, double* out, Fill&& fill) {
  for (std::size_t i = 0; i < n; ++i) out[i] = fill(i);
}

template <class Fill>
void fill_indexed(std::size_t n, double* out, Fill&& fill) {
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    out[static_cast<std::size_t>(i)] = fill(static_cast<std::size_t>(i));
}

// y = M x for a dense row-major rows x cols matrix.
inline void matvec_serial(const double* m, const double* x, double* y,
                          std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    KahanSum acc;
    const double* row = m + r * cols;
    for (std::size_t c = 0; c < cols; ++c) acc.add(row[c] * x[c]);
    y[r] = acc.value();
  }
}

inline void matvec(const double* m, const double* x, double* y,
                   std::size_t rows, std::size_t cols) {
#pragma omp parallel for schedule(static)
  for (long long r = 0; r < static_cast<long long>(rows); ++r) {
    KahanSum acc;
    const double* row = m + static_cast<std::size_t>(r) * cols;
    for (std::size_t c = 0; c < cols; ++c) acc.add(row[c] * x[c]);
    y[static_cast<std::size_t>(r)] = acc.value();
  }
}

// y = M^T x.
inline void matvec_transpose_serial(const double* m, const double* x,
                                    double* y, std::size_t rows,
                                    std::size_t cols) {
  for (std::size_t c = 0; c < cols; ++c) {
    KahanSum acc;
    for (std::size_t r = 0; r < rows; ++r) acc.add(m[r * cols + c] * x[r]);
    y[c] = acc.value();
  }
}

inline void matvec_transpose(const double* m, const double* x, double* y,
                             std::size_t rows, std::size_t cols) {
#pragma omp parallel for schedule(static)
  for (long long c = 0; c < static_cast<long long>(cols); ++c) {
    KahanSum acc;
    for (std::size_t r = 0; r < rows; ++r)
      acc.add(m[r * cols + static_cast<std::size_t>(c)] * x[r]);
    y[static_cast<std::size_t>(c)] = acc.value();
  }
}

inline void set_thread_count(int jobs) {
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
}

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ruelle::kernels
