// Times the OpenMP kernels against their serial references on the two hot
// loops: cylinder-enumeration reductions and transfer mat-vec powers.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "ruelle/alphabet.hpp"
#include "ruelle/kernels.hpp"
#include "ruelle/measures.hpp"
#include "ruelle/potential.hpp"
#include "ruelle/transfer.hpp"

using namespace ruelle;

namespace {

template <class F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms,
            double check) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   (check %.6g)\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms, check);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", kernels::thread_count());

  {
    // entropy-style reduction over 2^22 binary words of length 22
    const Alphabet alphabet = Alphabet::uniform_finite(2);
    const MarkovMeasure mu = random_markov(alphabet, 7);
    const int n = 22;
    const std::size_t count = std::size_t{1} << n;
    auto term = [&](std::size_t w) {
      std::vector<int> buf(static_cast<std::size_t>(n));
      unpack_word(w, 2, n, buf);
      const double p = cylinder_weight(mu, buf);
      return p > 0.0 ? p * std::log(p) : 0.0;
    };
    double serial_value = 0.0, parallel_value = 0.0;
    const double t_serial =
        time_ms([&] { serial_value = kernels::sum_indexed_serial(count, term); });
    const double t_parallel =
        time_ms([&] { parallel_value = kernels::sum_indexed(count, term); });
    report("word-sum (2^22 cylinders)", t_serial, t_parallel,
           std::abs(serial_value - parallel_value));
  }

  {
    // transfer mat-vec on a depth-4 potential over 3 symbols: 27 x 27 is too
    // small to parallelize, so use a discretized alphabet instead
    const Alphabet alphabet = Alphabet::discretize_interval(
        -1.0, 1.0, [](double) { return 1.0; }, 1024, QuadratureRule::gauss);
    const Potential f = ising_potential(alphabet, 1.0);
    const TransferMatrix matrix = build_transfer(f, alphabet);
    const std::size_t dim = matrix.dim();
    std::vector<double> x(dim, 1.0), y(dim);
    const int reps = 50;
    const double t_serial = time_ms([&] {
      for (int i = 0; i < reps; ++i) {
        kernels::matvec_serial(matrix.entries.data(), x.data(), y.data(), dim, dim);
        x.swap(y);
      }
    });
    double drift = 0.0;
    const double t_parallel = time_ms([&] {
      for (int i = 0; i < reps; ++i) {
        kernels::matvec(matrix.entries.data(), x.data(), y.data(), dim, dim);
        x.swap(y);
      }
      drift = x[0];
    });
    report("matvec 1024^2 x 50", t_serial, t_parallel, drift == drift ? 0.0 : 1.0);
  }

  return 0;
}
