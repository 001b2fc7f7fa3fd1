#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <json.hpp>

#include "ruelle/alphabet.hpp"
#include "ruelle/symbolic.hpp"

namespace ruelle {

// Depth-k potential: a real function of the first k coordinates, stored as a
// dense tensor over A^k in lexicographic word order. This is the locally
// constant class; every Hoelder or Walters potential is approached by raising
// k, with variation(f, k) controlling the error.
struct Potential {
  int depth = 1;
  std::vector<double> values;  // m^depth entries
  Alphabet alphabet;

  // Value on the first `depth` coordinates of a word; extra symbols ignored.
  double at(std::span<const int> word) const;
  double eval(const Sequence& x) const;

  Potential scaled(double factor) const;
  Potential shifted(double constant) const;
};

Potential constant_potential(const Alphabet& alphabet, double value);
// beta * s(x1) * s(x2) with s the alphabet spin/coordinate map.
Potential ising_potential(const Alphabet& alphabet, double beta);
Potential random_potential(const Alphabet& alphabet, int depth,
                           std::uint64_t seed, double amplitude);
Potential tensor_potential(const Alphabet& alphabet, int depth,
                           std::vector<double> values);

// S_n(f)(x) = f(x) + f(sigma x) + ... + f(sigma^{n-1} x); n = 0 gives 0.
double birkhoff_sum(const Potential& f, int n, const Sequence& x);

// sup over pairs of depth-words agreeing on the first j coordinates of
// |f(u) - f(v)|; zero for j >= depth.
double variation(const Potential& f, int j);

// sup_{n <= n_max} sup_{prefix in A^n} |S_n(f)(prefix. x) - S_n(f)(prefix. y)|
// over tails x, y agreeing on their first j coordinates.
double walters_modulus(const Potential& f, int n_max, int j);

// Locally constant projection f_k(x) = f(x_1 ... x_k y*): evaluates the given
// functional on every depth-k word extended by the projection point y*.
Potential depth_project(const std::function<double(const Sequence&)>& evaluator,
                        int depth, const Alphabet& alphabet,
                        const BoundaryCondition& ystar);

void to_json(nlohmann::json& j, const Potential& f);
void from_json(const nlohmann::json& j, Potential& f);

}  // namespace ruelle
