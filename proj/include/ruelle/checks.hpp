#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ruelle/alphabet.hpp"
#include "ruelle/potential.hpp"

namespace ruelle {

// One verdict row of the `verify` command. Every numeric claim carries the
// tolerance it was held to and the measured residual.
struct CheckResult {
  std::string check;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct VerifyOptions {
  int n_max = 8;
  int trials = 20;
  std::uint64_t seed = 0;
};

std::vector<CheckResult> verify_theorem1(const Potential& f,
                                         const Alphabet& alphabet,
                                         const VerifyOptions& opts);
std::vector<CheckResult> verify_dlr(const Potential& f,
                                    const Alphabet& alphabet,
                                    const VerifyOptions& opts);
std::vector<CheckResult> verify_equivalence(const Alphabet& alphabet,
                                            const VerifyOptions& opts);
std::vector<CheckResult> verify_walters(const Potential& f,
                                        const VerifyOptions& opts);
std::vector<CheckResult> verify_corollary(const Potential& f,
                                          const Alphabet& alphabet,
                                          const VerifyOptions& opts);

// which: theorem1 | dlr | equivalence | walters | corollary | all
std::vector<CheckResult> run_verify(const std::string& which,
                                    const Potential& f,
                                    const Alphabet& alphabet,
                                    const VerifyOptions& opts);

void to_json(nlohmann::json& j, const CheckResult& c);

}  // namespace ruelle
