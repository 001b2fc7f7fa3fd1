#include "ruelle/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <stdexcept>

namespace ruelle {

namespace {

std::function<double(double)> density_from_spec(const nlohmann::json& spec) {
  if (spec.is_null()) return [](double) { return 1.0; };
  std::string name = "constant";
  nlohmann::json params = spec;
  if (spec.is_string()) {
    name = spec.get<std::string>();
    params = nlohmann::json::object();
  } else if (spec.is_object()) {
    name = spec.value("name", "constant");
  }
  if (name == "constant") {
    const double scale = params.value("scale", 1.0);
    return [scale](double) { return scale; };
  }
  if (name == "cosine") {
    // 1 + a cos(pi x), clipped at 0; a in [-1, 1] keeps it nonnegative
    const double a = params.value("amplitude", 0.5);
    return [a](double x) {
      const double v = 1.0 + a * std::cos(std::acos(-1.0) * x);
      return v > 0.0 ? v : 0.0;
    };
  }
  throw std::invalid_argument("unknown density family: " + name);
}

}  // namespace

Alphabet alphabet_from_spec(const nlohmann::json& spec) {
  if (!spec.is_object())
    throw std::invalid_argument("alphabet spec must be an object");
  if (spec.contains("points")) return spec.get<Alphabet>();
  const std::string kind = spec.value("kind", "finite");
  if (kind == "finite") {
    if (spec.contains("weights"))
      return Alphabet::weighted_finite(
          spec.at("weights").get<std::vector<double>>());
    return Alphabet::uniform_finite(spec.value("size", 2));
  }
  if (kind == "interval") {
    const double lo = spec.at("lo").get<double>();
    const double hi = spec.at("hi").get<double>();
    const int nodes = spec.at("nodes").get<int>();
    const std::string rule = spec.value("rule", "gauss");
    if (rule != "gauss" && rule != "midpoint")
      throw std::invalid_argument("unknown quadrature rule: " + rule);
    return Alphabet::discretize_interval(
        lo, hi,
        density_from_spec(spec.contains("density") ? spec.at("density")
                                                   : nlohmann::json()),
        nodes,
        rule == "gauss" ? QuadratureRule::gauss : QuadratureRule::midpoint);
  }
  throw std::invalid_argument("unknown alphabet kind: " + kind);
}

Potential potential_from_spec(const nlohmann::json& spec,
                              const Alphabet& alphabet) {
  if (!spec.is_object())
    throw std::invalid_argument("potential spec must be an object");
  const std::string family = spec.value("family", "");
  if (family == "constant")
    return constant_potential(alphabet, spec.value("value", 0.0));
  if (family == "ising")
    return ising_potential(alphabet, spec.value("beta", 1.0));
  if (family == "random")
    return random_potential(alphabet, spec.value("depth", 2),
                            spec.value("seed", std::uint64_t{0}),
                            spec.value("amplitude", 1.0));
  if (family == "tensor")
    return tensor_potential(alphabet, spec.at("depth").get<int>(),
                            spec.at("values").get<std::vector<double>>());
  throw std::invalid_argument("unknown potential family: " + family);
}

RunConfig parse_config(const nlohmann::json& doc) {
  if (!doc.is_object())
    throw std::invalid_argument("config must be a JSON object");
  RunConfig cfg;
  cfg.raw = doc;
  cfg.alphabet = alphabet_from_spec(doc.at("alphabet"));
  cfg.potential = potential_from_spec(doc.at("potential"), cfg.alphabet);
  cfg.out_dir = doc.value("out", ".");
  cfg.seed = doc.value("seed", std::uint64_t{0});
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config parse error: " + std::string(e.what()));
  }
  return parse_config(doc);
}

}  // namespace ruelle
