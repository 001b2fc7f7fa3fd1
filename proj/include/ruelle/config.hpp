#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "ruelle/alphabet.hpp"
#include "ruelle/potential.hpp"

namespace ruelle {

// One experiment per invocation: an alphabet, a potential over it, and
// command-specific parameter blocks keyed by the command name.
struct RunConfig {
  nlohmann::json raw;
  Alphabet alphabet;
  Potential potential;
  std::string out_dir = ".";
  std::uint64_t seed = 0;

  nlohmann::json params(const std::string& command) const {
    if (raw.contains(command)) return raw.at(command);
    return nlohmann::json::object();
  }
};

// Builds the alphabet described by a spec object:
//   {"kind":"finite","size":m}           uniform a priori weights
//   {"kind":"finite","weights":[...]}    explicit a priori weights
//   {"kind":"interval","lo":..,"hi":..,"nodes":..,"rule":"gauss"|"midpoint",
//    "density":{"name":"constant","scale":1.0}}
// or a fully serialized alphabet (with "points").
Alphabet alphabet_from_spec(const nlohmann::json& spec);

// Builds a potential from a family spec:
//   {"family":"constant","value":c}
//   {"family":"ising","beta":b}
//   {"family":"random","depth":k,"seed":s,"amplitude":a}
//   {"family":"tensor","depth":k,"values":[...]}
Potential potential_from_spec(const nlohmann::json& spec,
                              const Alphabet& alphabet);

RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

}  // namespace ruelle
