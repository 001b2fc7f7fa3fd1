#pragma once

namespace ruelle {

inline constexpr const char* kArtifactName = "ruelle-lab";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace ruelle
