#pragma once

namespace fringe {

inline constexpr const char* kArtifactName = "fringe";
inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace fringe
