#pragma once

namespace leplab {

inline constexpr const char* kArtifactName = "lep-lab";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace leplab
