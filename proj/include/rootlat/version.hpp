#pragma once

namespace rootlat {

inline constexpr const char* kToolName = "rootlat";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace rootlat
