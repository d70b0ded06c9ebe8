#pragma once

namespace pointerlab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kVersionString = "pointerlab 0.1.0";

}  // namespace pointerlab
