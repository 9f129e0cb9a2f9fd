#pragma once

namespace hygap {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "hygap";

}  // namespace hygap
