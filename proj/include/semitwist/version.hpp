#pragma once

namespace semitwist {

inline constexpr const char* kToolName = "semitwist";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace semitwist
