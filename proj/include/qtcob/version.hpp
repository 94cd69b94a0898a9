#pragma once

namespace qtcob {

inline constexpr const char* kToolName = "qtcob";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace qtcob
