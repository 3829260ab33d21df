#pragma once

namespace qmsg {

inline constexpr const char* kToolName = "qmsg";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace qmsg
