#pragma once

namespace ecckit {

inline constexpr const char* kVersion = "0.1.0";

} // namespace ecckit
