#pragma once

namespace glauber {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace glauber
