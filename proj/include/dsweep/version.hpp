#pragma once

namespace dsweep {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace dsweep
