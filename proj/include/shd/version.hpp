#pragma once

namespace shd {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace shd
