#pragma once

namespace gtrib {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace gtrib
