#pragma once

namespace tfpe {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tfpe
