#pragma once

namespace simeval {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace simeval
