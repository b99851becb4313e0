#pragma once

namespace splitlink {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace splitlink
