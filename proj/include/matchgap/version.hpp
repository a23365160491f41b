#pragma once

namespace matchgap {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace matchgap
