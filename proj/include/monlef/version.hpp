#pragma once

namespace monlef {

inline constexpr const char* kVersion = "0.1.0";

} // namespace monlef
