#pragma once

namespace pathlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pathlab
