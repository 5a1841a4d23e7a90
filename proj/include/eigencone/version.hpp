#pragma once

namespace eigencone {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace eigencone
