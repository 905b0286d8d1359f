#pragma once

namespace navcot {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace navcot
