#pragma once

namespace reescm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace reescm
