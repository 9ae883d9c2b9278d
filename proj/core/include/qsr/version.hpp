#pragma once

namespace qsr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qsr
