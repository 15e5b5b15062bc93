#pragma once

namespace rdslink {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rdslink
