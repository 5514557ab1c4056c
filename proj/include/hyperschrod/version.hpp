#pragma once

namespace hyperschrod {

inline constexpr const char* kVersion = "0.1.0";

} // namespace hyperschrod
