#pragma once

namespace totient {

inline constexpr const char* version = "0.1.0";

}  // namespace totient
