#pragma once

namespace symcensus {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace symcensus
