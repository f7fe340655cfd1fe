#pragma once

namespace mimofbl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mimofbl
