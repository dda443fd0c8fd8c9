#pragma once

namespace relaxsearch {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace relaxsearch
