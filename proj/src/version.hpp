#pragma once

namespace fpg {

inline constexpr const char* kLibraryVersion = "1.0.0";

}  // namespace fpg
