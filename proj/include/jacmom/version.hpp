#pragma once

namespace jacmom {

inline constexpr const char* kVersion = "0.1.0";

// Bumped whenever the coefficient table layout or the algorithms feeding it
// change; embedded in cache file names so stale caches are never reused.
inline constexpr int kTableFormatVersion = 1;

}  // namespace jacmom
