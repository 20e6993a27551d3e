#pragma once

namespace lefschetz {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace lefschetz
