#pragma once

namespace ckdim {

inline constexpr const char* kToolName = "ckdim";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace ckdim
