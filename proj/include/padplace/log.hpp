#pragma once

#include <string_view>

namespace padplace {

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

/// Threshold from PADPLACE_LOG_LEVEL (error|warn|info|debug); warn when unset.
LogLevel log_threshold();

/// Writes "[level] message" to stderr when `level` passes the threshold.
void log(LogLevel level, std::string_view message);

}  // namespace padplace
