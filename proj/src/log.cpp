#include "padplace/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace padplace {

LogLevel log_threshold() {
  static const LogLevel level = [] {
    const char* env = std::getenv("PADPLACE_LOG_LEVEL");
    const std::string v = env ? env : "";
    if (v == "error") return LogLevel::kError;
    if (v == "info") return LogLevel::kInfo;
    if (v == "debug") return LogLevel::kDebug;
    return LogLevel::kWarn;
  }();
  return level;
}

void log(LogLevel level, std::string_view message) {
  if (level > log_threshold()) return;
  static constexpr const char* kNames[] = {"error", "warn", "info", "debug"};
  static std::mutex mu;
  std::lock_guard lock(mu);
  std::cerr << '[' << kNames[static_cast<int>(level)] << "] " << message << '\n';
}

}  // namespace padplace
