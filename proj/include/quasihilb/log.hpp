#pragma once

#include <string>

namespace quasihilb {

// Diagnostics on stderr, gated by the QUASIHILB_LOG environment variable
// (error, warn, info, debug). Reports themselves always go to stdout.
enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

LogLevel log_threshold();

inline bool log_enabled(LogLevel lv) {
  return static_cast<int>(lv) <= static_cast<int>(log_threshold());
}

void log_line(LogLevel lv, const std::string& msg);

}  // namespace quasihilb
