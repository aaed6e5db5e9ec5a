#include "quasihilb/log.hpp"

#include <cstdlib>
#include <iostream>

namespace quasihilb {

LogLevel log_threshold() {
  static LogLevel lv = [] {
    const char* env = std::getenv("QUASIHILB_LOG");
    if (!env) return LogLevel::warn;
    std::string s(env);
    if (s == "error") return LogLevel::error;
    if (s == "warn") return LogLevel::warn;
    if (s == "info") return LogLevel::info;
    if (s == "debug") return LogLevel::debug;
    return LogLevel::warn;
  }();
  return lv;
}

void log_line(LogLevel lv, const std::string& msg) {
  if (!log_enabled(lv)) return;
  static const char* names[] = {"error", "warn", "info", "debug"};
  std::cerr << "[" << names[static_cast<int>(lv)] << "] " << msg << "\n";
}

}  // namespace quasihilb
