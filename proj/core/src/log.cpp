// SPDX-License-Identifier: Apache-2.0
#include "qcs/log.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <mutex>

namespace qcs {

static LogLevel parse_level(const char* s) {
  if (!s || !*s) return LogLevel::warn;
  if (!std::strcmp(s, "off") || !std::strcmp(s, "0")) return LogLevel::off;
  if (!std::strcmp(s, "error") || !std::strcmp(s, "1")) return LogLevel::error;
  if (!std::strcmp(s, "warn") || !std::strcmp(s, "2")) return LogLevel::warn;
  if (!std::strcmp(s, "info") || !std::strcmp(s, "3")) return LogLevel::info;
  if (!std::strcmp(s, "debug") || !std::strcmp(s, "4")) return LogLevel::debug;
  return LogLevel::warn;
}

LogLevel log_level() {
  static const LogLevel level = parse_level(std::getenv("QCS_LOG"));
  return level;
}

void log_message(LogLevel level, const std::string& msg) {
  static std::mutex mtx;
  static const char* names[] = {"", "error", "warn", "info", "debug"};
  std::lock_guard<std::mutex> lock(mtx);
  std::cerr << "[qcs:" << names[static_cast<int>(level)] << "] " << msg << '\n';
}

} // namespace qcs
