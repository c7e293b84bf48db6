// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <sstream>
#include <string>

namespace qcs {

enum class LogLevel { off = 0, error = 1, warn = 2, info = 3, debug = 4 };

/// Current verbosity, parsed once from the QCS_LOG environment variable.
/// Accepts off/error/warn/info/debug or the numbers 0-4; default is warn.
LogLevel log_level();

void log_message(LogLevel level, const std::string& msg);

template <typename... Args>
void log_at(LogLevel level, const Args&... args) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  std::ostringstream oss;
  (oss << ... << args);
  log_message(level, oss.str());
}

template <typename... Args> void log_error(const Args&... a) { log_at(LogLevel::error, a...); }
template <typename... Args> void log_warn(const Args&... a) { log_at(LogLevel::warn, a...); }
template <typename... Args> void log_info(const Args&... a) { log_at(LogLevel::info, a...); }
template <typename... Args> void log_debug(const Args&... a) { log_at(LogLevel::debug, a...); }

} // namespace qcs
