// Copyright 2026 The Centering Kit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CENTERING_LOG_H_
#define CENTERING_LOG_H_

#include <functional>
#include <string>

namespace centering {

// Diagnostics go to stderr. CENTERING_KIT_LOG selects the threshold:
// "quiet" (or "0"), "warn" (default), "info", "debug".
enum class LogLevel { kQuiet = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

LogLevel CurrentLogLevel();
void SetLogLevel(LogLevel level);

// Replaces the stderr writer; pass nullptr to restore it. Used by tests.
void SetLogSink(std::function<void(LogLevel, const std::string &)> sink);

void Log(LogLevel level, const std::string &message);
inline void LogWarning(const std::string &message) {
  Log(LogLevel::kWarn, message);
}
inline void LogInfo(const std::string &message) {
  Log(LogLevel::kInfo, message);
}

}  // namespace centering

#endif  // CENTERING_LOG_H_
