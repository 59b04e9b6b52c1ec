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

#include "centering/log.h"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string_view>

namespace centering {
namespace {

LogLevel LevelFromEnvironment() {
  const char *value = std::getenv("CENTERING_KIT_LOG");
  if (value == nullptr) return LogLevel::kWarn;
  std::string_view v(value);
  if (v == "quiet" || v == "0" || v == "off") return LogLevel::kQuiet;
  if (v == "info" || v == "2") return LogLevel::kInfo;
  if (v == "debug" || v == "3") return LogLevel::kDebug;
  return LogLevel::kWarn;
}

std::atomic<int> &LevelStorage() {
  static std::atomic<int> level{static_cast<int>(LevelFromEnvironment())};
  return level;
}

std::mutex &SinkMutex() {
  static std::mutex mu;
  return mu;
}

std::function<void(LogLevel, const std::string &)> &Sink() {
  static std::function<void(LogLevel, const std::string &)> sink;
  return sink;
}

const char *Prefix(LogLevel level) {
  switch (level) {
    case LogLevel::kWarn:
      return "warning: ";
    case LogLevel::kInfo:
      return "info: ";
    case LogLevel::kDebug:
      return "debug: ";
    case LogLevel::kQuiet:
      break;
  }
  return "";
}

}  // namespace

LogLevel CurrentLogLevel() {
  return static_cast<LogLevel>(LevelStorage().load());
}

void SetLogLevel(LogLevel level) {
  LevelStorage().store(static_cast<int>(level));
}

void SetLogSink(std::function<void(LogLevel, const std::string &)> sink) {
  std::lock_guard<std::mutex> lock(SinkMutex());
  Sink() = std::move(sink);
}

void Log(LogLevel level, const std::string &message) {
  if (level == LogLevel::kQuiet) return;
  if (static_cast<int>(level) > LevelStorage().load()) return;
  std::lock_guard<std::mutex> lock(SinkMutex());
  if (Sink()) {
    Sink()(level, message);
  } else {
    std::cerr << "centering-kit: " << Prefix(level) << message << "\n";
  }
}

}  // namespace centering
