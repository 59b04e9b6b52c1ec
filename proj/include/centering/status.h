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

#ifndef CENTERING_STATUS_H_
#define CENTERING_STATUS_H_

#include <stdexcept>
#include <string>

namespace centering {

// Error categories. The C API maps these one-to-one onto ck_status values.
enum class ErrorCode {
  kInvalidArgument = 1,
  kParse = 2,
  kIo = 3,
  kEmpty = 4,
  kDegenerate = 5,
  kPrecondition = 6,
  kInternal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the corpus reader. line() is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, int line)
      : ParseError("", message, line) {}
  ParseError(const std::string &source, const std::string &message, int line)
      : Error(ErrorCode::kParse, Describe(source, message, line)),
        source_(source),
        detail_(message),
        line_(line) {}

  const std::string &source() const { return source_; }
  const std::string &detail() const { return detail_; }
  int line() const { return line_; }

 private:
  static std::string Describe(const std::string &source,
                              const std::string &message, int line) {
    std::string where = source;
    if (line > 0) {
      where += (where.empty() ? "line " : ":") + std::to_string(line);
    }
    return where.empty() ? message : where + ": " + message;
  }

  std::string source_;
  std::string detail_;
  int line_;
};

}  // namespace centering

#endif  // CENTERING_STATUS_H_
