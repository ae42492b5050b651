//
// Copyright 2026 The tweetaffect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef TWEETAFFECT_ERROR_H_
#define TWEETAFFECT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tweetaffect {

// Values double as process exit codes for the command-line tool.
enum class ErrorKind {
  kComputation = 1,
  kUsage = 2,
  kIo = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

inline Error ComputationError(const std::string& message) {
  return Error(ErrorKind::kComputation, message);
}

inline Error UsageError(const std::string& message) {
  return Error(ErrorKind::kUsage, message);
}

inline Error IoError(const std::string& message) {
  return Error(ErrorKind::kIo, message);
}

// Malformed input files are reported as usage errors, with "path:line: ".
inline Error ParseError(std::string_view path, std::size_t line,
                        const std::string& message) {
  return Error(ErrorKind::kUsage, std::string(path) + ":" +
                                      std::to_string(line) + ": " + message);
}

}  // namespace tweetaffect

#endif  // TWEETAFFECT_ERROR_H_
