// Copyright 2026 The clgkit Authors.
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

#ifndef CLG_ERROR_H_
#define CLG_ERROR_H_

#include <stdexcept>
#include <string>

namespace clg {

// Failure classes. The CLI maps each one to exactly one exit code.
enum class ErrorKind {
  kConfig,      // missing or unreadable configuration/resources
  kIo,          // runtime I/O failure
  kValidation,  // malformed or inconsistent input data
  kParse,       // syntactically malformed input
  kUsage,       // bad command-line usage
};

const char *ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error ConfigError(const std::string &msg) {
  return Error(ErrorKind::kConfig, msg);
}
inline Error IoError(const std::string &msg) {
  return Error(ErrorKind::kIo, msg);
}
inline Error ValidationError(const std::string &msg) {
  return Error(ErrorKind::kValidation, msg);
}
inline Error ParseError(const std::string &msg) {
  return Error(ErrorKind::kParse, msg);
}

}  // namespace clg

#endif  // CLG_ERROR_H_
