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

#ifndef CLG_STRINGS_H_
#define CLG_STRINGS_H_

#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "clg/error.h"

namespace clg {

std::vector<std::string> Split(std::string_view text, char sep);
// Splits on runs of ASCII whitespace; no empty fields.
std::vector<std::string> SplitWhitespace(std::string_view text);
std::string_view Trim(std::string_view text);
std::string Join(const std::vector<std::string> &parts, std::string_view sep);

// Strips a trailing '\r' left by CRLF files.
void ChompCr(std::string *line);

// Opens a file for reading; failure throws an error of the given kind.
std::ifstream OpenInput(const std::string &path,
                        ErrorKind kind = ErrorKind::kIo);
std::ofstream OpenOutput(const std::string &path);

}  // namespace clg

#endif  // CLG_STRINGS_H_
