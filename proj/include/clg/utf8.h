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

#ifndef CLG_UTF8_H_
#define CLG_UTF8_H_

#include <string>
#include <string_view>

namespace clg {

// Decodes UTF-8 into code points. Invalid sequences throw a validation
// error that reports the byte offset.
std::u32string DecodeUtf8(std::string_view text);

std::string EncodeUtf8(std::u32string_view codepoints);
void AppendUtf8(char32_t cp, std::string *out);

// Number of code points in a UTF-8 string.
size_t Utf8Length(std::string_view text);

// Substring by code point offsets [begin, end).
std::string Utf8Substr(std::string_view text, size_t begin, size_t end);

bool IsSpace(char32_t cp);

}  // namespace clg

#endif  // CLG_UTF8_H_
