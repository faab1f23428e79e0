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

#ifndef CLG_PAIR_IO_H_
#define CLG_PAIR_IO_H_

#include <string>
#include <string_view>

#include "clg/text.h"

namespace clg {

// One JSON object per line with the field order
// id, incorrect, correct, edits, error_types, rule_id, seed.
// No trailing newline.
std::string SerializePair(const CorpusPair &pair);

// Inverse of SerializePair; malformed lines throw a parse error.
CorpusPair ParsePair(std::string_view line);

}  // namespace clg

#endif  // CLG_PAIR_IO_H_
