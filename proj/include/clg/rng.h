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

#ifndef CLG_RNG_H_
#define CLG_RNG_H_

#include <cstdint>
#include <random>

namespace clg {

// Portable random stream. std::mt19937_64 output is fixed by the standard;
// the distributions layered on top are implemented here because the
// standard library ones differ across implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform in [0, n). n == 1 returns 0 without consuming a draw.
  size_t Index(size_t n);

  // Uniform in [0, 1) with 53 bits of precision.
  double Uniform();

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t x);

// Seed of the stream owned by one work item, e.g. one input sentence.
uint64_t DeriveSeed(uint64_t seed, uint64_t index);

}  // namespace clg

#endif  // CLG_RNG_H_
