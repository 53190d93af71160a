// Copyright 2026 The vcgr Authors.
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

#ifndef VCGR_RNG_HPP_
#define VCGR_RNG_HPP_

#include <cstdint>
#include <limits>
#include <random>

namespace vcgr {

// Every random draw in the library flows through SeededRng so outputs are
// byte-identical across standard libraries: std::mt19937_64 has a
// standard-specified bit stream, and derived values avoid std::*_distribution,
// whose streams are implementation-defined.
inline constexpr const char* kPrngName = "mt19937_64/u53";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1): top 53 bits of one draw.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n), unbiased by rejecting the low 2^64 mod n values.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t reject = (0 - n) % n;
    std::uint64_t v = next_u64();
    while (v < reject) v = next_u64();
    return v % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vcgr

#endif  // VCGR_RNG_HPP_
