// Copyright 2026 The fermisim developers
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

#pragma once

#include <cstdint>

namespace fermisim {

/// Splittable counter-based generator built on the SplitMix64 finalizer.
/// A stream is addressed by (seed, stream_index); identical addresses
/// reproduce identical draws on every platform, so independent shots can
/// run in any order or in parallel.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index)
      : counter_(mix(seed ^ mix(stream_index * kGamma + kSalt))) {}

  std::uint64_t next_u64() {
    counter_ += kGamma;
    return mix(counter_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; draws two uniforms per pair.
  double next_normal();

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += kGamma;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kSalt = 0xd1b54a32d192ed03ULL;

  std::uint64_t counter_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace fermisim
