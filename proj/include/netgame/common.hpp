// Copyright 2026 The netgame Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace netgame {

using NodeId = std::int32_t;
using ActionId = std::int32_t;

// Raised when an exhaustive routine would exceed its hard size limit.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a construction that is guaranteed to succeed does not.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Kernels with a data-parallel inner loop take this; `serial` is the
// reference path the tests compare against.
enum class Exec { serial, parallel };

// splitmix64 finalizer; the basis of every seed derivation in the library.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed split scheme: derive_seed(seed, stream, index) gives an independent
// 64-bit seed per (purpose, trial/node index).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t index) {
  return mix64(mix64(seed ^ mix64(stream)) + index);
}

// Stream tags for derive_seed.
namespace stream {
inline constexpr std::uint64_t kGraph = 1;
inline constexpr std::uint64_t kInit = 2;
inline constexpr std::uint64_t kSchedule = 3;
inline constexpr std::uint64_t kTrial = 4;
inline constexpr std::uint64_t kSearch = 5;
}  // namespace stream

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace netgame
