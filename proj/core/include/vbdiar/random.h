// Copyright 2026 The vbdiar Authors.
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

#ifndef VBDIAR_RANDOM_H_
#define VBDIAR_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace vbdiar {

using Rng = std::mt19937_64;

// Derives an independent sub-seed for stream `stream` of a parent seed.
// The rule is splitmix64(parent ^ splitmix64(stream + 1)) and must stay fixed:
// restarts, conversations and corpora are reproducible across versions only
// as long as this function does not change.
std::uint64_t DeriveSeed(std::uint64_t parent, std::uint64_t stream);

// Stable 64-bit FNV-1a hash, used to key per-recording seeds by name.
std::uint64_t StableHash(std::string_view text);

}  // namespace vbdiar

#endif  // VBDIAR_RANDOM_H_
