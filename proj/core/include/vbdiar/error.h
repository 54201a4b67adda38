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

#ifndef VBDIAR_ERROR_H_
#define VBDIAR_ERROR_H_

#include <stdexcept>
#include <string>

namespace vbdiar {

// Malformed or inconsistent input data: dimension mismatches, bad files,
// degenerate samples that cannot be recovered.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical routine produced a non-finite value or a factorization failed
// where the model guarantees it should not.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration values (negative counts, out-of-range knobs) are
// reported with std::invalid_argument.

}  // namespace vbdiar

#endif  // VBDIAR_ERROR_H_
