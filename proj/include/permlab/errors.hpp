// Copyright 2026 The Permlab Authors
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

#ifndef PERMLAB_ERRORS_HPP
#define PERMLAB_ERRORS_HPP

#include <stdexcept>

namespace permlab {

/// Raised for contract violations: bad indices, malformed input, non-square
/// or non-unitary data, and exceeded order/memory limits.
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace permlab

#endif  // PERMLAB_ERRORS_HPP
