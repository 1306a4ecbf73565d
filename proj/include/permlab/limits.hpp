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

#ifndef PERMLAB_LIMITS_HPP
#define PERMLAB_LIMITS_HPP

#include <cstdint>

namespace permlab {

/// Resource guards for the exponential-cost operations.
struct Limits {
    /// Maximum order accepted by the naive (n! term) algorithm.
    int naive_order_limit = 12;
    /// Maximum order accepted by the subset-based algorithms (Ryser,
    /// Store-zechin). Column subsets are 32-bit masks, so 31 is a hard cap.
    int subset_order_limit = 30;
    /// Maximum number of output patterns a full distribution may enumerate.
    std::uint64_t enumeration_cap = 100000;
    /// Cap on the Store-zechin memo table, estimated as
    /// 2^order * sizeof(slot).
    std::uint64_t memo_budget_bytes = std::uint64_t{256} << 20;

    /// Reads overrides from the PERMLAB_LIMITS environment variable, a
    /// comma-separated key=value list, e.g.
    /// "naive_order_limit=10,subset_order_limit=24,enumeration_cap=10000".
    /// Also accepts memo_budget_bytes. Unset keys keep their defaults.
    static Limits from_env();
};

}  // namespace permlab

#endif  // PERMLAB_LIMITS_HPP
