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

#ifndef PERMLAB_PERMANENT_HPP
#define PERMLAB_PERMANENT_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "permlab/limits.hpp"
#include "permlab/matrix.hpp"
#include "permlab/op_count.hpp"
#include "permlab/ring.hpp"

namespace permlab {

enum class Algorithm { Naive, Ryser, StoreZechin };

std::string_view algorithm_name(Algorithm a);  // "naive" | "ryser" | "store-zechin"
Algorithm algorithm_from_name(std::string_view name);

struct PermanentResult {
    RingElement value;
    OpCount counts;  // measured by instrumentation, not from a formula
    Algorithm algorithm;
};

/// Cost split of a Store-zechin run across its layer-1 terms. Terms are
/// evaluated left to right; every cache-miss cost is charged to the term
/// whose evaluation first demanded the sub-permanent. The additions that
/// combine the layer-1 terms are reported separately.
struct AttributionReport {
    std::vector<OpCount> per_term;
    std::uint64_t final_combination_adds = 0;
    OpCount totals;  // = sum(per_term) + (0, final_combination_adds)
};

/// One layer of the fully unfolded last-row expansion tree of an order-n
/// permanent. Layer L holds sub-permanents of order n - L; each distinct
/// sub-permanent of order k appears (n-k)! times in the unfolded tree and is
/// computed once under memoization.
struct RepetitionLayer {
    int layer = 0;
    int sub_order = 0;
    Int distinct_subterms;  // C(n, sub_order)
    Int fold;               // (n - sub_order)!
};

struct RepetitionReport {
    int order = 0;
    std::vector<RepetitionLayer> layers;  // layers with fold > 1, i.e. 2 <= sub_order <= n-2
};

/// Store-zechin run with memoization diagnostics; attribution.per_term is
/// empty below order 3 where the last-row development does not apply.
struct StoreZechinRun {
    PermanentResult result;
    AttributionReport attribution;
    std::uint64_t cache_misses = 0;
    std::uint64_t distinct_subsets = 0;  // memo slots filled
};

/// Direct evaluation of the defining sum over all n! permutations.
/// Exactly n!(n-1) multiplications and n!-1 additions.
PermanentResult naive_permanent(const SquareMatrix& a, const Limits& limits = {});

/// Inclusion-exclusion over nonempty column subsets, traversed depth-first
/// by extending a subset with a column larger than its maximum so that each
/// subset of size >= 2 reuses its parent's row sums with exactly n
/// additions. Exactly (2^n - 1)(n - 1) multiplications and
/// (2^n - n)(n + 1) - 2 additions.
PermanentResult ryser_permanent(const SquareMatrix& a, const Limits& limits = {});

/// Development along the last row, memoizing every sub-permanent by its
/// column subset down to the order-2 base case, so each distinct subset is
/// evaluated exactly once. Measured: n*2^(n-1) - n multiplications and
/// n*2^(n-1) - 2^n + 1 additions.
PermanentResult store_zechin_permanent(const SquareMatrix& a, const Limits& limits = {});

/// Per-term cost attribution of a Store-zechin run; requires order >= 3.
AttributionReport store_zechin_attributed(const SquareMatrix& a, const Limits& limits = {});

/// Full-detail Store-zechin entry point.
StoreZechinRun store_zechin_run(const SquareMatrix& a, const Limits& limits = {});

/// Combinatorics of repeating sub-permanents for order >= 3; pure counting,
/// no matrix involved.
RepetitionReport repetition_report(int order);

}  // namespace permlab

#endif  // PERMLAB_PERMANENT_HPP
