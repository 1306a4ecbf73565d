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

#ifndef PERMLAB_OP_COUNT_HPP
#define PERMLAB_OP_COUNT_HPP

#include <cstdint>

namespace permlab {

/// Tally of entry-domain arithmetic steps. Counting contract: one
/// multiplication is one ring product of two entry-domain values (including
/// coefficient-times-subpermanent products); one addition is one ring sum or
/// difference of entry-domain values. Sign negations, multiplications by
/// +-1, and index arithmetic are never counted.
struct OpCount {
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;

    OpCount& operator+=(const OpCount& o) {
        multiplications += o.multiplications;
        additions += o.additions;
        return *this;
    }
    friend OpCount operator+(OpCount a, const OpCount& b) { return a += b; }
    /// Difference of two snapshots of the same counter (b taken first).
    friend OpCount operator-(const OpCount& a, const OpCount& b) {
        return {a.multiplications - b.multiplications, a.additions - b.additions};
    }
    bool operator==(const OpCount&) const = default;
};

struct OpCounter {
    OpCount count;
};

/// Ring element wrapper that charges every binary * and +/- to a shared
/// counter. A binary minus costs one addition; unary negation is free. Plain
/// and instrumented runs share one algorithm code path by instantiating the
/// engines with either the bare ring type or this wrapper.
template <typename T>
struct Counted {
    T v{};
    OpCounter* counter = nullptr;

    friend Counted operator*(const Counted& a, const Counted& b) {
        ++a.counter->count.multiplications;
        return {a.v * b.v, a.counter};
    }
    friend Counted operator+(const Counted& a, const Counted& b) {
        ++a.counter->count.additions;
        return {a.v + b.v, a.counter};
    }
    friend Counted operator-(const Counted& a, const Counted& b) {
        ++a.counter->count.additions;
        return {a.v - b.v, a.counter};
    }
    Counted operator-() const { return {-v, counter}; }
};

}  // namespace permlab

#endif  // PERMLAB_OP_COUNT_HPP
