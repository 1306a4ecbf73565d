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

#include "permlab/permanent.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace permlab {

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Naive:
            return "naive";
        case Algorithm::Ryser:
            return "ryser";
        case Algorithm::StoreZechin:
            return "store-zechin";
    }
    throw DomainError("unknown algorithm tag");
}

Algorithm algorithm_from_name(std::string_view name) {
    if (name == "naive") {
        return Algorithm::Naive;
    }
    if (name == "ryser") {
        return Algorithm::Ryser;
    }
    if (name == "store-zechin") {
        return Algorithm::StoreZechin;
    }
    throw DomainError("unknown algorithm name: " + std::string(name));
}

namespace {

// Column-subset masks are 32-bit; orders beyond 31 are unreachable in
// practice (2^n work) and rejected up front.
constexpr int kMaskOrderCap = 31;

template <typename T>
std::vector<Counted<T>> wrap_entries(const Matrix<T>& m, OpCounter& counter) {
    std::vector<Counted<T>> out;
    out.reserve(m.entries().size());
    for (const T& e : m.entries()) {
        out.push_back(Counted<T>{e, &counter});
    }
    return out;
}

// Sum over all n! permutations, each product built from scratch.
template <typename E>
E naive_eval(int n, const std::vector<E>& a) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::optional<E> total;
    do {
        E prod = a[sigma[0]];
        for (int i = 1; i < n; ++i) {
            prod = prod * a[static_cast<std::size_t>(i) * n + sigma[i]];
        }
        if (total) {
            total = std::move(*total) + prod;
        } else {
            total = std::move(prod);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::move(*total);
}

// Depth-first inclusion-exclusion over nonempty column subsets. A subset is
// extended only by columns larger than its maximum, and the row-sum vector
// of the parent is carried down, so every subset of size >= 2 costs exactly
// n additions to update the row sums. Size-1 subsets copy a column for free.
template <typename E>
class RyserEval {
  public:
    RyserEval(int n, const std::vector<E>& a)
        : n_(n), a_(a), sums_(static_cast<std::size_t>(n) + 1, std::vector<E>(n)) {}

    E run() {
        for (int j = 0; j < n_; ++j) {
            auto& level = sums_[1];
            for (int i = 0; i < n_; ++i) {
                level[i] = a_[static_cast<std::size_t>(i) * n_ + j];
            }
            visit(j, 1);
        }
        E total = std::move(*total_);
        if (n_ % 2 != 0) {
            total = -total;  // the (-1)^n prefactor; sign flips are free
        }
        return total;
    }

  private:
    void visit(int max_col, int size) {
        const auto& s = sums_[size];
        E prod = s[0];
        for (int i = 1; i < n_; ++i) {
            prod = prod * s[i];
        }
        const bool odd = (size % 2) != 0;
        if (!total_) {
            total_ = odd ? -prod : prod;
        } else {
            total_ = odd ? std::move(*total_) - prod : std::move(*total_) + prod;
        }
        for (int j = max_col + 1; j < n_; ++j) {
            auto& next = sums_[size + 1];
            for (int i = 0; i < n_; ++i) {
                next[i] = s[i] + a_[static_cast<std::size_t>(i) * n_ + j];
            }
            visit(j, size + 1);
        }
    }

    int n_;
    const std::vector<E>& a_;
    std::vector<std::vector<E>> sums_;
    std::optional<E> total_;
};

// per(S) over the leading |S| rows and column set S, developed along row
// |S| and memoized by mask, down to the order-2 base case.
template <typename E>
class SzEval {
  public:
    SzEval(int n, const std::vector<E>& a, const Limits& limits) : n_(n), a_(a) {
        const std::uint64_t slots = std::uint64_t{1} << n;
        if (slots * sizeof(std::optional<E>) > limits.memo_budget_bytes) {
            throw DomainError("store-zechin memo table exceeds the configured memory budget");
        }
        memo_.resize(slots);
    }

    const E& eval(std::uint32_t mask) {
        auto& slot = memo_[mask];
        if (slot) {
            return *slot;
        }
        ++misses_;
        const ColumnSubset s = ColumnSubset::of(mask);
        if (s.size == 2) {
            const int j1 = std::countr_zero(mask);
            const int j2 = std::countr_zero(mask & (mask - 1));
            slot = a(0, j1) * a(1, j2) + a(0, j2) * a(1, j1);
            return *slot;
        }
        const int row = s.size - 1;
        std::optional<E> acc;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            const int j = std::countr_zero(rest);
            E term = a(row, j) * eval(s.without(j).mask);
            if (acc) {
                acc = std::move(*acc) + term;
            } else {
                acc = std::move(term);
            }
        }
        slot = std::move(*acc);
        return *slot;
    }

    // Layer-1 development for n >= 3: terms a(n-1, j) * per(S \ {j}) left to
    // right, then the n-1 combining additions. snapshot() reads the shared
    // counter so each cache-miss subtree is charged to the term that
    // triggered it.
    template <typename Snapshot>
    E run_top(Snapshot&& snapshot, std::vector<OpCount>& per_term) {
        const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
        std::vector<E> terms;
        terms.reserve(n_);
        for (int j = 0; j < n_; ++j) {
            const OpCount before = snapshot();
            E term = a(n_ - 1, j) * eval(ColumnSubset::of(full).without(j).mask);
            per_term.push_back(snapshot() - before);
            terms.push_back(std::move(term));
        }
        E total = std::move(terms[0]);
        for (int j = 1; j < n_; ++j) {
            total = std::move(total) + terms[j];
        }
        return total;
    }

    std::uint64_t misses() const { return misses_; }

    std::uint64_t occupied_slots() const {
        std::uint64_t count = 0;
        for (const auto& slot : memo_) {
            count += slot.has_value() ? 1 : 0;
        }
        return count;
    }

  private:
    const E& a(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    int n_;
    const std::vector<E>& a_;
    std::vector<std::optional<E>> memo_;
    std::uint64_t misses_ = 0;
};

template <typename T>
PermanentResult naive_run(const Matrix<T>& m, const Limits& limits) {
    if (m.order() > limits.naive_order_limit) {
        throw DomainError("matrix order exceeds naive_order_limit (" +
                          std::to_string(limits.naive_order_limit) + ")");
    }
    OpCounter counter;
    const auto a = wrap_entries(m, counter);
    Counted<T> value = naive_eval(m.order(), a);
    return {RingElement(std::move(value.v)), counter.count, Algorithm::Naive};
}

void check_subset_order(int order, const Limits& limits) {
    if (order > limits.subset_order_limit) {
        throw DomainError("matrix order exceeds subset_order_limit (" +
                          std::to_string(limits.subset_order_limit) + ")");
    }
    if (order > kMaskOrderCap) {
        throw DomainError("column-subset algorithms support order <= 31");
    }
}

template <typename T>
PermanentResult ryser_run(const Matrix<T>& m, const Limits& limits) {
    check_subset_order(m.order(), limits);
    OpCounter counter;
    const auto a = wrap_entries(m, counter);
    RyserEval<Counted<T>> eval(m.order(), a);
    Counted<T> value = eval.run();
    return {RingElement(std::move(value.v)), counter.count, Algorithm::Ryser};
}

template <typename T>
StoreZechinRun sz_run(const Matrix<T>& m, const Limits& limits) {
    const int n = m.order();
    check_subset_order(n, limits);
    OpCounter counter;
    const auto a = wrap_entries(m, counter);
    StoreZechinRun run;
    Counted<T> value;
    if (n == 1) {
        value = a[0];
    } else if (n == 2) {
        SzEval<Counted<T>> eval(n, a, limits);
        value = eval.eval(0b11);
        run.cache_misses = eval.misses();
        run.distinct_subsets = eval.occupied_slots();
    } else {
        SzEval<Counted<T>> eval(n, a, limits);
        value = eval.run_top([&] { return counter.count; }, run.attribution.per_term);
        run.attribution.final_combination_adds = static_cast<std::uint64_t>(n) - 1;
        run.cache_misses = eval.misses();
        run.distinct_subsets = eval.occupied_slots();
    }
    run.attribution.totals = counter.count;
    run.result = {RingElement(std::move(value.v)), counter.count, Algorithm::StoreZechin};
    return run;
}

template <typename F>
auto on_matrix(const SquareMatrix& a, F&& f) {
    return std::visit([&](const auto& m) { return f(m); }, a.inner());
}

Int binomial(int n, int k) {
    Int out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

Int factorial(int n) {
    Int out = 1;
    for (int i = 2; i <= n; ++i) {
        out *= i;
    }
    return out;
}

}  // namespace

PermanentResult naive_permanent(const SquareMatrix& a, const Limits& limits) {
    return on_matrix(a, [&](const auto& m) { return naive_run(m, limits); });
}

PermanentResult ryser_permanent(const SquareMatrix& a, const Limits& limits) {
    return on_matrix(a, [&](const auto& m) { return ryser_run(m, limits); });
}

StoreZechinRun store_zechin_run(const SquareMatrix& a, const Limits& limits) {
    return on_matrix(a, [&](const auto& m) { return sz_run(m, limits); });
}

PermanentResult store_zechin_permanent(const SquareMatrix& a, const Limits& limits) {
    return store_zechin_run(a, limits).result;
}

AttributionReport store_zechin_attributed(const SquareMatrix& a, const Limits& limits) {
    if (a.order() < 3) {
        throw DomainError("attribution needs order >= 3; orders 1 and 2 are base cases");
    }
    return store_zechin_run(a, limits).attribution;
}

RepetitionReport repetition_report(int order) {
    if (order < 3) {
        throw DomainError("repetition report needs order >= 3");
    }
    RepetitionReport report;
    report.order = order;
    for (int sub_order = order - 2; sub_order >= 2; --sub_order) {
        report.layers.push_back({
            order - sub_order,
            sub_order,
            binomial(order, sub_order),
            factorial(order - sub_order),
        });
    }
    return report;
}

}  // namespace permlab
