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

#ifndef PERMLAB_MATRIX_HPP
#define PERMLAB_MATRIX_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "permlab/errors.hpp"
#include "permlab/ring.hpp"

namespace permlab {

/// Bitmask over column indices 0..n-1. Doubles as the Store-zechin memo key
/// and the Ryser subset token. Indices are 0-based here; user-facing text is
/// 1-based throughout the project.
struct ColumnSubset {
    std::uint32_t mask = 0;
    int size = 0;  // cached popcount

    static ColumnSubset of(std::uint32_t mask) {
        return {mask, std::popcount(mask)};
    }
    bool contains(int j) const { return (mask >> j) & 1u; }
    ColumnSubset with(int j) const { return of(mask | (std::uint32_t{1} << j)); }
    ColumnSubset without(int j) const { return of(mask & ~(std::uint32_t{1} << j)); }
    bool operator==(const ColumnSubset&) const = default;
};

/// Dense row-major n-by-n matrix over one entry ring. Values are immutable
/// after construction; every operation returns a new matrix, so instances
/// can be shared freely across threads.
template <typename T>
class Matrix {
  public:
    Matrix(int order, std::vector<T> entries) : order_(order), entries_(std::move(entries)) {
        if (order_ < 1) {
            throw DomainError("matrix order must be >= 1");
        }
        if (entries_.size() != static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_)) {
            throw DomainError("entry count does not match order^2");
        }
    }

    static Matrix identity(int order) {
        Matrix m = filled(order, T(0));
        for (int i = 0; i < order; ++i) {
            m.entries_[static_cast<std::size_t>(i) * order + i] = T(1);
        }
        return m;
    }

    static Matrix filled(int order, const T& value) {
        if (order < 1) {
            throw DomainError("matrix order must be >= 1");
        }
        return Matrix(order, std::vector<T>(static_cast<std::size_t>(order) * order, value));
    }

    int order() const { return order_; }
    const std::vector<T>& entries() const { return entries_; }

    const T& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * order_ + j];
    }

    /// Bounds-checked element access.
    const T& at(int i, int j) const {
        if (i < 0 || i >= order_ || j < 0 || j >= order_) {
            throw DomainError("matrix index out of range");
        }
        return (*this)(i, j);
    }

    /// Minor with the given row and column index sets removed. Requires
    /// |rows| == |cols| < order; surviving rows and columns keep their
    /// relative order.
    Matrix remove_rows_cols(const std::vector<int>& rows, const std::vector<int>& cols) const {
        if (rows.size() != cols.size()) {
            throw DomainError("row and column removal sets must have equal size");
        }
        if (static_cast<int>(rows.size()) >= order_) {
            throw DomainError("cannot remove all rows of a matrix");
        }
        std::vector<char> drop_row(order_, 0);
        std::vector<char> drop_col(order_, 0);
        mark(rows, drop_row, "row");
        mark(cols, drop_col, "column");
        const int k = order_ - static_cast<int>(rows.size());
        std::vector<T> out;
        out.reserve(static_cast<std::size_t>(k) * k);
        for (int i = 0; i < order_; ++i) {
            if (drop_row[i]) {
                continue;
            }
            for (int j = 0; j < order_; ++j) {
                if (!drop_col[j]) {
                    out.push_back((*this)(i, j));
                }
            }
        }
        return Matrix(k, std::move(out));
    }

    Matrix transpose() const {
        std::vector<T> out(entries_.size());
        for (int i = 0; i < order_; ++i) {
            for (int j = 0; j < order_; ++j) {
                out[static_cast<std::size_t>(j) * order_ + i] = (*this)(i, j);
            }
        }
        return Matrix(order_, std::move(out));
    }

    /// Reorders rows and columns: entry (i, j) of the result is entry
    /// (row_perm[i], col_perm[j]) of the input. Both arguments must be
    /// permutations of 0..order-1.
    Matrix permute(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const {
        check_permutation(row_perm, "row");
        check_permutation(col_perm, "column");
        std::vector<T> out;
        out.reserve(entries_.size());
        for (int i = 0; i < order_; ++i) {
            for (int j = 0; j < order_; ++j) {
                out.push_back((*this)(row_perm[i], col_perm[j]));
            }
        }
        return Matrix(order_, std::move(out));
    }

    Matrix scale_row(int row, const T& s) const {
        if (row < 0 || row >= order_) {
            throw DomainError("row index out of range");
        }
        std::vector<T> out = entries_;
        for (int j = 0; j < order_; ++j) {
            out[static_cast<std::size_t>(row) * order_ + j] = (*this)(row, j) * s;
        }
        return Matrix(order_, std::move(out));
    }

    bool operator==(const Matrix&) const = default;

  private:
    void mark(const std::vector<int>& idx, std::vector<char>& flags, const char* what) const {
        for (int i : idx) {
            if (i < 0 || i >= order_) {
                throw DomainError(std::string(what) + " index out of range");
            }
            if (flags[i]) {
                throw DomainError(std::string("duplicate ") + what + " index");
            }
            flags[i] = 1;
        }
    }

    void check_permutation(const std::vector<int>& p, const char* what) const {
        if (static_cast<int>(p.size()) != order_) {
            throw DomainError(std::string(what) + " permutation has wrong length");
        }
        std::vector<char> seen(order_, 0);
        for (int v : p) {
            if (v < 0 || v >= order_ || seen[v]) {
                throw DomainError(std::string(what) + " argument is not a permutation");
            }
            seen[v] = 1;
        }
    }

    int order_;
    std::vector<T> entries_;
};

/// Ring-erased square matrix: one of Matrix<Int>, Matrix<Rat>, Matrix<Cplx>.
class SquareMatrix {
  public:
    using Variant = std::variant<Matrix<Int>, Matrix<Rat>, Matrix<Cplx>>;

    explicit SquareMatrix(Matrix<Int> m) : m_(std::move(m)) {}
    explicit SquareMatrix(Matrix<Rat> m) : m_(std::move(m)) {}
    explicit SquareMatrix(Matrix<Cplx> m) : m_(std::move(m)) {}

    RingTag ring() const { return static_cast<RingTag>(m_.index()); }
    int order() const {
        return std::visit([](const auto& m) { return m.order(); }, m_);
    }

    RingElement entry(int i, int j) const {
        return std::visit([&](const auto& m) { return RingElement(m.at(i, j)); }, m_);
    }

    SquareMatrix remove_rows_cols(const std::vector<int>& rows, const std::vector<int>& cols) const {
        return lift([&](const auto& m) { return m.remove_rows_cols(rows, cols); });
    }
    SquareMatrix transpose() const {
        return lift([](const auto& m) { return m.transpose(); });
    }
    SquareMatrix permute(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const {
        return lift([&](const auto& m) { return m.permute(row_perm, col_perm); });
    }

    /// The scalar must come from the matrix's own ring.
    SquareMatrix scale_row(int row, const RingElement& s) const {
        if (ring_of(s) != ring()) {
            throw DomainError("scalar ring does not match matrix ring");
        }
        return std::visit(
            [&](const auto& m) {
                using T = typename EntryOf<std::decay_t<decltype(m)>>::type;
                return SquareMatrix(m.scale_row(row, std::get<T>(s)));
            },
            m_);
    }

    template <typename T>
    const Matrix<T>& as() const {
        if (const auto* p = std::get_if<Matrix<T>>(&m_)) {
            return *p;
        }
        throw DomainError("matrix ring mismatch");
    }

    const Variant& inner() const { return m_; }

    bool operator==(const SquareMatrix&) const = default;

  private:
    template <typename M>
    struct EntryOf;
    template <typename T>
    struct EntryOf<Matrix<T>> {
        using type = T;
    };

    template <typename F>
    SquareMatrix lift(F&& f) const {
        return std::visit([&](const auto& m) { return SquareMatrix(f(m)); }, m_);
    }

    Variant m_;
};

enum class MatrixFormat { Json, Csv };

/// Parses a matrix from text.
///
/// JSON schema: {"order": n, "ring": "int"|"rational"|"complex",
/// "entries": row-major array of n arrays of n cells}. Integer cells are
/// JSON integers or decimal strings (for values beyond 64 bits), rational
/// cells are "p/q" strings, complex cells are [re, im] number pairs.
///
/// CSV holds one row per line, comma-separated, integers or decimals only;
/// csv_ring selects the target ring (Int or Complex; Rational is not
/// representable in CSV).
SquareMatrix parse_matrix(std::string_view text, MatrixFormat format,
                          RingTag csv_ring = RingTag::Int);

/// Inverse of parse_matrix: parse_matrix(emit_matrix(a, f), f) == a.
std::string emit_matrix(const SquareMatrix& a, MatrixFormat format);

}  // namespace permlab

#endif  // PERMLAB_MATRIX_HPP
