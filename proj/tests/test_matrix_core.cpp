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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "permlab/matrix.hpp"
#include "permlab/permanent.hpp"
#include "test_support.hpp"

using namespace permlab;
using testsupport::random_cplx_matrix;
using testsupport::random_int_matrix;
using testsupport::random_rat_matrix;

namespace {

Matrix<Int> int_matrix(int order, const std::vector<long long>& values) {
    std::vector<Int> entries(values.begin(), values.end());
    return {order, std::move(entries)};
}

const Matrix<Int> kDev4 = int_matrix(4, {7, 0, 1, 2, 5, 3, 4, 5, 3, 5, 6, 7, 1, 7, 8, 9});

}  // namespace

TEST_CASE("construction enforces shape invariants") {
    CHECK_THROWS_AS(Matrix<Int>(2, {Int(1), Int(2), Int(3)}), DomainError);
    CHECK_THROWS_AS(Matrix<Int>(0, {}), DomainError);
    CHECK_THROWS_AS(Matrix<Int>::filled(-3, Int(0)), DomainError);
    CHECK(Matrix<Int>::identity(3).at(1, 1) == 1);
    CHECK(Matrix<Int>::identity(3).at(1, 2) == 0);
}

TEST_CASE("remove_rows_cols keeps relative order") {
    // removing row 3 and column 1 of a 3x3 leaves rows 1-2, columns 2-3
    const auto a = int_matrix(3, {11, 12, 13, 21, 22, 23, 31, 32, 33});
    const auto minor = a.remove_rows_cols({2}, {0});
    CHECK(minor == int_matrix(2, {12, 13, 22, 23}));

    SUBCASE("empty removal is the identity") {
        CHECK(a.remove_rows_cols({}, {}) == a);
    }
    SUBCASE("first row and column of the order-4 development example") {
        CHECK(kDev4.remove_rows_cols({0}, {0}) == int_matrix(3, {3, 4, 5, 5, 6, 7, 7, 8, 9}));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(a.remove_rows_cols({0}, {}), DomainError);
        CHECK_THROWS_AS(a.remove_rows_cols({3}, {0}), DomainError);
        CHECK_THROWS_AS(a.remove_rows_cols({0, 0}, {1, 2}), DomainError);
        CHECK_THROWS_AS(a.remove_rows_cols({0, 1, 2}, {0, 1, 2}), DomainError);
    }
}

TEST_CASE("transpose") {
    CHECK(Matrix<Int>::identity(4).transpose() == Matrix<Int>::identity(4));
    CHECK(int_matrix(2, {1, 2, 3, 4}).transpose() == int_matrix(2, {1, 3, 2, 4}));

    std::mt19937_64 gen(11);
    for (int rep = 0; rep < 20; ++rep) {
        const auto a = random_int_matrix(5, gen);
        CHECK(a.transpose().transpose() == a);
    }
}

TEST_CASE("permute") {
    const auto a = int_matrix(2, {1, 2, 3, 4});
    CHECK(a.permute({0, 1}, {0, 1}) == a);
    CHECK(Matrix<Int>::identity(2).permute({1, 0}, {0, 1}) == int_matrix(2, {0, 1, 1, 0}));
    CHECK_THROWS_AS(a.permute({0, 0}, {0, 1}), DomainError);
    CHECK_THROWS_AS(a.permute({0, 2}, {0, 1}), DomainError);
    CHECK_THROWS_AS(a.permute({0}, {0, 1}), DomainError);
}

TEST_CASE("scale_row") {
    const auto ones = Matrix<Int>::filled(2, Int(1));
    CHECK(ones.scale_row(0, Int(1)) == ones);
    CHECK(ones.scale_row(0, Int(2)) == int_matrix(2, {2, 2, 1, 1}));
    CHECK_THROWS_AS(ones.scale_row(2, Int(2)), DomainError);

    // scaling a row scales the permanent; a zero row kills it
    const SquareMatrix scaled(ones.scale_row(0, Int(2)));
    CHECK(std::get<Int>(store_zechin_permanent(scaled).value) == 4);
    const SquareMatrix zeroed(ones.scale_row(1, Int(0)));
    CHECK(std::get<Int>(store_zechin_permanent(zeroed).value) == 0);
}

TEST_CASE("scale_row through the ring-erased wrapper checks the scalar ring") {
    const SquareMatrix a(int_matrix(2, {1, 2, 3, 4}));
    CHECK(a.scale_row(0, RingElement(Int(3))).entry(0, 1) == RingElement(Int(6)));
    CHECK_THROWS_AS(a.scale_row(0, RingElement(Cplx(3.0))), DomainError);
}

TEST_CASE("json parse matches the documented schema") {
    const auto a = parse_matrix(R"({"order":2,"ring":"int","entries":[[1,2],[3,4]]})",
                                MatrixFormat::Json);
    CHECK(a.ring() == RingTag::Int);
    CHECK(a == SquareMatrix(int_matrix(2, {1, 2, 3, 4})));

    const auto r = parse_matrix(R"({"order":2,"ring":"rational","entries":[["1/2","2/4"],[3,"-7/3"]]})",
                                MatrixFormat::Json);
    CHECK(std::get<Rat>(r.entry(0, 0)) == Rat(1, 2));
    CHECK(std::get<Rat>(r.entry(0, 1)) == Rat(1, 2));  // canonicalized
    CHECK(std::get<Rat>(r.entry(1, 0)) == Rat(3));
    CHECK(std::get<Rat>(r.entry(1, 1)) == Rat(-7, 3));

    const auto c = parse_matrix(R"({"order":1,"ring":"complex","entries":[[[1.5,-2.25]]]})",
                                MatrixFormat::Json);
    CHECK(std::get<Cplx>(c.entry(0, 0)) == Cplx(1.5, -2.25));
}

TEST_CASE("json parse rejects malformed input") {
    CHECK_THROWS_AS(parse_matrix("not json", MatrixFormat::Json), DomainError);
    CHECK_THROWS_AS(parse_matrix(R"({"order":2,"ring":"int","entries":[[1,2],[3]]})",
                                 MatrixFormat::Json),
                    DomainError);
    CHECK_THROWS_AS(parse_matrix(R"({"order":2,"ring":"int","entries":[[1,2]]})", MatrixFormat::Json),
                    DomainError);
    CHECK_THROWS_AS(parse_matrix(R"({"order":2,"ring":"gf2","entries":[[1,0],[0,1]]})",
                                 MatrixFormat::Json),
                    DomainError);
    CHECK_THROWS_AS(parse_matrix(R"({"order":1,"ring":"int","entries":[[1.5]]})", MatrixFormat::Json),
                    DomainError);
    CHECK_THROWS_AS(parse_matrix(R"({"order":1,"ring":"int","entries":[["12x"]]})",
                                 MatrixFormat::Json),
                    DomainError);
    CHECK_THROWS_AS(parse_matrix(R"({"order":1,"ring":"complex","entries":[[[1.0]]]})",
                                 MatrixFormat::Json),
                    DomainError);
    CHECK_THROWS_AS(parse_matrix(R"({"ring":"int","entries":[[1]]})", MatrixFormat::Json),
                    DomainError);
}

TEST_CASE("json round-trip is the identity on all three rings") {
    std::mt19937_64 gen(23);
    for (int rep = 0; rep < 10; ++rep) {
        const SquareMatrix a(random_int_matrix(4, gen));
        CHECK(parse_matrix(emit_matrix(a, MatrixFormat::Json), MatrixFormat::Json) == a);

        const SquareMatrix r(random_rat_matrix(3, gen));
        CHECK(parse_matrix(emit_matrix(r, MatrixFormat::Json), MatrixFormat::Json) == r);

        // complex entries round-trip bit-exactly
        const SquareMatrix c(random_cplx_matrix(3, gen));
        CHECK(parse_matrix(emit_matrix(c, MatrixFormat::Json), MatrixFormat::Json) == c);
    }
}

TEST_CASE("big integers round-trip through decimal strings") {
    Int big("123456789012345678901234567890");
    const SquareMatrix a(Matrix<Int>(1, {big}));
    const std::string text = emit_matrix(a, MatrixFormat::Json);
    CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
    CHECK(parse_matrix(text, MatrixFormat::Json) == a);
}

TEST_CASE("csv parse and emit") {
    const auto a = parse_matrix("1,2\n3,4\n", MatrixFormat::Csv, RingTag::Int);
    CHECK(a == SquareMatrix(int_matrix(2, {1, 2, 3, 4})));
    CHECK(emit_matrix(a, MatrixFormat::Csv) == "1,2\n3,4\n");

    const auto c = parse_matrix("0.5,-1.25\n3,4e-2\n", MatrixFormat::Csv, RingTag::Complex);
    CHECK(std::get<Cplx>(c.entry(0, 1)) == Cplx(-1.25, 0.0));
    CHECK(parse_matrix(emit_matrix(c, MatrixFormat::Csv), MatrixFormat::Csv, RingTag::Complex) == c);

    CHECK_THROWS_AS(parse_matrix("1,2\n3\n", MatrixFormat::Csv, RingTag::Int), DomainError);
    CHECK_THROWS_AS(parse_matrix("1,x\n3,4\n", MatrixFormat::Csv, RingTag::Int), DomainError);
    CHECK_THROWS_AS(parse_matrix("", MatrixFormat::Csv, RingTag::Int), DomainError);
    CHECK_THROWS_AS(parse_matrix("1,2\n3,4\n", MatrixFormat::Csv, RingTag::Rational), DomainError);

    const SquareMatrix with_imag(Matrix<Cplx>(1, {Cplx(1.0, 2.0)}));
    CHECK_THROWS_AS(emit_matrix(with_imag, MatrixFormat::Csv), DomainError);
    const SquareMatrix rational(Matrix<Rat>(1, {Rat(1, 2)}));
    CHECK_THROWS_AS(emit_matrix(rational, MatrixFormat::Csv), DomainError);
}

TEST_CASE("column subsets cache their popcount") {
    const ColumnSubset s = ColumnSubset::of(0b10110);
    CHECK(s.size == 3);
    CHECK(s.contains(1));
    CHECK_FALSE(s.contains(0));
    CHECK(s.without(1).size == 2);
    CHECK(s.with(0).mask == 0b10111);
}
