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

#include <json.hpp>

#include "permlab/cost_model.hpp"
#include "test_support.hpp"

using namespace permlab;

TEST_CASE("count formulas") {
    CHECK(count_formula(Algorithm::Naive, 5).counts == OpCount{480, 119});
    CHECK(count_formula(Algorithm::Naive, 3).counts == OpCount{12, 5});
    CHECK(count_formula(Algorithm::Ryser, 3).counts == OpCount{14, 18});
    CHECK(count_formula(Algorithm::Ryser, 3, AddsVariant::Claimed).counts == OpCount{14, 24});
    CHECK(count_formula(Algorithm::Ryser, 5, AddsVariant::Claimed).counts == OpCount{124, 180});
    CHECK(count_formula(Algorithm::StoreZechin, 4).counts == OpCount{28, 17});
    CHECK_FALSE(count_formula(Algorithm::StoreZechin, 4).derived);

    SUBCASE("ryser at order 2, cross-checked against the instrumented counter") {
        const FormulaCounts fc = count_formula(Algorithm::Ryser, 2);
        CHECK(fc.counts == OpCount{3, 4});
        const SquareMatrix a(Matrix<Int>(2, {Int(1), Int(2), Int(3), Int(4)}));
        CHECK(ryser_permanent(a).counts == fc.counts);
    }
    SUBCASE("store-zechin outside the tabulated orders is flagged derived") {
        const FormulaCounts fc = count_formula(Algorithm::StoreZechin, 7);
        CHECK(fc.derived);
        CHECK(fc.counts == OpCount{7 * 64 - 7, 7 * 64 - 128 + 1});
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(count_formula(Algorithm::Naive, 1), DomainError);
        CHECK_THROWS_AS(count_formula(Algorithm::Naive, 3, AddsVariant::Claimed), DomainError);
        CHECK_THROWS_AS(count_formula(Algorithm::StoreZechin, 3, AddsVariant::Claimed), DomainError);
        // naive counts leave the 64-bit range at order 20
        CHECK_NOTHROW(count_formula(Algorithm::Naive, 19));
        CHECK_THROWS_AS(count_formula(Algorithm::Naive, 20), DomainError);
    }
}

TEST_CASE("runtime model is pure rate division") {
    const MachineProfile eniac = eniac_profile();
    const MachineProfile tradic = tradic_profile();
    CHECK(runtime_ms(eniac, {12, 5}) == doctest::Approx(34.61344537815126).epsilon(1e-6));
    CHECK(format_ms(runtime_ms(eniac, {12, 5})) == "34.6");
    CHECK(format_ms(runtime_ms(tradic, {75, 49})) == "23.3");
    CHECK(runtime_ms(eniac, {0, 0}) == 0.0);

    SUBCASE("linearity") {
        const OpCount c1{17, 31};
        const OpCount c2{5, 800};
        CHECK(runtime_ms(tradic, c1 + c2) ==
              doctest::Approx(runtime_ms(tradic, c1) + runtime_ms(tradic, c2)).epsilon(1e-12));
    }
}

TEST_CASE("display rounding is half-up to one decimal") {
    CHECK(round_half_up_1dp(140.05042016806723) == doctest::Approx(140.1));
    CHECK(round_half_up_1dp(0.25) == doctest::Approx(0.3));
    CHECK(round_half_up_1dp(34.6134) == doctest::Approx(34.6));
    CHECK(format_ms(140.05042016806723) == "140.1");
    CHECK(format_ms(2.7802) == "2.8");
}

TEST_CASE("exact addition count stays below the claimed one") {
    // at n = 20 the two Ryser addition formulas agree to better than 1%
    const auto exact = count_formula(Algorithm::Ryser, 20).counts.additions;
    const auto claimed = count_formula(Algorithm::Ryser, 20, AddsVariant::Claimed).counts.additions;
    CHECK(exact < claimed);
    CHECK(static_cast<double>(exact) / static_cast<double>(claimed) > 0.99);
}

TEST_CASE("table 4 content") {
    const Table4 t = build_table4();
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0].algorithm == "Naive");
    CHECK(t.rows[0].cells[0].mults == 12);
    CHECK(t.rows[0].cells[2].adds == 119);
    CHECK(t.rows[1].algorithm == "Ryser");
    CHECK(t.rows[1].cells[1].mults == 45);
    CHECK(t.rows[1].cells[1].adds == 58);
    CHECK(t.rows[1].cells[1].adds_claimed == 70);
    CHECK(t.rows[2].algorithm == "Store-zechin");
    CHECK(t.rows[2].cells[0].mults == 9);
    CHECK(t.rows[2].cells[2].adds == 49);

    const std::string csv = render_table4(t, TableFormat::Csv);
    CHECK(csv.find("Store-zechin,9,5,28,17,75,49") != std::string::npos);
    CHECK(csv.find("Ryser,14,18 (24),45,58 (70),124,160 (180)") != std::string::npos);

    const std::string md = render_table4(t, TableFormat::Markdown);
    CHECK(md.find("| Naive | 12 | 5 | 72 | 23 | 480 | 119 |") != std::string::npos);

    // the json rendering carries the same numbers
    const auto j = nlohmann::json::parse(render_table4(t, TableFormat::Json));
    CHECK(j["rows"][1]["cells"][2]["additions"] == 160);
    CHECK(j["rows"][1]["cells"][2]["additions_claimed"] == 180);
}

TEST_CASE("table 5 content") {
    const Table5 t = build_table5();
    REQUIRE(t.rows.size() == 7);
    auto cell = [&](const std::string& alg, const std::string& machine, int i) {
        for (const auto& row : t.rows) {
            if (row.algorithm == alg && row.machine == machine) {
                return row.cells[i];
            }
        }
        REQUIRE(false);
        return Table5::Cell{};
    };
    CHECK(cell("Naive", "ENIAC", 0).ms == doctest::Approx(34.61344537815126).epsilon(1e-8));
    CHECK(cell("Naive", "TRADIC", 2).ms == doctest::Approx(145.9184014401440).epsilon(1e-8));
    CHECK(cell("Ryser", "ENIAC", 1).ms == doctest::Approx(137.6504201680672).epsilon(1e-8));
    CHECK(*cell("Ryser", "ENIAC", 1).ms_claimed == doctest::Approx(140.0504201680672).epsilon(1e-8));
    CHECK(cell("Store-zechin", "ENIAC", 2).ms == doctest::Approx(219.8840336134454).epsilon(1e-8));
    CHECK(cell("Quantum", "MPBSM", 2).ms == 248.8);

    const std::string md = render_table5(t, TableFormat::Markdown);
    CHECK(md.find("| Store-zechin | ENIAC | 26.2 | 81.8 | 219.9 |") != std::string::npos);
    CHECK(md.find("| Ryser | TRADIC | 4.5 (4.6) | 14.4 (14.6) | 39.8 (40.1) |") != std::string::npos);

    // full precision survives into json next to the display strings
    const auto j = nlohmann::json::parse(render_table5(t, TableFormat::Json));
    CHECK(j["rows"][0]["cells"][0]["ms"].get<double>() == doctest::Approx(34.61344537815126).epsilon(1e-8));
    CHECK(j["rows"][0]["cells"][0]["display"] == "34.6");
}

TEST_CASE("tables 1-3 content") {
    const auto tables = build_tables123();
    REQUIRE(tables.size() == 3);
    CHECK(tables[0].order == 3);
    CHECK(tables[1].order == 4);
    CHECK(tables[2].order == 5);
    CHECK(tables[2].report.per_term ==
          std::vector<OpCount>{{29, 17}, {20, 12}, {13, 8}, {8, 5}, {5, 3}});

    const std::string md = render_attribution(tables[1], TableFormat::Markdown);
    CHECK(md.find("| Term 1 | 10 | 5 |") != std::string::npos);
    CHECK(md.find("| Σ | 0 | 3 |") != std::string::npos);
    CHECK(md.find("| Total | 28 | 17 |") != std::string::npos);

    const std::string csv = render_attribution(tables[0], TableFormat::Csv);
    CHECK(csv.find("Term 1,3,1") != std::string::npos);
    CHECK(csv.find("Total,9,5") != std::string::npos);
}

TEST_CASE("verdicts") {
    const auto v5 = verdict(5);
    REQUIRE(v5.size() == 2);
    CHECK(v5[0].machine == "ENIAC");
    CHECK(v5[0].algorithm == Algorithm::StoreZechin);
    CHECK(v5[0].classical_ms == doctest::Approx(219.8840336134454).epsilon(1e-8));
    CHECK(v5[0].mpbsm_ms == 248.8);
    CHECK(v5[0].classical_wins);
    CHECK(v5[1].machine == "TRADIC");
    CHECK(v5[1].classical_ms == doctest::Approx(23.28625022502250).epsilon(1e-8));
    CHECK(v5[1].classical_wins);

    for (int photons : {3, 4}) {
        for (const auto& v : verdict(photons)) {
            CHECK_FALSE(v.classical_wins);
            CHECK(v.classical_ms > v.mpbsm_ms);
        }
    }
    CHECK_THROWS_AS(verdict(6), DomainError);
    CHECK_THROWS_AS(verdict(2), DomainError);

    SUBCASE("custom machines flow through") {
        const auto profiles = parse_profiles(
            R"([{"name":"Modern","adds_per_sec":1e9,"mults_per_sec":1e9}])");
        REQUIRE(profiles.size() == 1);
        const auto rows = verdict(5, profiles);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].machine == "Modern");
        CHECK(rows[0].classical_wins);
    }
}

TEST_CASE("machine profile parsing validates rates") {
    CHECK_THROWS_AS(parse_profiles("["), DomainError);
    CHECK_THROWS_AS(parse_profiles("{}"), DomainError);
    CHECK_THROWS_AS(parse_profiles(R"([{"name":"X","adds_per_sec":0,"mults_per_sec":1}])"),
                    DomainError);
    CHECK_THROWS_AS(parse_profiles(R"([{"name":"X","adds_per_sec":5}])"), DomainError);
    const auto builtin = builtin_profiles();
    REQUIRE(builtin.size() == 2);
    CHECK(builtin[0].additions_per_second == 5000.0);
    CHECK(builtin[0].multiplications_per_second == 357.0);
    CHECK(builtin[1].additions_per_second == 62500.0);
    CHECK(builtin[1].multiplications_per_second == 3333.0);
}

TEST_CASE("measured counts equal formulas across orders") {
    std::mt19937_64 gen(71);
    for (int n = 2; n <= 9; ++n) {
        const SquareMatrix a(testsupport::random_int_matrix(n, gen));
        if (n <= 8) {
            CHECK(naive_permanent(a).counts == count_formula(Algorithm::Naive, n).counts);
        }
        CHECK(ryser_permanent(a).counts == count_formula(Algorithm::Ryser, n).counts);
        CHECK(store_zechin_permanent(a).counts ==
              count_formula(Algorithm::StoreZechin, n).counts);
    }
}
