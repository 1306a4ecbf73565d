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

#ifndef PERMLAB_COST_MODEL_HPP
#define PERMLAB_COST_MODEL_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permlab/op_count.hpp"
#include "permlab/permanent.hpp"

namespace permlab {

/// A machine modeled purely by its arithmetic rates. The runtime model is
/// rate division with no instruction-fetch, memory, or I/O overhead; that is
/// a modeling assumption, not a hardware claim.
struct MachineProfile {
    std::string name;
    double additions_per_second = 0;
    double multiplications_per_second = 0;
};

/// ENIAC: 5000 additions or 357 multiplications per second.
MachineProfile eniac_profile();
/// TRADIC: 62500 additions or 3333 multiplications per second.
MachineProfile tradic_profile();
std::vector<MachineProfile> builtin_profiles();

/// Loads additional profiles from a JSON array of
/// {"name", "adds_per_sec", "mults_per_sec"} objects; rates must be > 0.
std::vector<MachineProfile> parse_profiles(std::string_view json_text);

/// Ryser addition count comes in two published forms: the exact
/// (2^n - n)(n + 1) - 2 and the larger (2^n - 2)(n + 1) found in the MPBSM
/// reports. Multiplication counts are identical.
enum class AddsVariant { Exact, Claimed };

struct FormulaCounts {
    OpCount counts;
    /// True for Store-zechin orders outside 3..5: those counts come from the
    /// closed forms validated against the instrumented counter, not from a
    /// tabulated reference.
    bool derived = false;
};

/// Closed-form operation counts for order >= 2. Throws if a count exceeds
/// 64 bits (naive at n >= 20) or if Claimed is requested for a non-Ryser
/// algorithm.
FormulaCounts count_formula(Algorithm algorithm, int order,
                            AddsVariant variant = AddsVariant::Exact);

/// 1000 * (mults / mult_rate + adds / add_rate).
double runtime_ms(const MachineProfile& profile, const OpCount& counts);

/// Published MPBSM sampling times; opaque measured constants, not modeled.
struct SamplingReference {
    int photons;
    double mpbsm_time_ms;
};
const std::array<SamplingReference, 3>& mpbsm_references();  // (3, 0.2) (4, 6.6) (5, 248.8)
double mpbsm_reference_ms(int photons);

struct ComparisonVerdict {
    int photons = 0;
    std::string machine;
    Algorithm algorithm;  // fastest classical algorithm on this machine
    double classical_ms = 0;
    double mpbsm_ms = 0;
    bool classical_wins = false;  // classical_ms < mpbsm_ms, unrounded
};

/// Best classical time per machine vs the MPBSM reference, photons in 3..5.
std::vector<ComparisonVerdict> verdict(int photons);
std::vector<ComparisonVerdict> verdict(int photons, const std::vector<MachineProfile>& machines);

/// Display rounding for milliseconds. Comparisons always use unrounded
/// values; only rendering rounds.
double round_half_up_1dp(double x);
std::string format_ms(double x);  // half-up, one decimal

/// Operation counts of the three algorithms at orders 3..5, with the
/// alternate Ryser addition counts in parentheses.
struct Table4 {
    struct Cell {
        std::uint64_t mults = 0;
        std::uint64_t adds = 0;
        std::optional<std::uint64_t> adds_claimed;
        bool derived = false;
    };
    struct Row {
        std::string algorithm;
        std::array<Cell, 3> cells;  // n = 3, 4, 5
    };
    std::array<int, 3> orders{3, 4, 5};
    std::vector<Row> rows;
};
Table4 build_table4();

/// Modeled classical runtimes on ENIAC and TRADIC plus the MPBSM reference
/// row, in milliseconds. Cells keep full precision; rendering rounds half-up
/// to one decimal.
struct Table5 {
    struct Cell {
        double ms = 0;
        std::optional<double> ms_claimed;
    };
    struct Row {
        std::string algorithm;
        std::string machine;
        std::array<Cell, 3> cells;  // n = 3, 4, 5
    };
    std::array<int, 3> orders{3, 4, 5};
    std::vector<Row> rows;
};
Table5 build_table5();

/// Per-term cost accounting of the Store-zechin development at one order.
struct AttributionTable {
    int order = 0;
    AttributionReport report;
};
/// The order-3, order-4, and order-5 accounting tables.
std::vector<AttributionTable> build_tables123();

enum class TableFormat { Markdown, Csv, Json };
TableFormat table_format_from_name(std::string_view name);  // "md" | "csv" | "json"

/// All three renderings of a table carry identical numeric content; JSON
/// additionally carries full-precision values next to display strings.
std::string render_table4(const Table4& t, TableFormat format);
std::string render_table5(const Table5& t, TableFormat format);
std::string render_attribution(const AttributionTable& t, TableFormat format);
std::string render_verdicts(const std::vector<ComparisonVerdict>& rows, TableFormat format);

}  // namespace permlab

#endif  // PERMLAB_COST_MODEL_HPP
