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

#include "permlab/cost_model.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "permlab/errors.hpp"
#include "permlab/ring.hpp"

namespace permlab {

namespace {

using nlohmann::json;

Int factorial(int n) {
    Int out = 1;
    for (int i = 2; i <= n; ++i) {
        out *= i;
    }
    return out;
}

std::uint64_t to_u64(const Int& v, const char* what) {
    static const Int kMax = std::numeric_limits<std::uint64_t>::max();
    if (v < 0 || v > kMax) {
        throw DomainError(std::string(what) + " count exceeds the 64-bit range at this order");
    }
    return v.convert_to<std::uint64_t>();
}

json double_with_display(double value, const std::string& display) {
    return json{{"ms", value}, {"display", display}};
}

std::string join_md_row(const std::vector<std::string>& cells) {
    std::string out = "|";
    for (const auto& c : cells) {
        out += " " + c + " |";
    }
    out += "\n";
    return out;
}

std::string markdown_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
    std::string out = join_md_row(header);
    std::vector<std::string> rule(header.size(), "---");
    out += join_md_row(rule);
    for (const auto& row : rows) {
        out += join_md_row(row);
    }
    return out;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    auto write_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                out << ',';
            }
            out << cells[i];
        }
        out << '\n';
    };
    write_row(header);
    for (const auto& row : rows) {
        write_row(row);
    }
    return out.str();
}

std::string count_cell(std::uint64_t adds, std::optional<std::uint64_t> claimed) {
    std::string out = std::to_string(adds);
    if (claimed) {
        out += " (" + std::to_string(*claimed) + ")";
    }
    return out;
}

std::string ms_cell(double ms, std::optional<double> claimed) {
    std::string out = format_ms(ms);
    if (claimed) {
        out += " (" + format_ms(*claimed) + ")";
    }
    return out;
}

const char* kTable4Title = "Respective arithmetic steps of the three algorithms";
const char* kTable5Title = "Classical running times and MPBSM running times (milliseconds)";

}  // namespace

MachineProfile eniac_profile() {
    return {"ENIAC", 5000.0, 357.0};
}

MachineProfile tradic_profile() {
    return {"TRADIC", 62500.0, 3333.0};
}

std::vector<MachineProfile> builtin_profiles() {
    return {eniac_profile(), tradic_profile()};
}

std::vector<MachineProfile> parse_profiles(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed machine profile json: ") + e.what());
    }
    if (!j.is_array()) {
        throw DomainError("machine profile file must be a json array");
    }
    std::vector<MachineProfile> out;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("name") || !item["name"].is_string() ||
            !item.contains("adds_per_sec") || !item["adds_per_sec"].is_number() ||
            !item.contains("mults_per_sec") || !item["mults_per_sec"].is_number()) {
            throw DomainError("each machine profile needs name, adds_per_sec, mults_per_sec");
        }
        MachineProfile p{item["name"].get<std::string>(), item["adds_per_sec"].get<double>(),
                         item["mults_per_sec"].get<double>()};
        if (!(p.additions_per_second > 0) || !(p.multiplications_per_second > 0)) {
            throw DomainError("machine rates must be strictly positive");
        }
        out.push_back(std::move(p));
    }
    return out;
}

FormulaCounts count_formula(Algorithm algorithm, int order, AddsVariant variant) {
    if (order < 2) {
        throw DomainError("count formulas are defined for order >= 2");
    }
    if (variant == AddsVariant::Claimed && algorithm != Algorithm::Ryser) {
        throw DomainError("the claimed addition count exists only for ryser");
    }
    const Int pow2 = Int(1) << order;
    FormulaCounts out;
    switch (algorithm) {
        case Algorithm::Naive: {
            const Int f = factorial(order);
            out.counts = {to_u64(f * (order - 1), "naive multiplication"),
                          to_u64(f - 1, "naive addition")};
            return out;
        }
        case Algorithm::Ryser: {
            const Int adds = variant == AddsVariant::Claimed
                                 ? Int((pow2 - 2) * (order + 1))
                                 : Int((pow2 - order) * (order + 1) - 2);
            out.counts = {to_u64((pow2 - 1) * (order - 1), "ryser multiplication"),
                          to_u64(adds, "ryser addition")};
            return out;
        }
        case Algorithm::StoreZechin: {
            const Int half = Int(1) << (order - 1);
            out.counts = {to_u64(Int(order) * half - order, "store-zechin multiplication"),
                          to_u64(Int(order) * half - pow2 + 1, "store-zechin addition")};
            out.derived = order < 3 || order > 5;
            return out;
        }
    }
    throw DomainError("unknown algorithm tag");
}

double runtime_ms(const MachineProfile& profile, const OpCount& counts) {
    return 1000.0 * (static_cast<double>(counts.multiplications) / profile.multiplications_per_second +
                     static_cast<double>(counts.additions) / profile.additions_per_second);
}

const std::array<SamplingReference, 3>& mpbsm_references() {
    static const std::array<SamplingReference, 3> refs{{{3, 0.2}, {4, 6.6}, {5, 248.8}}};
    return refs;
}

double mpbsm_reference_ms(int photons) {
    for (const auto& r : mpbsm_references()) {
        if (r.photons == photons) {
            return r.mpbsm_time_ms;
        }
    }
    throw DomainError("no MPBSM reference datum for " + std::to_string(photons) + " photons");
}

std::vector<ComparisonVerdict> verdict(int photons) {
    return verdict(photons, builtin_profiles());
}

std::vector<ComparisonVerdict> verdict(int photons, const std::vector<MachineProfile>& machines) {
    const double mpbsm = mpbsm_reference_ms(photons);
    std::vector<ComparisonVerdict> out;
    for (const auto& machine : machines) {
        ComparisonVerdict v;
        v.photons = photons;
        v.machine = machine.name;
        v.mpbsm_ms = mpbsm;
        bool first = true;
        // the fastest algorithm is the honest benchmark for the machine
        for (Algorithm alg : {Algorithm::Naive, Algorithm::Ryser, Algorithm::StoreZechin}) {
            const double ms = runtime_ms(machine, count_formula(alg, photons).counts);
            if (first || ms < v.classical_ms) {
                v.classical_ms = ms;
                v.algorithm = alg;
                first = false;
            }
        }
        v.classical_wins = v.classical_ms < mpbsm;
        out.push_back(std::move(v));
    }
    return out;
}

double round_half_up_1dp(double x) {
    return std::floor(x * 10.0 + 0.5) / 10.0;
}

std::string format_ms(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", round_half_up_1dp(x));
    return buf;
}

Table4 build_table4() {
    Table4 t;
    for (Algorithm alg : {Algorithm::Naive, Algorithm::Ryser, Algorithm::StoreZechin}) {
        Table4::Row row;
        row.algorithm = alg == Algorithm::StoreZechin ? "Store-zechin"
                        : alg == Algorithm::Ryser     ? "Ryser"
                                                      : "Naive";
        for (std::size_t i = 0; i < t.orders.size(); ++i) {
            const FormulaCounts fc = count_formula(alg, t.orders[i]);
            Table4::Cell cell;
            cell.mults = fc.counts.multiplications;
            cell.adds = fc.counts.additions;
            cell.derived = fc.derived;
            if (alg == Algorithm::Ryser) {
                cell.adds_claimed =
                    count_formula(alg, t.orders[i], AddsVariant::Claimed).counts.additions;
            }
            row.cells[i] = cell;
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table5 build_table5() {
    Table5 t;
    for (Algorithm alg : {Algorithm::Naive, Algorithm::Ryser, Algorithm::StoreZechin}) {
        for (const MachineProfile& machine : builtin_profiles()) {
            Table5::Row row;
            row.algorithm = alg == Algorithm::StoreZechin ? "Store-zechin"
                            : alg == Algorithm::Ryser     ? "Ryser"
                                                          : "Naive";
            row.machine = machine.name;
            for (std::size_t i = 0; i < t.orders.size(); ++i) {
                Table5::Cell cell;
                cell.ms = runtime_ms(machine, count_formula(alg, t.orders[i]).counts);
                if (alg == Algorithm::Ryser) {
                    cell.ms_claimed = runtime_ms(
                        machine, count_formula(alg, t.orders[i], AddsVariant::Claimed).counts);
                }
                row.cells[i] = cell;
            }
            t.rows.push_back(std::move(row));
        }
    }
    Table5::Row quantum;
    quantum.algorithm = "Quantum";
    quantum.machine = "MPBSM";
    for (std::size_t i = 0; i < t.orders.size(); ++i) {
        quantum.cells[i] = {mpbsm_reference_ms(t.orders[i]), std::nullopt};
    }
    t.rows.push_back(std::move(quantum));
    return t;
}

std::vector<AttributionTable> build_tables123() {
    std::vector<AttributionTable> out;
    for (int order : {3, 4, 5}) {
        // counts are input-independent, so any matrix of the order will do
        const SquareMatrix ones(Matrix<Int>::filled(order, Int(1)));
        out.push_back({order, store_zechin_attributed(ones)});
    }
    return out;
}

TableFormat table_format_from_name(std::string_view name) {
    if (name == "md" || name == "markdown") {
        return TableFormat::Markdown;
    }
    if (name == "csv") {
        return TableFormat::Csv;
    }
    if (name == "json") {
        return TableFormat::Json;
    }
    throw DomainError("unknown table format: " + std::string(name));
}

std::string render_table4(const Table4& t, TableFormat format) {
    if (format == TableFormat::Json) {
        json rows = json::array();
        for (const auto& row : t.rows) {
            json cells = json::array();
            for (std::size_t i = 0; i < row.cells.size(); ++i) {
                json cell{{"n", t.orders[i]},
                          {"multiplications", row.cells[i].mults},
                          {"additions", row.cells[i].adds}};
                if (row.cells[i].adds_claimed) {
                    cell["additions_claimed"] = *row.cells[i].adds_claimed;
                }
                if (row.cells[i].derived) {
                    cell["provenance"] = "derived";
                }
                cells.push_back(std::move(cell));
            }
            rows.push_back(json{{"algorithm", row.algorithm}, {"cells", std::move(cells)}});
        }
        return json{{"title", kTable4Title}, {"rows", std::move(rows)}}.dump(2) + "\n";
    }
    std::vector<std::string> header{"Algorithm"};
    for (int n : t.orders) {
        header.push_back("mults (n=" + std::to_string(n) + ")");
        header.push_back("adds (n=" + std::to_string(n) + ")");
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : t.rows) {
        std::vector<std::string> cells{row.algorithm};
        for (const auto& cell : row.cells) {
            cells.push_back(std::to_string(cell.mults));
            cells.push_back(count_cell(cell.adds, cell.adds_claimed));
        }
        rows.push_back(std::move(cells));
    }
    return format == TableFormat::Markdown ? markdown_table(header, rows) : csv_table(header, rows);
}

std::string render_table5(const Table5& t, TableFormat format) {
    if (format == TableFormat::Json) {
        json rows = json::array();
        for (const auto& row : t.rows) {
            json cells = json::array();
            for (std::size_t i = 0; i < row.cells.size(); ++i) {
                json cell = double_with_display(row.cells[i].ms, format_ms(row.cells[i].ms));
                cell["n"] = t.orders[i];
                if (row.cells[i].ms_claimed) {
                    cell["ms_claimed"] = *row.cells[i].ms_claimed;
                    cell["display_claimed"] = format_ms(*row.cells[i].ms_claimed);
                }
                cells.push_back(std::move(cell));
            }
            rows.push_back(json{{"algorithm", row.algorithm},
                                {"machine", row.machine},
                                {"cells", std::move(cells)}});
        }
        return json{{"title", kTable5Title}, {"rows", std::move(rows)}}.dump(2) + "\n";
    }
    std::vector<std::string> header{"Algorithm", "Machine"};
    for (int n : t.orders) {
        header.push_back("ms (n=" + std::to_string(n) + ")");
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : t.rows) {
        std::vector<std::string> cells{row.algorithm, row.machine};
        for (const auto& cell : row.cells) {
            cells.push_back(ms_cell(cell.ms, cell.ms_claimed));
        }
        rows.push_back(std::move(cells));
    }
    return format == TableFormat::Markdown ? markdown_table(header, rows) : csv_table(header, rows);
}

std::string render_attribution(const AttributionTable& t, TableFormat format) {
    const std::string title =
        "Numbers of multiplications and additions for an order-" + std::to_string(t.order) +
        " permanent";
    if (format == TableFormat::Json) {
        json terms = json::array();
        for (std::size_t i = 0; i < t.report.per_term.size(); ++i) {
            terms.push_back(json{{"term", i + 1},
                                 {"multiplications", t.report.per_term[i].multiplications},
                                 {"additions", t.report.per_term[i].additions}});
        }
        return json{{"title", title},
                    {"order", t.order},
                    {"terms", std::move(terms)},
                    {"final_combination_adds", t.report.final_combination_adds},
                    {"totals",
                     json{{"multiplications", t.report.totals.multiplications},
                          {"additions", t.report.totals.additions}}}}
                   .dump(2) +
               "\n";
    }
    std::vector<std::string> header{"At Layer 1", "Multiplications", "Additions"};
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < t.report.per_term.size(); ++i) {
        rows.push_back({"Term " + std::to_string(i + 1),
                        std::to_string(t.report.per_term[i].multiplications),
                        std::to_string(t.report.per_term[i].additions)});
    }
    const char* sum_label = format == TableFormat::Markdown ? "Σ" : "sum";
    rows.push_back({sum_label, "0", std::to_string(t.report.final_combination_adds)});
    rows.push_back({"Total", std::to_string(t.report.totals.multiplications),
                    std::to_string(t.report.totals.additions)});
    return format == TableFormat::Markdown ? markdown_table(header, rows) : csv_table(header, rows);
}

std::string render_verdicts(const std::vector<ComparisonVerdict>& rows, TableFormat format) {
    if (format == TableFormat::Json) {
        json out = json::array();
        for (const auto& v : rows) {
            out.push_back(json{{"photons", v.photons},
                               {"machine", v.machine},
                               {"algorithm", std::string(algorithm_name(v.algorithm))},
                               {"classical_ms", v.classical_ms},
                               {"classical_display", format_ms(v.classical_ms)},
                               {"mpbsm_ms", v.mpbsm_ms},
                               {"mpbsm_display", format_ms(v.mpbsm_ms)},
                               {"classical_wins", v.classical_wins}});
        }
        return out.dump(2) + "\n";
    }
    std::vector<std::string> header{"Photons", "Machine",   "Fastest algorithm",
                                    "Classical (ms)", "MPBSM (ms)", "Classical wins"};
    std::vector<std::vector<std::string>> body;
    for (const auto& v : rows) {
        body.push_back({std::to_string(v.photons), v.machine,
                        std::string(algorithm_name(v.algorithm)), format_ms(v.classical_ms),
                        format_ms(v.mpbsm_ms), v.classical_wins ? "yes" : "no"});
    }
    return format == TableFormat::Markdown ? markdown_table(header, body) : csv_table(header, body);
}

}  // namespace permlab
