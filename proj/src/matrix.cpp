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

#include "permlab/matrix.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "permlab/detail/matrix_json.hpp"

namespace permlab {

namespace {

using nlohmann::json;

Int int_from_cell(const json& cell) {
    if (cell.is_number_integer()) {
        return Int(cell.get<long long>());
    }
    if (cell.is_number_unsigned()) {
        return Int(cell.get<unsigned long long>());
    }
    if (cell.is_string()) {
        try {
            return Int(cell.get<std::string>());
        } catch (const std::exception&) {
            throw DomainError("malformed integer literal: " + cell.get<std::string>());
        }
    }
    throw DomainError("int ring entries must be integers or decimal strings");
}

Rat rat_from_cell(const json& cell) {
    if (cell.is_number_integer()) {
        return Rat(Int(cell.get<long long>()));
    }
    if (cell.is_number_unsigned()) {
        return Rat(Int(cell.get<unsigned long long>()));
    }
    if (cell.is_string()) {
        return parse_rational(cell.get<std::string>());
    }
    throw DomainError("rational ring entries must be \"p/q\" strings or integers");
}

Cplx cplx_from_cell(const json& cell) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
        throw DomainError("complex ring entries must be [re, im] number pairs");
    }
    return {cell[0].get<double>(), cell[1].get<double>()};
}

json int_to_cell(const Int& v) {
    static const Int kMin = std::numeric_limits<long long>::min();
    static const Int kMax = std::numeric_limits<long long>::max();
    if (v >= kMin && v <= kMax) {
        return v.convert_to<long long>();
    }
    return v.str();
}

template <typename T, typename CellParser>
SquareMatrix matrix_from_entries(int order, const json& entries, CellParser&& parse_cell) {
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(order) * order);
    for (const auto& row : entries) {
        if (!row.is_array() || static_cast<int>(row.size()) != order) {
            throw DomainError("entries must form a square row-major array");
        }
        for (const auto& cell : row) {
            out.push_back(parse_cell(cell));
        }
    }
    return SquareMatrix(Matrix<T>(order, std::move(out)));
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = text.find(sep);
        if (pos == std::string_view::npos) {
            out.push_back(text);
            return out;
        }
        out.push_back(text.substr(0, pos));
        text = text.substr(pos + 1);
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

SquareMatrix parse_csv(std::string_view text, RingTag ring) {
    if (ring == RingTag::Rational) {
        throw DomainError("csv holds integers/decimals only; use json for rational matrices");
    }
    std::vector<std::string_view> lines;
    for (std::string_view line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!trim(line).empty()) {
            lines.push_back(line);
        }
    }
    const int order = static_cast<int>(lines.size());
    if (order < 1) {
        throw DomainError("csv matrix is empty");
    }
    std::vector<Int> ints;
    std::vector<Cplx> cplxs;
    for (const auto& line : lines) {
        const auto cells = split(line, ',');
        if (static_cast<int>(cells.size()) != order) {
            throw DomainError("csv matrix is not square");
        }
        for (auto cell : cells) {
            const std::string token(trim(cell));
            if (token.empty()) {
                throw DomainError("empty csv cell");
            }
            if (ring == RingTag::Int) {
                try {
                    ints.emplace_back(token);
                } catch (const std::exception&) {
                    throw DomainError("malformed integer literal: " + token);
                }
            } else {
                char* end = nullptr;
                const double value = std::strtod(token.c_str(), &end);
                if (end != token.c_str() + token.size()) {
                    throw DomainError("malformed decimal literal: " + token);
                }
                cplxs.emplace_back(value, 0.0);
            }
        }
    }
    if (ring == RingTag::Int) {
        return SquareMatrix(Matrix<Int>(order, std::move(ints)));
    }
    return SquareMatrix(Matrix<Cplx>(order, std::move(cplxs)));
}

std::string double_to_text(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string emit_csv(const SquareMatrix& a) {
    if (a.ring() == RingTag::Rational) {
        throw DomainError("csv holds integers/decimals only; use json for rational matrices");
    }
    std::ostringstream out;
    const int n = a.order();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j > 0) {
                out << ',';
            }
            if (a.ring() == RingTag::Int) {
                out << std::get<Int>(a.entry(i, j)).str();
            } else {
                const Cplx z = std::get<Cplx>(a.entry(i, j));
                if (z.imag() != 0.0) {
                    throw DomainError("csv cannot represent entries with a nonzero imaginary part");
                }
                out << double_to_text(z.real());
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

namespace detail {

json matrix_to_json(const SquareMatrix& a) {
    json entries = json::array();
    const int n = a.order();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) {
            const RingElement v = a.entry(i, j);
            if (const auto* x = std::get_if<Int>(&v)) {
                row.push_back(int_to_cell(*x));
            } else if (const auto* x = std::get_if<Rat>(&v)) {
                row.push_back(rational_to_string(*x));
            } else {
                const Cplx z = std::get<Cplx>(v);
                row.push_back(json::array({z.real(), z.imag()}));
            }
        }
        entries.push_back(std::move(row));
    }
    return json{{"order", a.order()}, {"ring", ring_name(a.ring())}, {"entries", std::move(entries)}};
}

SquareMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) {
        throw DomainError("matrix json must be an object");
    }
    if (!j.contains("order") || !j["order"].is_number_integer()) {
        throw DomainError("matrix json needs an integer \"order\"");
    }
    const int order = j["order"].get<int>();
    if (order < 1) {
        throw DomainError("matrix order must be >= 1");
    }
    if (!j.contains("ring") || !j["ring"].is_string()) {
        throw DomainError("matrix json needs a \"ring\" of int|rational|complex");
    }
    const RingTag ring = ring_from_name(j["ring"].get<std::string>());
    if (!j.contains("entries") || !j["entries"].is_array() ||
        static_cast<int>(j["entries"].size()) != order) {
        throw DomainError("entries must form a square row-major array");
    }
    const json& entries = j["entries"];
    switch (ring) {
        case RingTag::Int:
            return matrix_from_entries<Int>(order, entries, int_from_cell);
        case RingTag::Rational:
            return matrix_from_entries<Rat>(order, entries, rat_from_cell);
        case RingTag::Complex:
            return matrix_from_entries<Cplx>(order, entries, cplx_from_cell);
    }
    throw DomainError("unknown ring tag");
}

}  // namespace detail

SquareMatrix parse_matrix(std::string_view text, MatrixFormat format, RingTag csv_ring) {
    if (format == MatrixFormat::Csv) {
        return parse_csv(text, csv_ring);
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed json: ") + e.what());
    }
    return detail::matrix_from_json(j);
}

std::string emit_matrix(const SquareMatrix& a, MatrixFormat format) {
    if (format == MatrixFormat::Csv) {
        return emit_csv(a);
    }
    return detail::matrix_to_json(a).dump(2) + "\n";
}

}  // namespace permlab
