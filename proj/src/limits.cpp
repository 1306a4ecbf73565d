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

#include "permlab/limits.hpp"

#include <cstdlib>
#include <string>
#include <string_view>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

std::uint64_t parse_u64(std::string_view key, std::string_view value) {
    std::uint64_t out = 0;
    if (value.empty()) {
        throw DomainError("PERMLAB_LIMITS: empty value for " + std::string(key));
    }
    for (char c : value) {
        if (c < '0' || c > '9') {
            throw DomainError("PERMLAB_LIMITS: non-numeric value for " + std::string(key));
        }
        out = out * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return out;
}

}  // namespace

Limits Limits::from_env() {
    Limits limits;
    const char* raw = std::getenv("PERMLAB_LIMITS");
    if (raw == nullptr) {
        return limits;
    }
    std::string_view rest(raw);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (item.empty()) {
            continue;
        }
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw DomainError("PERMLAB_LIMITS: expected key=value, got '" + std::string(item) + "'");
        }
        const std::string_view key = item.substr(0, eq);
        const std::uint64_t value = parse_u64(key, item.substr(eq + 1));
        if (key == "naive_order_limit") {
            limits.naive_order_limit = static_cast<int>(value);
        } else if (key == "subset_order_limit") {
            limits.subset_order_limit = static_cast<int>(value);
        } else if (key == "enumeration_cap") {
            limits.enumeration_cap = value;
        } else if (key == "memo_budget_bytes") {
            limits.memo_budget_bytes = value;
        } else {
            throw DomainError("PERMLAB_LIMITS: unknown key '" + std::string(key) + "'");
        }
    }
    return limits;
}

}  // namespace permlab
