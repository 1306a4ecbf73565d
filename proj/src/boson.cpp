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

#include "permlab/boson.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "permlab/detail/matrix_json.hpp"
#include "permlab/permanent.hpp"

namespace permlab {

namespace {

// x >> 11 keeps the top 53 bits, the double mantissa width.
double uniform53(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Shifted into (0, 1] so the Box-Muller logarithm never sees zero.
double uniform53_positive(std::mt19937_64& gen) {
    return static_cast<double>((gen() >> 11) + 1) * 0x1.0p-53;
}

Cplx standard_complex_gaussian(std::mt19937_64& gen) {
    const double u1 = uniform53_positive(gen);
    const double u2 = uniform53(gen);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

void check_unitary(const Matrix<Cplx>& u) {
    const int n = u.order();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Cplx dot = 0;
            for (int k = 0; k < n; ++k) {
                dot += std::conj(u(k, i)) * u(k, j);
            }
            const Cplx expected = i == j ? Cplx(1.0) : Cplx(0.0);
            if (std::abs(dot - expected) > kUnitarityTol) {
                throw DomainError("matrix is not unitary within 1e-10");
            }
        }
    }
}

void check_input_modes(const std::vector<int>& input_modes, int modes) {
    if (input_modes.empty()) {
        throw DomainError("at least one input mode is required");
    }
    std::vector<char> seen(modes, 0);
    for (int m : input_modes) {
        if (m < 0 || m >= modes) {
            throw DomainError("input mode index out of range");
        }
        if (seen[m]) {
            throw DomainError("input modes must be distinct");
        }
        seen[m] = 1;
    }
}

void check_pattern(const OutputPattern& out, int modes, int photons) {
    if (static_cast<int>(out.occupancy.size()) != modes) {
        throw DomainError("occupancy vector length must equal the mode count");
    }
    for (int c : out.occupancy) {
        if (c < 0) {
            throw DomainError("occupancy counts must be nonnegative");
        }
    }
    if (out.total() != photons) {
        throw DomainError("output photon count does not match the input photon count");
    }
}

std::uint64_t pattern_count(int modes, int photons, std::uint64_t cap) {
    // C(m + n - 1, n), saturating at cap + 1
    std::uint64_t count = 1;
    for (int i = 1; i <= photons; ++i) {
        count = count * static_cast<std::uint64_t>(modes - 1 + i) / static_cast<std::uint64_t>(i);
        if (count > cap) {
            return cap + 1;
        }
    }
    return count;
}

}  // namespace

int OutputPattern::total() const {
    int sum = 0;
    for (int c : occupancy) {
        sum += c;
    }
    return sum;
}

Interferometer::Interferometer(int modes, Matrix<Cplx> unitary) : modes_(modes), u_(std::move(unitary)) {
    if (modes_ < 1) {
        throw DomainError("mode count must be >= 1");
    }
    if (u_.order() != modes_) {
        throw DomainError("unitary order must equal the mode count");
    }
    check_unitary(u_);
}

Interferometer Interferometer::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("modes") || !j["modes"].is_number_integer()) {
        throw DomainError("interferometer json needs an integer \"modes\"");
    }
    const int modes = j["modes"].get<int>();
    SquareMatrix m = detail::matrix_from_json(j);
    if (m.ring() != RingTag::Complex) {
        throw DomainError("interferometer unitary must use the complex ring");
    }
    return Interferometer(modes, m.as<Cplx>());
}

std::string Interferometer::to_json() const {
    nlohmann::json j = detail::matrix_to_json(SquareMatrix(u_));
    j["modes"] = modes_;
    return j.dump(2) + "\n";
}

Interferometer haar_unitary(int modes, std::uint64_t seed) {
    if (modes < 1) {
        throw DomainError("mode count must be >= 1");
    }
    std::mt19937_64 gen(seed);
    const int m = modes;
    std::vector<Cplx> g(static_cast<std::size_t>(m) * m);
    for (auto& z : g) {
        z = standard_complex_gaussian(gen);
    }
    // modified Gram-Schmidt over columns; pivots are real-positive norms
    for (int k = 0; k < m; ++k) {
        for (int j = 0; j < k; ++j) {
            Cplx r = 0;
            for (int i = 0; i < m; ++i) {
                r += std::conj(g[static_cast<std::size_t>(i) * m + j]) *
                     g[static_cast<std::size_t>(i) * m + k];
            }
            for (int i = 0; i < m; ++i) {
                g[static_cast<std::size_t>(i) * m + k] -= r * g[static_cast<std::size_t>(i) * m + j];
            }
        }
        double norm_sq = 0;
        for (int i = 0; i < m; ++i) {
            norm_sq += std::norm(g[static_cast<std::size_t>(i) * m + k]);
        }
        const double norm = std::sqrt(norm_sq);
        for (int i = 0; i < m; ++i) {
            g[static_cast<std::size_t>(i) * m + k] /= norm;
        }
    }
    return Interferometer(m, Matrix<Cplx>(m, std::move(g)));
}

std::vector<OutputPattern> enumerate_patterns(int modes, int photons) {
    if (modes < 1 || photons < 0) {
        throw DomainError("need modes >= 1 and photons >= 0");
    }
    std::vector<OutputPattern> out;
    std::vector<int> occupancy(modes, 0);
    // mode 0 takes the most photons first: ascending multiset order
    auto gen = [&](auto&& self, int mode, int remaining) -> void {
        if (mode == modes - 1) {
            occupancy[mode] = remaining;
            out.push_back({occupancy});
            occupancy[mode] = 0;
            return;
        }
        for (int take = remaining; take >= 0; --take) {
            occupancy[mode] = take;
            self(self, mode + 1, remaining - take);
        }
        occupancy[mode] = 0;
    };
    gen(gen, 0, photons);
    return out;
}

Matrix<Cplx> extract_submatrix(const Interferometer& itf, const std::vector<int>& input_modes,
                               const OutputPattern& out) {
    check_input_modes(input_modes, itf.modes());
    const int n = static_cast<int>(input_modes.size());
    check_pattern(out, itf.modes(), n);
    std::vector<int> out_rows;
    out_rows.reserve(n);
    for (int mode = 0; mode < itf.modes(); ++mode) {
        for (int c = 0; c < out.occupancy[mode]; ++c) {
            out_rows.push_back(mode);
        }
    }
    std::vector<Cplx> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int r : out_rows) {
        for (int c : input_modes) {
            entries.push_back(itf.unitary()(r, c));
        }
    }
    return Matrix<Cplx>(n, std::move(entries));
}

double outcome_probability(const Interferometer& itf, const std::vector<int>& input_modes,
                           const OutputPattern& out, const Limits& limits) {
    const Matrix<Cplx> sub = extract_submatrix(itf, input_modes, out);
    const PermanentResult per = store_zechin_permanent(SquareMatrix(sub), limits);
    double divisor = 1;
    for (int c : out.occupancy) {
        for (int i = 2; i <= c; ++i) {
            divisor *= i;
        }
    }
    return std::norm(std::get<Cplx>(per.value)) / divisor;
}

double OutcomeDistribution::total_probability() const {
    double sum = 0;
    for (const auto& [pattern, p] : entries) {
        sum += p;
    }
    return sum;
}

OutcomeDistribution full_distribution(const Interferometer& itf,
                                      const std::vector<int>& input_modes, const Limits& limits) {
    check_input_modes(input_modes, itf.modes());
    const int n = static_cast<int>(input_modes.size());
    if (n > 6) {
        throw DomainError("full distributions are enumerated for at most 6 photons");
    }
    if (pattern_count(itf.modes(), n, limits.enumeration_cap) > limits.enumeration_cap) {
        throw DomainError("outcome count exceeds enumeration_cap");
    }
    OutcomeDistribution dist;
    dist.input_modes = input_modes;
    for (OutputPattern& pattern : enumerate_patterns(itf.modes(), n)) {
        const double p = outcome_probability(itf, input_modes, pattern, limits);
        dist.entries.emplace_back(std::move(pattern), p);
    }
    return dist;
}

std::vector<OutputPattern> sample(const Interferometer& itf, const std::vector<int>& input_modes,
                                  std::uint64_t count, std::uint64_t seed, const Limits& limits) {
    const OutcomeDistribution dist = full_distribution(itf, input_modes, limits);
    std::vector<double> cdf;
    cdf.reserve(dist.entries.size());
    double acc = 0;
    for (const auto& [pattern, p] : dist.entries) {
        acc += p;
        cdf.push_back(acc);
    }
    std::mt19937_64 gen(seed);
    std::vector<OutputPattern> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const double u = uniform53(gen);
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx = std::min(static_cast<std::size_t>(it - cdf.begin()),
                                         dist.entries.size() - 1);
        out.push_back(dist.entries[idx].first);
    }
    return out;
}

}  // namespace permlab
