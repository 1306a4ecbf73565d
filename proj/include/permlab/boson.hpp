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

#ifndef PERMLAB_BOSON_HPP
#define PERMLAB_BOSON_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permlab/limits.hpp"
#include "permlab/matrix.hpp"

namespace permlab {

/// Entrywise tolerance for the U+U = I check. Matrices failing it are
/// rejected, never re-orthonormalized silently.
inline constexpr double kUnitarityTol = 1e-10;

/// Photon occupancy per output mode; length equals the mode count m.
struct OutputPattern {
    std::vector<int> occupancy;

    int total() const;
    bool operator==(const OutputPattern&) const = default;
};

/// An m-mode linear interferometer described by its unitary.
class Interferometer {
  public:
    /// Requires unitary.order() == modes and U+U = I within kUnitarityTol.
    Interferometer(int modes, Matrix<Cplx> unitary);

    int modes() const { return modes_; }
    const Matrix<Cplx>& unitary() const { return u_; }

    /// JSON: the complex matrix schema plus {"modes": m}.
    static Interferometer from_json(std::string_view text);
    std::string to_json() const;

  private:
    int modes_;
    Matrix<Cplx> u_;
};

/// Haar-distributed random unitary: complex Gaussian matrix orthonormalized
/// column by column (modified Gram-Schmidt), with the triangular factor's
/// diagonal real-positive by construction. Deterministic per seed; the
/// generator is std::mt19937_64 with 53-bit uniform draws and Box-Muller
/// normals.
Interferometer haar_unitary(int modes, std::uint64_t seed);

/// All C(m+n-1, n) occupancy patterns of n photons over m modes, ordered as
/// ascending mode multisets (first listed pattern fills mode 0).
std::vector<OutputPattern> enumerate_patterns(int modes, int photons);

/// The n-by-n submatrix whose columns are U's columns at the n distinct
/// input modes (once each) and whose rows are U's rows at the output modes,
/// each repeated by its occupancy.
Matrix<Cplx> extract_submatrix(const Interferometer& itf, const std::vector<int>& input_modes,
                               const OutputPattern& out);

/// |per(submatrix)|^2 / prod_j occupancy_j!, with the permanent computed by
/// the Store-zechin engine. The divisor is 1 on collision-free outputs.
double outcome_probability(const Interferometer& itf, const std::vector<int>& input_modes,
                           const OutputPattern& out, const Limits& limits = {});

struct OutcomeDistribution {
    std::vector<int> input_modes;
    std::vector<std::pair<OutputPattern, double>> entries;  // enumerate_patterns order

    double total_probability() const;
};

/// Exhaustive outcome distribution for n <= 6 photons; the pattern count
/// must stay below limits.enumeration_cap.
OutcomeDistribution full_distribution(const Interferometer& itf,
                                      const std::vector<int>& input_modes,
                                      const Limits& limits = {});

/// Inverse-CDF draws over full_distribution, in its enumeration order.
/// Deterministic per seed (std::mt19937_64, 53-bit uniforms).
std::vector<OutputPattern> sample(const Interferometer& itf, const std::vector<int>& input_modes,
                                  std::uint64_t count, std::uint64_t seed,
                                  const Limits& limits = {});

}  // namespace permlab

#endif  // PERMLAB_BOSON_HPP
