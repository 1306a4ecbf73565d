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

#ifndef PERMLAB_RING_HPP
#define PERMLAB_RING_HPP

#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "permlab/errors.hpp"

namespace permlab {

/// Exact arbitrary-precision integer. Permanents multiply n entries per
/// product term, so fixed-width integers overflow already at small orders.
using Int = boost::multiprecision::cpp_int;
/// Exact rational, kept canonical (gcd-reduced, positive denominator).
using Rat = boost::multiprecision::cpp_rational;
/// Complex double.
using Cplx = std::complex<double>;

enum class RingTag { Int, Rational, Complex };

std::string_view ring_name(RingTag tag);          // "int" | "rational" | "complex"
RingTag ring_from_name(std::string_view name);

/// One scalar out of the active entry ring.
using RingElement = std::variant<Int, Rat, Cplx>;

RingTag ring_of(const RingElement& v);

/// Tolerances for comparing complex values accumulated across ~2^n
/// double-rounded additions at order <= 30.
inline constexpr double kComplexRelTol = 1e-9;
inline constexpr double kComplexAbsTol = 1e-12;

bool approx_equal(const Cplx& a, const Cplx& b);

/// Exact equality on the exact rings, tolerance-based on the complex ring.
/// Comparing values from different rings is a caller bug and throws.
bool approx_equal(const RingElement& a, const RingElement& b);

/// Parses "p/q" or a bare integer "p".
Rat parse_rational(std::string_view text);
/// Canonical "p/q" form (q >= 1, gcd(p, q) = 1).
std::string rational_to_string(const Rat& value);

std::string to_string(const RingElement& v);

}  // namespace permlab

#endif  // PERMLAB_RING_HPP
