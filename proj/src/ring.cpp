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

#include "permlab/ring.hpp"

#include <cmath>
#include <cstdio>

namespace permlab {

std::string_view ring_name(RingTag tag) {
    switch (tag) {
        case RingTag::Int:
            return "int";
        case RingTag::Rational:
            return "rational";
        case RingTag::Complex:
            return "complex";
    }
    throw DomainError("unknown ring tag");
}

RingTag ring_from_name(std::string_view name) {
    if (name == "int") {
        return RingTag::Int;
    }
    if (name == "rational") {
        return RingTag::Rational;
    }
    if (name == "complex") {
        return RingTag::Complex;
    }
    throw DomainError("unknown ring name: " + std::string(name));
}

RingTag ring_of(const RingElement& v) {
    return static_cast<RingTag>(v.index());
}

bool approx_equal(const Cplx& a, const Cplx& b) {
    const double diff = std::abs(a - b);
    const double scale = std::max(std::abs(a), std::abs(b));
    return diff <= std::max(kComplexAbsTol, kComplexRelTol * scale);
}

bool approx_equal(const RingElement& a, const RingElement& b) {
    if (ring_of(a) != ring_of(b)) {
        throw DomainError("cannot compare values from different rings");
    }
    if (const auto* x = std::get_if<Int>(&a)) {
        return *x == std::get<Int>(b);
    }
    if (const auto* x = std::get_if<Rat>(&a)) {
        return *x == std::get<Rat>(b);
    }
    return approx_equal(std::get<Cplx>(a), std::get<Cplx>(b));
}

Rat parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rat(Int(std::string(text)));
        }
        Int num(std::string(text.substr(0, slash)));
        Int den(std::string(text.substr(slash + 1)));
        if (den == 0) {
            throw DomainError("rational with zero denominator");
        }
        return Rat(num, den);
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw DomainError("malformed rational literal: " + std::string(text));
    }
}

std::string rational_to_string(const Rat& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

namespace {

std::string double_to_string(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

std::string to_string(const RingElement& v) {
    if (const auto* x = std::get_if<Int>(&v)) {
        return x->str();
    }
    if (const auto* x = std::get_if<Rat>(&v)) {
        return rational_to_string(*x);
    }
    const Cplx& z = std::get<Cplx>(v);
    if (z.imag() == 0.0) {
        return double_to_string(z.real());
    }
    std::string s = double_to_string(z.real());
    if (!(z.imag() < 0)) {
        s += "+";
    }
    s += double_to_string(z.imag()) + "i";
    return s;
}

}  // namespace permlab
