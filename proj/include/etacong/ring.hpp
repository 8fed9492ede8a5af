// Copyright 2026 The etacong Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace etacong {

using BigInt = boost::multiprecision::cpp_int;

/// Raised on ring misuse: inverting a non-unit, mixing rings, bad modulus.
class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 11-adic valuation of a ring element or of a whole series.
///
/// When `lower_bound` is set only "value or more" is known; this is what a
/// zero residue in Z/11^K reports (value == K). Exact zero is infinite.
struct Valuation {
    static constexpr int kInfinite = std::numeric_limits<int>::max();

    int value = 0;
    bool lower_bound = false;

    static Valuation infinite() { return {kInfinite, false}; }
    static Valuation at_least(int v) { return {v, true}; }

    bool is_infinite() const { return value == kInfinite; }
    bool reaches(int exponent) const { return value >= exponent; }

    friend bool operator==(const Valuation &, const Valuation &) = default;
};

/// Minimum of two valuations. On a tie an exact value wins over a bound.
Valuation min(const Valuation &a, const Valuation &b);

std::string to_string(const Valuation &v);

/// Largest e with 11^e | x, infinite for x == 0.
Valuation valuation_11(const BigInt &x);

/// Exact arithmetic in Z.
class IntegerRing {
public:
    using Element = BigInt;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(std::int64_t v) const { return v; }
    Element from_big(const BigInt &v) const { return v; }
    BigInt to_big(const Element &a) const { return a; }

    Element add(const Element &a, const Element &b) const { return a + b; }
    Element sub(const Element &a, const Element &b) const { return a - b; }
    Element mul(const Element &a, const Element &b) const { return a * b; }
    Element neg(const Element &a) const { return -a; }

    bool is_zero(const Element &a) const { return a.is_zero(); }
    bool is_unit(const Element &a) const { return a == 1 || a == -1; }
    Element inverse(const Element &a) const
    {
        if (!is_unit(a))
            throw RingError("integer " + a.str() + " is not a unit");
        return a;
    }

    Valuation valuation(const Element &a) const { return valuation_11(a); }
    std::string to_string(const Element &a) const { return a.str(); }
    std::string name() const { return "ZZ"; }

    friend bool operator==(const IntegerRing &, const IntegerRing &) { return true; }
};

/// Arithmetic in Z/11^K, elements stored as residues in [0, 11^K).
///
/// Residues fit in 63 bits, so K is limited to kMaxExponent.
class Mod11PowerRing {
public:
    using Element = std::uint64_t;
    static constexpr int kMaxExponent = 18;

    explicit Mod11PowerRing(int exponent);

    int exponent() const { return exponent_; }
    std::uint64_t modulus() const { return modulus_; }

    Element zero() const { return 0; }
    Element one() const { return 1 % modulus_; }
    Element from_int(std::int64_t v) const
    {
        auto m = static_cast<std::int64_t>(modulus_);
        auto r = v % m;
        return static_cast<Element>(r < 0 ? r + m : r);
    }
    Element from_big(const BigInt &v) const;
    BigInt to_big(const Element &a) const { return BigInt(a); }

    Element add(Element a, Element b) const
    {
        Element s = a + b;
        return s >= modulus_ ? s - modulus_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + modulus_ - b; }
    Element mul(Element a, Element b) const
    {
        return static_cast<Element>(static_cast<unsigned __int128>(a) * b % modulus_);
    }
    Element neg(Element a) const { return a == 0 ? 0 : modulus_ - a; }

    bool is_zero(Element a) const { return a == 0; }
    bool is_unit(Element a) const { return a % 11 != 0; }
    Element inverse(Element a) const;

    Valuation valuation(Element a) const;
    std::string to_string(Element a) const { return std::to_string(a); }
    std::string name() const { return "ZZ/11^" + std::to_string(exponent_); }

    friend bool operator==(const Mod11PowerRing &a, const Mod11PowerRing &b)
    {
        return a.exponent_ == b.exponent_;
    }

private:
    int exponent_;
    std::uint64_t modulus_;
};

/// 11^e as an exact integer.
BigInt pow11(unsigned e);

} // namespace etacong
