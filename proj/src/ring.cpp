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

#include "etacong/ring.hpp"

namespace etacong {

Valuation min(const Valuation &a, const Valuation &b)
{
    if (a.value != b.value)
        return a.value < b.value ? a : b;
    return {a.value, a.lower_bound && b.lower_bound};
}

std::string to_string(const Valuation &v)
{
    if (v.is_infinite())
        return "inf";
    return (v.lower_bound ? ">=" : "") + std::to_string(v.value);
}

Valuation valuation_11(const BigInt &x)
{
    if (x.is_zero())
        return Valuation::infinite();
    BigInt y = abs(x);
    int e = 0;
    while (y % 11 == 0) {
        y /= 11;
        ++e;
    }
    return {e, false};
}

BigInt pow11(unsigned e)
{
    return boost::multiprecision::pow(BigInt(11), e);
}

Mod11PowerRing::Mod11PowerRing(int exponent) : exponent_(exponent), modulus_(1)
{
    if (exponent < 1 || exponent > kMaxExponent)
        throw RingError("modulus exponent K must lie in [1, " + std::to_string(kMaxExponent) +
                        "], got " + std::to_string(exponent));
    for (int i = 0; i < exponent; ++i)
        modulus_ *= 11;
}

Mod11PowerRing::Element Mod11PowerRing::from_big(const BigInt &v) const
{
    BigInt r = v % modulus_;
    if (r < 0)
        r += modulus_;
    return r.convert_to<Element>();
}

Mod11PowerRing::Element Mod11PowerRing::inverse(Element a) const
{
    if (!is_unit(a))
        throw RingError("residue " + std::to_string(a) + " is not a unit modulo 11^" +
                        std::to_string(exponent_));
    // Extended Euclid on signed 128-bit values.
    __int128 t = 0, new_t = 1;
    __int128 r = modulus_, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0)
        t += modulus_;
    return static_cast<Element>(t);
}

Valuation Mod11PowerRing::valuation(Element a) const
{
    if (a == 0)
        return Valuation::at_least(exponent_);
    int e = 0;
    while (a % 11 == 0) {
        a /= 11;
        ++e;
    }
    return {e, false};
}

} // namespace etacong
