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

#include "etacong/eta_quotient.hpp"

#include <algorithm>
#include <string>

namespace etacong {

std::int64_t EtaQuotientSpec::prefactor_exponent() const
{
    std::int64_t weight = 0;
    for (const auto &[s, e] : factors)
        weight += s * e;
    if (weight % 24 != 0)
        throw IntegralityError("eta quotient prefactor q^(" + std::to_string(weight) +
                               "/24) is not an integral power of q");
    return weight / 24;
}

void EtaQuotientSpec::validate() const
{
    for (const auto &[s, e] : factors)
        if (s < 1)
            throw std::invalid_argument("eta quotient scale must be positive, got " + std::to_string(s));
    if (include_eta_prefactor)
        (void)prefactor_exponent();
}

EtaQuotientSpec phi_spec(std::int64_t power)
{
    return {{{1, -power}, {121, power}}, true};
}

EtaQuotientSpec partition_spec(std::int64_t c, std::int64_t d)
{
    return {{{1, -c}, {11, -d}}, false};
}

std::vector<std::pair<std::int64_t, int>> pentagonal_terms(std::int64_t s, std::int64_t prec)
{
    // prod (1 - x^n) = sum_k (-1)^k x^(k(3k-1)/2) over all integers k.
    std::vector<std::pair<std::int64_t, int>> out;
    if (prec <= 0)
        return out;
    out.emplace_back(0, 1);
    for (std::int64_t k = 1;; ++k) {
        const std::int64_t lo = s * (k * (3 * k - 1) / 2);
        const std::int64_t hi = s * (k * (3 * k + 1) / 2);
        if (lo >= prec)
            break;
        const int sign = (k % 2 == 0) ? 1 : -1;
        out.emplace_back(lo, sign);
        if (hi < prec)
            out.emplace_back(hi, sign);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace etacong
