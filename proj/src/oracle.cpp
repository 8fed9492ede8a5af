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

#include "etacong/oracle.hpp"

#include <stdexcept>

namespace etacong {

OracleSequence euler_p(std::int64_t count)
{
    if (count < 1)
        throw std::invalid_argument("euler_p requires N >= 1");
    std::vector<BigInt> p(static_cast<std::size_t>(count));
    p[0] = 1;
    for (std::int64_t n = 1; n < count; ++n) {
        BigInt acc = 0;
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            if (g1 > n)
                break;
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            BigInt term = p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n)
                term += p[static_cast<std::size_t>(n - g2)];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return {std::move(p), 1, 0, 1};
}

namespace {

// v <- v / (1 - q^m)
void divide_by_factor(std::vector<BigInt> &v, std::size_t m)
{
    for (std::size_t n = m; n < v.size(); ++n)
        v[n] += v[n - m];
}

// v <- v * (1 - q^m)
void multiply_by_factor(std::vector<BigInt> &v, std::size_t m)
{
    for (std::size_t n = v.size(); n-- > m;)
        v[n] -= v[n - m];
}

void apply_power(std::vector<BigInt> &v, std::size_t m, std::int64_t exponent)
{
    // (1 - q^m)^(-exponent)
    for (std::int64_t k = 0; k < (exponent > 0 ? exponent : -exponent); ++k) {
        if (exponent > 0)
            divide_by_factor(v, m);
        else
            multiply_by_factor(v, m);
    }
}

} // namespace

OracleSequence naive_coeffs(std::int64_t c, std::int64_t d, std::int64_t ell, std::int64_t count)
{
    if (count < 1)
        throw std::invalid_argument("naive_coeffs requires N >= 1");
    if (ell < 1)
        throw std::invalid_argument("naive_coeffs requires ell >= 1");
    std::vector<BigInt> v(static_cast<std::size_t>(count));
    v[0] = 1;
    for (std::int64_t m = 1; m < count; ++m) {
        apply_power(v, static_cast<std::size_t>(m), c);
        if (m % ell == 0)
            apply_power(v, static_cast<std::size_t>(m), d);
    }
    return {std::move(v), c, d, ell};
}

} // namespace etacong
