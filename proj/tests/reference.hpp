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

// Test-only reference computations. Nothing here calls into the library.

#pragma once

#include <cstdint>
#include <vector>

namespace etacong_test {

// Number of partitions of n into parts of size <= largest, by direct recursion.
inline std::int64_t count_partitions(std::int64_t n, std::int64_t largest)
{
    if (n == 0)
        return 1;
    std::int64_t total = 0;
    for (std::int64_t part = std::min(n, largest); part >= 1; --part)
        total += count_partitions(n - part, part);
    return total;
}

inline std::int64_t count_partitions(std::int64_t n)
{
    return count_partitions(n, n);
}

// prod_{n >= 1} (1 - q^(s n)) below q^prec, one binomial factor at a time.
inline std::vector<std::int64_t> naive_euler_product(std::int64_t s, std::int64_t prec)
{
    std::vector<std::int64_t> v(static_cast<std::size_t>(prec), 0);
    v[0] = 1;
    for (std::int64_t m = s; m < prec; m += s) {
        std::vector<std::int64_t> next = v;
        for (std::int64_t k = m; k < prec; ++k)
            next[static_cast<std::size_t>(k)] -= v[static_cast<std::size_t>(k - m)];
        v = std::move(next);
    }
    return v;
}

} // namespace etacong_test
