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
#include <vector>

#include "etacong/ring.hpp"

namespace etacong {

/// Coefficients of prod (1 - q^n)^(-c) (1 - q^(ell n))^(-d), index n holds
/// the coefficient of q^n. Always exact integers.
struct OracleSequence {
    std::vector<BigInt> values;
    std::int64_t c = 0;
    std::int64_t d = 0;
    std::int64_t ell = 11;
};

/// p(0), ..., p(N-1) from Euler's pentagonal recurrence.
OracleSequence euler_p(std::int64_t count);

/// First `count` coefficients of the generating function, built by applying
/// each factor (1 - q^m)^(+-1) with one linear pass over the buffer.
OracleSequence naive_coeffs(std::int64_t c, std::int64_t d, std::int64_t ell, std::int64_t count);

} // namespace etacong
