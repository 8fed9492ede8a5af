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
#include <string>
#include <vector>

namespace etacong {

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestResult {
    std::vector<SelftestCheck> checks;

    bool passed() const
    {
        for (const auto &c : checks)
            if (!c.passed)
                return false;
        return true;
    }
};

/// The CI entry point: U_11 commutation identity, theta recurrences, n_r/mu_r
/// closed forms, and fast-series vs naive-oracle equivalence.
SelftestResult run_selftest(std::uint64_t seed, int trials);

} // namespace etacong
