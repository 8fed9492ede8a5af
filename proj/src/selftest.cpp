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

#include "etacong/selftest.hpp"

#include "etacong/verifier.hpp"

namespace etacong {

namespace {

SelftestCheck check_up_identity(std::uint64_t seed, int trials)
{
    const bool ok = up_identity_selftest(trials, seed);
    return {"u11-commutation", ok, std::to_string(trials) + " random (f, g) pairs, seed " + std::to_string(seed)};
}

SelftestCheck check_theta_recurrences()
{
    for (std::int64_t l = -40; l <= 40; ++l)
        for (std::int64_t m = -40; m <= 40; ++m)
            if (theta(l - 11, m) != theta(l, m) || theta(l + 12, m - 5) != theta(l, m))
                return {"theta-recurrences", false,
                        "fails at lambda = " + std::to_string(l) + ", mu = " + std::to_string(m)};
    return {"theta-recurrences", true, "lambda, mu in [-40, 40]"};
}

SelftestCheck check_closed_forms()
{
    for (std::int64_t c = -20; c <= 20; ++c) {
        for (std::int64_t d = -20; d <= 20; ++d) {
            for (std::int64_t r = 1; r <= 6; ++r) {
                const BigInt n = n_raw(c, d, r);
                const BigInt mod = pow11(static_cast<unsigned>(r));
                const bool congruent = ((24 * n - (c + 11 * d)) % mod) == 0;
                const bool closed = n == n_raw_closed(c, d, r);
                const bool mu_ok = mu_seq(c, d, r) == mu_least(c, d, r);
                if (!congruent || !closed || !mu_ok)
                    return {"closed-forms", false,
                            "fails at (c, d, r) = (" + std::to_string(c) + ", " + std::to_string(d) + ", " +
                                std::to_string(r) + ")"};
            }
        }
    }
    return {"closed-forms", true, "(c, d) in [-20, 20]^2, r <= 6"};
}

SelftestCheck check_oracle_equivalence()
{
    constexpr std::int64_t kTerms = 200;
    for (std::int64_t c = -12; c <= 12; ++c) {
        for (std::int64_t d = -12; d <= 12; ++d) {
            const auto fast = eta_quotient(partition_spec(c, d), kTerms, IntegerRing{});
            const auto slow = naive_coeffs(c, d, 11, kTerms);
            for (std::int64_t n = 0; n < kTerms; ++n)
                if (fast.coeff(n) != slow.values[static_cast<std::size_t>(n)])
                    return {"oracle-equivalence", false,
                            "(c, d) = (" + std::to_string(c) + ", " + std::to_string(d) + ") differ at q^" +
                                std::to_string(n)};
        }
    }
    return {"oracle-equivalence", true, "(c, d) in [-12, 12]^2, 200 terms"};
}

} // namespace

SelftestResult run_selftest(std::uint64_t seed, int trials)
{
    SelftestResult out;
    out.checks.push_back(check_up_identity(seed, trials));
    out.checks.push_back(check_theta_recurrences());
    out.checks.push_back(check_closed_forms());
    out.checks.push_back(check_oracle_equivalence());
    return out;
}

} // namespace etacong
