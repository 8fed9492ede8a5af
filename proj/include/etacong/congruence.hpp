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

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "etacong/ring.hpp"

namespace etacong {

/// theta(lambda, mu) for 0 <= mu <= 4 (rows) and 0 <= lambda <= 10 (columns).
inline constexpr std::array<std::array<int, 11>, 5> kThetaTable{{
    {0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0},
    {1, 1, 0, 1, 0, 0, 0, 1, 1, 0, 0},
    {1, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0},
    {1, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0},
    {1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0},
}};

/// delta(mu, nu) indexed by residues mod 5, row mu and column nu.
inline constexpr std::array<std::array<int, 5>, 5> kDeltaTable{{
    {-1, 8, 7, 6, 15},
    {0, 9, 8, 2, 11},
    {1, 10, 4, 13, 12},
    {2, 6, 5, 4, 13},
    {3, 7, 6, 5, 9},
}};

/// alpha(24 i + j): row i labelled 24 i, column j = 1..24 stored at j - 1.
inline constexpr std::array<std::array<int, 24>, 5> kAlphaTable{{
    {2, 1, 2, 1, 1, 1, 2, 2, 1, 1, 2, 2, 1, 2, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0},
    {1, 1, 1, 1, 2, 2, 1, 1, 2, 2, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0},
    {1, 1, 2, 2, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0},
    {2, 1, 1, 1, 2, 1, 2, 1, 2, 1, 2, 2, 1, 1, 1, 2, 1, 2, 1, 2, 1, 1, 1, 0},
    {0, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0},
}};

/// Replacement for the last column (j = 24) when c + 11 d < 0, rows 0..96.
inline constexpr std::array<int, 5> kAlphaNegativeLastColumn{2, 2, 2, 0, 2};

class GuardError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// c for even i, d for odd i.
std::int64_t lambda_seq(std::int64_t c, std::int64_t d, std::int64_t i);

/// mu_0 = 0, mu_r = ceil((5 lambda_{r-1} + mu_{r-1}) / 11).
std::int64_t mu_seq(std::int64_t c, std::int64_t d, std::int64_t r);

/// Least m with 11^r m + n_r >= 0, evaluated from the exact rational closed
/// form for each parity of r.
std::int64_t mu_least(std::int64_t c, std::int64_t d, std::int64_t r);

/// 1 iff c + 11 d < 0 and 24 | c + 11 d.
int omega(std::int64_t c, std::int64_t d);

/// ceil((11c + d)/24) + omega for odd r, ceil((c + 11d)/24) + omega for even r.
/// Only valid while |c + 11 d| < 11^r; throws GuardError otherwise.
std::int64_t mu_closed(std::int64_t c, std::int64_t d, std::int64_t r);

/// n_r from the recurrence n_0 = 0, n_{2k-1} = n_{2k-2} - 5 c 11^(2k-2),
/// n_{2k} = n_{2k-1} - 5 d 11^(2k-1).
BigInt n_raw(std::int64_t c, std::int64_t d, std::int64_t r);

/// n_r from the closed forms in c (11^(2k) - 1)/24 and d (11^(2k) - 1)/24.
BigInt n_raw_closed(std::int64_t c, std::int64_t d, std::int64_t r);

/// The residue n in [0, 11^r) with 24 n = c + 11 d (mod 11^r). Requires
/// 1 <= r <= 18 so that n fits in 64 bits.
std::int64_t n_canonical(std::int64_t c, std::int64_t d, std::int64_t r);

/// Table lookup extended to all integers by theta(lambda - 11, mu) = theta(lambda, mu)
/// and theta(lambda + 12, mu - 5) = theta(lambda, mu).
int theta(std::int64_t lambda, std::int64_t mu);

int delta(std::int64_t mu, std::int64_t nu);

/// floor((11 nu - mu - 5 lambda + delta(mu, nu)) / 10): lower bound on the
/// 11-adic order of the U_11(phi^lambda J_mu) matrix entries.
std::int64_t order_bound(std::int64_t mu, std::int64_t nu, std::int64_t lambda);

/// Memoized lambda/mu/A prefixes for one (c, d). Not thread safe; keep one per task.
class SequenceCache {
public:
    SequenceCache(std::int64_t c, std::int64_t d);

    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }
    std::int64_t mu(std::int64_t r);
    int exponent(std::int64_t r);

private:
    void extend(std::int64_t r);

    std::int64_t c_;
    std::int64_t d_;
    std::vector<std::int64_t> mu_{0};
    std::vector<int> exponent_{0};
};

/// A_r(c, d) = sum_{i=0}^{r-1} theta(lambda_i, mu_i).
int exponent_A(std::int64_t c, std::int64_t d, std::int64_t r);

/// theta(d, ceil((11c + d)/24) + omega) + theta(c, ceil((c + 11d)/24) + omega).
int alpha(std::int64_t c, std::int64_t d);

/// One cell of the regenerated alpha table that disagrees with kAlphaTable.
struct AlphaMismatch {
    int row_label;           // 0, 24, 48, 72, 96
    int column;              // 1..24
    std::int64_t c_plus_11d; // representative that was evaluated
    bool negative_regime;
    int embedded;
    int computed;
};

struct AlphaTableReport {
    std::array<std::array<int, 24>, 5> computed{};
    std::array<int, 5> computed_negative_last_column{};
    std::vector<AlphaMismatch> mismatches;
    int cells_checked = 0;

    bool all_match() const { return mismatches.empty(); }
};

/// Recompute alpha for every residue class of c + 11 d mod 120 (and the
/// negative last column) and diff against kAlphaTable.
AlphaTableReport alpha_table_regenerate();

/// |A_r - alpha r / 2| < 2 + alpha/2 + (1 + alpha/2) log_11 |c + 11 d|.
/// Throws std::domain_error for c + 11 d == 0.
bool corollary_bound_check(std::int64_t c, std::int64_t d, std::int64_t r);

/// p_[1^c 11^d](11^r m + n) = 0 (mod 11^exponent) for all m >= 0.
struct CongruenceStatement {
    std::int64_t c = 0;
    std::int64_t d = 0;
    std::int64_t r = 1;
    std::int64_t n = 0;
    int exponent = 0;

    bool trivial() const { return exponent == 0; }
    std::int64_t step() const;
    std::string to_string() const;

    friend bool operator==(const CongruenceStatement &, const CongruenceStatement &) = default;
};

CongruenceStatement statement(std::int64_t c, std::int64_t d, std::int64_t r);

/// The embedded tables printed in their usual row/column layout.
std::string render_theta_table();
std::string render_delta_table();
std::string render_alpha_table(const std::array<std::array<int, 24>, 5> &grid,
                               const std::array<int, 5> &negative_last_column);

} // namespace etacong
