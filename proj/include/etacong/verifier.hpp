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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "etacong/congruence.hpp"
#include "etacong/eta_quotient.hpp"
#include "etacong/oracle.hpp"
#include "etacong/qseries.hpp"

namespace etacong {

/// Raised when a requested computation would exceed the series length budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for inconsistent verification parameters (M < 1, K too small, ...).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Upper bound on the number of stored coefficients in any single series.
inline constexpr std::int64_t kMaxSeriesLength = std::int64_t{1} << 26;

/// L_0 = 1, L_i = U_11(phi^(lambda_{i-1}) L_{i-1}); levels[r] is known below base_precision.
template <class Ring>
struct TowerResult {
    std::vector<QSeries<Ring>> levels;
    Ring ring;
    std::int64_t base_precision = 0;
};

template <class Ring>
TowerResult<Ring> build_tower(std::int64_t c, std::int64_t d, std::int64_t r, std::int64_t precision,
                              const Ring &ring, std::int64_t max_length = kMaxSeriesLength)
{
    if (r < 0 || precision < 1)
        throw ConfigError("build_tower requires r >= 0 and N >= 1");

    // offset(L_i) >= mu_i, so plan precisions backwards from level r.
    SequenceCache seq(c, d);
    std::vector<std::int64_t> need(static_cast<std::size_t>(r) + 1);
    std::vector<std::int64_t> phi_prec(static_cast<std::size_t>(r) + 1, 0);
    need[static_cast<std::size_t>(r)] = precision;
    for (std::int64_t i = r; i >= 1; --i) {
        const auto u = static_cast<std::size_t>(i);
        const std::int64_t product_prec = 11 * (need[u] - 1) + 1;
        const std::int64_t lambda = lambda_seq(c, d, i - 1);
        need[u - 1] = product_prec - 5 * lambda;
        phi_prec[u - 1] = product_prec - seq.mu(i - 1);
        const std::int64_t phi_len = phi_prec[u - 1] - 5 * lambda;
        const std::int64_t level_len = need[u - 1] - seq.mu(i - 1);
        if (phi_len > max_length || level_len > max_length)
            throw ResourceError("tower level " + std::to_string(i - 1) + " needs " +
                                std::to_string(std::max(phi_len, level_len)) +
                                " coefficients, over the budget of " + std::to_string(max_length));
    }

    TowerResult<Ring> out{{}, ring, precision};
    out.levels.reserve(static_cast<std::size_t>(r) + 1);
    out.levels.push_back(QSeries<Ring>::monomial(ring, 0, ring.one(), std::max<std::int64_t>(need[0], 1)));
    for (std::int64_t i = 1; i <= r; ++i) {
        const auto u = static_cast<std::size_t>(i);
        const auto phi = eta_quotient(phi_spec(lambda_seq(c, d, i - 1)), phi_prec[u - 1], ring);
        auto next = u_p(mul(phi, out.levels.back()), 11);
        out.levels.push_back(truncate(next, need[u]));
    }
    return out;
}

struct CrosscheckResult {
    bool ok = false;
    std::int64_t checked_terms = 0;
    std::optional<std::int64_t> first_mismatch_m;
    std::string detail;
};

/// Strip the eta product from L_r and compare what is left, coefficient by
/// coefficient, with p_[1^c 11^d](11^r m + n_r) from the naive oracle.
template <class Ring>
CrosscheckResult crosscheck_product_form(std::int64_t c, std::int64_t d, std::int64_t r, std::int64_t precision,
                                         const Ring &ring)
{
    const auto tower = build_tower(c, d, r, precision, ring);
    const auto &level = tower.levels.back();

    // Even r: L_r = prod (1-q^n)^c (1-q^(11n))^d * S; odd r swaps c and d.
    EtaQuotientSpec strip;
    strip.factors = (r % 2 == 0) ? std::map<std::int64_t, std::int64_t>{{1, -c}, {11, -d}}
                                 : std::map<std::int64_t, std::int64_t>{{11, -c}, {1, -d}};
    const auto progression = apply_eta_product(level, strip);

    const BigInt step = pow11(static_cast<unsigned>(r));
    const BigInt shift = n_raw(c, d, r);
    const std::int64_t mu = mu_seq(c, d, r);
    const BigInt top = step * (precision - 1) + shift;

    std::vector<BigInt> direct;
    if (top >= 0)
        direct = naive_coeffs(c, d, 11, top.convert_to<std::int64_t>() + 1).values;

    CrosscheckResult out;
    const std::int64_t lo = std::min(mu, progression.offset());
    for (std::int64_t m = lo; m < precision; ++m) {
        const BigInt index = step * m + shift;
        const auto expected = index >= 0 ? ring.from_big(direct[index.convert_to<std::size_t>()]) : ring.zero();
        const auto got = progression.coeff(m);
        ++out.checked_terms;
        if (got != expected) {
            out.first_mismatch_m = m;
            out.detail = "m = " + std::to_string(m) + ": tower gives " + ring.to_string(got) +
                         ", direct expansion gives " + ring.to_string(expected);
            return out;
        }
    }
    out.ok = true;
    out.detail = "agree on " + std::to_string(out.checked_terms) + " terms";
    return out;
}

/// Outcome of checking one congruence on m = 0..terms.
struct VerificationReport {
    CongruenceStatement statement;
    std::int64_t terms = 0;
    int modulus_exponent = 0; // K, or 0 when computed over Z
    std::string ring;
    Valuation min_valuation;
    bool pass = false;
    std::optional<std::int64_t> first_failure_m;
    double elapsed_ms = 0.0;

    bool trivial() const { return statement.trivial(); }
    /// min_valuation - exponent when the minimum is an exact value.
    std::optional<int> exceeds_by() const
    {
        if (min_valuation.is_infinite() || min_valuation.lower_bound)
            return std::nullopt;
        return min_valuation.value - statement.exponent;
    }
};

/// Check 11^exponent | p_[1^c 11^d](11^r m + n) for m = 0..terms over `ring`.
/// The generating function is expanded once through q^(11^r terms + n).
template <class Ring>
VerificationReport verify_progression(const CongruenceStatement &st, std::int64_t terms, const Ring &ring,
                                      std::int64_t max_length = kMaxSeriesLength);

extern template VerificationReport verify_progression<IntegerRing>(const CongruenceStatement &, std::int64_t,
                                                                   const IntegerRing &, std::int64_t);
extern template VerificationReport verify_progression<Mod11PowerRing>(const CongruenceStatement &, std::int64_t,
                                                                      const Mod11PowerRing &, std::int64_t);

/// Default modulus exponent: A_r + 6.
int default_modulus_exponent(std::int64_t c, std::int64_t d, std::int64_t r);

/// Check the A_r statement in Z/11^K; K == 0 selects the default.
VerificationReport verify_theorem(std::int64_t c, std::int64_t d, std::int64_t r, std::int64_t terms, int K = 0);

/// Same check over exact integers.
VerificationReport verify_theorem_exact(std::int64_t c, std::int64_t d, std::int64_t r, std::int64_t terms);

/// Randomized check of U_11(f(q) g(q^11)) = g(q) U_11(f(q)) over exact integers.
bool up_identity_selftest(int trials, std::uint64_t seed);

struct ScanRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool empty() const { return hi < lo; }
};

struct ScanConfig {
    ScanRange c;
    ScanRange d;
    ScanRange r;
    std::int64_t terms = 30;
    int extra_digits = 6; // K = A_r + extra_digits
    unsigned jobs = 1;
};

struct ScanRow {
    VerificationReport report;
    std::string error; // nonempty when this row could not be computed
};

struct ScanSummary {
    int passed = 0;
    int failed = 0;
    int trivial = 0;
    int errors = 0;
};

/// One report per (c, d, r), ordered by (c, d, r) regardless of completion order.
std::vector<ScanRow> run_scan(const ScanConfig &config);
ScanSummary summarize(const std::vector<ScanRow> &rows);

} // namespace etacong
