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

#include "etacong/congruence.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "etacong/qseries.hpp"

namespace etacong {

namespace {

BigInt big_floor_div(const BigInt &a, const BigInt &b)
{
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

BigInt big_ceil_div(const BigInt &a, const BigInt &b)
{
    return -big_floor_div(-a, b);
}

void require_level(std::int64_t r)
{
    if (r < 0)
        throw std::invalid_argument("level r must be nonnegative, got " + std::to_string(r));
}

} // namespace

std::int64_t lambda_seq(std::int64_t c, std::int64_t d, std::int64_t i)
{
    return (i % 2 == 0) ? c : d;
}

std::int64_t mu_seq(std::int64_t c, std::int64_t d, std::int64_t r)
{
    require_level(r);
    std::int64_t mu = 0;
    for (std::int64_t i = 0; i < r; ++i)
        mu = ceil_div(5 * lambda_seq(c, d, i) + mu, 11);
    return mu;
}

std::int64_t mu_least(std::int64_t c, std::int64_t d, std::int64_t r)
{
    require_level(r);
    const BigInt scale = pow11(static_cast<unsigned>(r));
    const BigInt k = BigInt(c) + 11 * BigInt(d);
    const BigInt num = (r % 2 == 0) ? k * scale - k : (11 * BigInt(c) + BigInt(d)) * scale - k;
    return big_ceil_div(num, 24 * scale).convert_to<std::int64_t>();
}

int omega(std::int64_t c, std::int64_t d)
{
    const std::int64_t k = c + 11 * d;
    return (k < 0 && k % 24 == 0) ? 1 : 0;
}

std::int64_t mu_closed(std::int64_t c, std::int64_t d, std::int64_t r)
{
    if (r < 1)
        throw std::invalid_argument("mu_closed requires r >= 1");
    const BigInt k = BigInt(c) + 11 * BigInt(d);
    if (abs(k) >= pow11(static_cast<unsigned>(r)))
        throw GuardError("closed form for mu_r needs |c + 11d| < 11^r");
    const std::int64_t numerator = (r % 2 == 1) ? 11 * c + d : c + 11 * d;
    return ceil_div(numerator, 24) + omega(c, d);
}

BigInt n_raw(std::int64_t c, std::int64_t d, std::int64_t r)
{
    require_level(r);
    BigInt n = 0;
    BigInt power = 1; // 11^(i-1)
    for (std::int64_t i = 1; i <= r; ++i) {
        n -= 5 * BigInt(i % 2 == 1 ? c : d) * power;
        power *= 11;
    }
    return n;
}

BigInt n_raw_closed(std::int64_t c, std::int64_t d, std::int64_t r)
{
    require_level(r);
    const std::int64_t k = (r + 1) / 2;
    const BigInt big = (pow11(static_cast<unsigned>(2 * k)) - 1) / 24;
    if (r % 2 == 0)
        return -BigInt(c) * big - 11 * BigInt(d) * big;
    const BigInt small = (pow11(static_cast<unsigned>(2 * k - 2)) - 1) / 24;
    return -BigInt(c) * big - 11 * BigInt(d) * small;
}

std::int64_t n_canonical(std::int64_t c, std::int64_t d, std::int64_t r)
{
    if (r < 1 || r > Mod11PowerRing::kMaxExponent)
        throw std::invalid_argument("n_canonical requires 1 <= r <= " +
                                    std::to_string(Mod11PowerRing::kMaxExponent));
    const Mod11PowerRing ring(static_cast<int>(r));
    const auto k = ring.from_big(BigInt(c) + 11 * BigInt(d));
    return static_cast<std::int64_t>(ring.mul(k, ring.inverse(24)));
}

int theta(std::int64_t lambda, std::int64_t mu)
{
    const std::int64_t row = floor_mod(mu, 5);
    const std::int64_t col = floor_mod(lambda + 12 * floor_div(mu, 5), 11);
    return kThetaTable[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

int delta(std::int64_t mu, std::int64_t nu)
{
    return kDeltaTable[static_cast<std::size_t>(floor_mod(mu, 5))][static_cast<std::size_t>(floor_mod(nu, 5))];
}

std::int64_t order_bound(std::int64_t mu, std::int64_t nu, std::int64_t lambda)
{
    return floor_div(11 * nu - mu - 5 * lambda + delta(mu, nu), 10);
}

SequenceCache::SequenceCache(std::int64_t c, std::int64_t d) : c_(c), d_(d) {}

void SequenceCache::extend(std::int64_t r)
{
    require_level(r);
    while (static_cast<std::int64_t>(mu_.size()) <= r) {
        const auto i = static_cast<std::int64_t>(mu_.size()) - 1;
        const std::int64_t lambda = lambda_seq(c_, d_, i);
        exponent_.push_back(exponent_.back() + theta(lambda, mu_.back()));
        mu_.push_back(ceil_div(5 * lambda + mu_.back(), 11));
    }
}

std::int64_t SequenceCache::mu(std::int64_t r)
{
    extend(r);
    return mu_[static_cast<std::size_t>(r)];
}

int SequenceCache::exponent(std::int64_t r)
{
    extend(r);
    return exponent_[static_cast<std::size_t>(r)];
}

int exponent_A(std::int64_t c, std::int64_t d, std::int64_t r)
{
    return SequenceCache(c, d).exponent(r);
}

int alpha(std::int64_t c, std::int64_t d)
{
    const int w = omega(c, d);
    return theta(d, ceil_div(11 * c + d, 24) + w) + theta(c, ceil_div(c + 11 * d, 24) + w);
}

AlphaTableReport alpha_table_regenerate()
{
    AlphaTableReport report;
    for (int i = 0; i < 5; ++i) {
        for (int j = 1; j <= 24; ++j) {
            const std::int64_t v = 24 * i + j;
            const int value = alpha(v, 0);
            report.computed[i][j - 1] = value;
            ++report.cells_checked;
            if (value != kAlphaTable[i][j - 1])
                report.mismatches.push_back({24 * i, j, v, false, kAlphaTable[i][j - 1], value});
        }
        // Negative member of the residue class 24 i + 24 (mod 120).
        std::int64_t v = 24 * i + 24 - 120;
        if (v >= 0)
            v -= 120;
        const int value = alpha(v, 0);
        report.computed_negative_last_column[i] = value;
        ++report.cells_checked;
        if (value != kAlphaNegativeLastColumn[i])
            report.mismatches.push_back({24 * i, 24, v, true, kAlphaNegativeLastColumn[i], value});
    }
    return report;
}

bool corollary_bound_check(std::int64_t c, std::int64_t d, std::int64_t r)
{
    const std::int64_t k = c + 11 * d;
    if (k == 0)
        throw std::domain_error("corollary bound needs c + 11d != 0 (log_11 of zero)");
    const double a = alpha(c, d);
    const double lhs = std::abs(exponent_A(c, d, r) - a * static_cast<double>(r) / 2.0);
    const double rhs = 2.0 + a / 2.0 + (1.0 + a / 2.0) * std::log(std::abs(static_cast<double>(k))) / std::log(11.0);
    return lhs < rhs;
}

std::int64_t CongruenceStatement::step() const
{
    return pow11(static_cast<unsigned>(r)).convert_to<std::int64_t>();
}

std::string CongruenceStatement::to_string() const
{
    std::ostringstream os;
    os << "p_[1^" << c << " 11^" << d << "](" << step() << "m + " << n << ") ≡ 0 (mod 11^" << exponent << ")";
    if (trivial())
        os << "  [trivial]";
    return os.str();
}

CongruenceStatement statement(std::int64_t c, std::int64_t d, std::int64_t r)
{
    if (r < 1)
        throw std::invalid_argument("statement requires r >= 1");
    return {c, d, r, n_canonical(c, d, r), exponent_A(c, d, r)};
}

std::string render_theta_table()
{
    std::ostringstream os;
    os << "theta(lambda, mu)\nmu\\lambda";
    for (int l = 0; l < 11; ++l)
        os << ' ' << (l < 10 ? " " : "") << l;
    os << '\n';
    for (int m = 0; m < 5; ++m) {
        os << "        " << m;
        for (int l = 0; l < 11; ++l)
            os << "  " << kThetaTable[m][l];
        os << '\n';
    }
    return os.str();
}

std::string render_delta_table()
{
    std::ostringstream os;
    os << "delta(mu, nu)\nmu\\nu";
    for (int n = 0; n < 5; ++n)
        os << "   " << n;
    os << '\n';
    for (int m = 0; m < 5; ++m) {
        os << "    " << m;
        for (int n = 0; n < 5; ++n) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "%4d", kDeltaTable[m][n]);
            os << buf;
        }
        os << '\n';
    }
    return os.str();
}

std::string render_alpha_table(const std::array<std::array<int, 24>, 5> &grid,
                               const std::array<int, 5> &negative_last_column)
{
    std::ostringstream os;
    os << "alpha(24i + j)\n    ";
    for (int j = 1; j <= 24; ++j)
        os << (j < 10 ? "  " : " ") << j;
    os << '\n';
    for (int i = 0; i < 5; ++i) {
        char label[8];
        std::snprintf(label, sizeof label, "%3d ", 24 * i);
        os << label;
        for (int j = 0; j < 24; ++j)
            os << "  " << grid[i][j];
        os << '\n';
    }
    os << "last column when c + 11d < 0:";
    for (int v : negative_last_column)
        os << ' ' << v;
    os << '\n';
    return os.str();
}

} // namespace etacong
