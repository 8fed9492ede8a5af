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
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "etacong/qseries.hpp"

namespace etacong {

/// Raised when an eta quotient's q-prefactor would be a fractional power.
class IntegralityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// prod_s eta(s*tau)^(e_s), or the bare product prod_s prod_n (1 - q^(s*n))^(e_s)
/// when the prefactor q^(sum s*e_s / 24) is left off.
struct EtaQuotientSpec {
    std::map<std::int64_t, std::int64_t> factors; // scale -> exponent
    bool include_eta_prefactor = false;

    /// Exponent of the q-prefactor; throws IntegralityError when 24 does not divide sum s*e_s.
    std::int64_t prefactor_exponent() const;
    void validate() const;
};

/// eta(121 tau) / eta(tau) = q^5 prod (1 - q^(121 n)) / (1 - q^n).
EtaQuotientSpec phi_spec(std::int64_t power = 1);

/// prod_n (1 - q^n)^(-c) (1 - q^(11 n))^(-d): the generating function of p_[1^c 11^d].
EtaQuotientSpec partition_spec(std::int64_t c, std::int64_t d);

/// Nonzero terms (exponent, sign) of prod_n (1 - q^(s n)) below prec, from the
/// pentagonal number theorem, sorted by exponent.
std::vector<std::pair<std::int64_t, int>> pentagonal_terms(std::int64_t s, std::int64_t prec);

namespace detail {

// In-place multiplication of a window starting at q^0 by prod_n (1 - q^(s n)).
template <class Ring>
void apply_euler_factor(std::vector<typename Ring::Element> &v, const Ring &ring,
                        const std::vector<std::pair<std::int64_t, int>> &terms)
{
    for (std::size_t n = v.size(); n-- > 0;) {
        auto acc = v[n];
        for (const auto &[e, sign] : terms) {
            if (e == 0)
                continue;
            if (static_cast<std::size_t>(e) > n)
                break;
            const auto &x = v[n - static_cast<std::size_t>(e)];
            acc = sign > 0 ? ring.add(acc, x) : ring.sub(acc, x);
        }
        v[n] = std::move(acc);
    }
}

// In-place division of a window starting at q^0 by prod_n (1 - q^(s n)).
template <class Ring>
void remove_euler_factor(std::vector<typename Ring::Element> &v, const Ring &ring,
                         const std::vector<std::pair<std::int64_t, int>> &terms)
{
    for (std::size_t n = 0; n < v.size(); ++n) {
        auto acc = v[n];
        for (const auto &[e, sign] : terms) {
            if (e == 0)
                continue;
            if (static_cast<std::size_t>(e) > n)
                break;
            const auto &x = v[n - static_cast<std::size_t>(e)];
            acc = sign > 0 ? ring.sub(acc, x) : ring.add(acc, x);
        }
        v[n] = std::move(acc);
    }
}

} // namespace detail

/// prod_{n >= 1} (1 - q^(s n)) known below prec.
template <class Ring>
QSeries<Ring> euler_product(std::int64_t s, std::int64_t prec, const Ring &ring)
{
    if (s < 1 || prec < 1)
        throw std::invalid_argument("euler_product requires s >= 1 and prec >= 1");
    std::vector<typename Ring::Element> v(static_cast<std::size_t>(prec), ring.zero());
    for (const auto &[e, sign] : pentagonal_terms(s, prec))
        v[static_cast<std::size_t>(e)] = ring.from_int(sign);
    return QSeries<Ring>(ring, 0, prec, std::move(v));
}

/// Multiply an existing series by the bare product part of spec (no prefactor);
/// precision is unchanged because every factor starts with 1.
template <class Ring>
QSeries<Ring> apply_eta_product(const QSeries<Ring> &a, const EtaQuotientSpec &spec)
{
    if (a.is_zero())
        return a;
    const auto &ring = a.ring();
    std::vector<typename Ring::Element> v(a.coeffs().begin(), a.coeffs().end());
    for (const auto &[s, e] : spec.factors) {
        if (e == 0)
            continue;
        const auto terms = pentagonal_terms(s, static_cast<std::int64_t>(v.size()));
        for (std::int64_t k = 0; k < (e > 0 ? e : -e); ++k) {
            if (e > 0)
                detail::apply_euler_factor(v, ring, terms);
            else
                detail::remove_euler_factor(v, ring, terms);
        }
    }
    return QSeries<Ring>(ring, a.offset(), a.prec(), std::move(v));
}

/// The eta quotient described by spec, known below prec.
template <class Ring>
QSeries<Ring> eta_quotient(const EtaQuotientSpec &spec, std::int64_t prec, const Ring &ring)
{
    spec.validate();
    const std::int64_t lead = spec.include_eta_prefactor ? spec.prefactor_exponent() : 0;
    if (prec <= lead)
        return QSeries<Ring>::zero(ring, prec);
    return apply_eta_product(QSeries<Ring>::monomial(ring, lead, ring.one(), prec), spec);
}

} // namespace etacong
