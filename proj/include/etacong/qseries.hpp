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

#include <algorithm>
#include <optional>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "etacong/ring.hpp"

namespace etacong {

/// Raised when a coefficient outside the trusted window is requested.
class PrecisionError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Floor and ceiling division, correct for negative numerators.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return -floor_div(-a, b);
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b)
{
    return a - b * floor_div(a, b);
}

/// Truncated Laurent series sum_{n < prec} a(n) q^n over a coefficient ring.
///
/// The stored window is [offset, prec): coeffs()[i] is the coefficient of
/// q^(offset + i), everything below offset is zero, and nothing at or above
/// prec is known. Leading zeros are trimmed on construction, so a nonzero
/// series always has a nonzero coefficient at its offset. The zero series is
/// canonical: no coefficients and offset == prec.
template <class Ring>
class QSeries {
public:
    using Element = typename Ring::Element;

    QSeries(Ring ring, std::int64_t offset, std::int64_t prec, std::vector<Element> coeffs)
        : ring_(std::move(ring)), offset_(offset), prec_(prec), coeffs_(std::move(coeffs))
    {
        if (prec_ < offset_ || static_cast<std::int64_t>(coeffs_.size()) != prec_ - offset_)
            throw std::invalid_argument("QSeries: coefficient count must equal prec - offset");
        normalize();
    }

    static QSeries zero(Ring ring, std::int64_t prec) { return QSeries(std::move(ring), prec, prec, {}); }

    /// c * q^exponent known below prec.
    static QSeries monomial(Ring ring, std::int64_t exponent, Element c, std::int64_t prec)
    {
        if (exponent >= prec)
            return zero(std::move(ring), prec);
        std::vector<Element> v(static_cast<std::size_t>(prec - exponent), ring.zero());
        v[0] = std::move(c);
        return QSeries(std::move(ring), exponent, prec, std::move(v));
    }

    /// Build from small integer coefficients starting at q^offset; the window
    /// is [offset, prec) and missing trailing entries are zero.
    static QSeries from_ints(Ring ring, std::int64_t offset, const std::vector<std::int64_t> &values,
                             std::int64_t prec)
    {
        if (prec <= offset)
            return zero(std::move(ring), prec);
        std::vector<Element> v(static_cast<std::size_t>(prec - offset), ring.zero());
        for (std::size_t i = 0; i < values.size() && i < v.size(); ++i)
            v[i] = ring.from_int(values[i]);
        return QSeries(std::move(ring), offset, prec, std::move(v));
    }

    const Ring &ring() const { return ring_; }
    std::int64_t offset() const { return offset_; }
    std::int64_t prec() const { return prec_; }
    std::span<const Element> coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of q^n; throws PrecisionError for n >= prec.
    Element coeff(std::int64_t n) const
    {
        if (n >= prec_)
            throw PrecisionError("coefficient of q^" + std::to_string(n) +
                                 " requested but series is only known below q^" + std::to_string(prec_));
        if (n < offset_)
            return ring_.zero();
        return coeffs_[static_cast<std::size_t>(n - offset_)];
    }

    /// 11-adic valuation of the series: the minimum over its known coefficients.
    Valuation valuation() const
    {
        Valuation v = ring_.valuation(ring_.zero());
        for (const auto &c : coeffs_)
            v = etacong::min(v, ring_.valuation(c));
        return v;
    }

    std::string to_string(std::size_t max_terms = 12) const
    {
        std::string out;
        std::size_t shown = 0;
        for (std::size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
            if (ring_.is_zero(coeffs_[i]))
                continue;
            if (!out.empty())
                out += " + ";
            out += ring_.to_string(coeffs_[i]) + "*q^" + std::to_string(offset_ + static_cast<std::int64_t>(i));
            ++shown;
        }
        if (out.empty())
            out = "0";
        return out + " + O(q^" + std::to_string(prec_) + ")";
    }

private:
    void normalize()
    {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && ring_.is_zero(coeffs_[lead]))
            ++lead;
        if (lead == 0)
            return;
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        offset_ += static_cast<std::int64_t>(lead);
    }

    Ring ring_;
    std::int64_t offset_;
    std::int64_t prec_;
    std::vector<Element> coeffs_;
};

namespace detail {

template <class Ring>
void require_same_ring(const QSeries<Ring> &a, const QSeries<Ring> &b)
{
    if (!(a.ring() == b.ring()))
        throw RingError("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
}

template <class Ring>
std::size_t count_nonzero(const QSeries<Ring> &a)
{
    return static_cast<std::size_t>(std::count_if(a.coeffs().begin(), a.coeffs().end(),
                                                  [&](const auto &c) { return !a.ring().is_zero(c); }));
}

} // namespace detail

template <class Ring>
QSeries<Ring> add(const QSeries<Ring> &a, const QSeries<Ring> &b)
{
    detail::require_same_ring(a, b);
    const auto &ring = a.ring();
    std::int64_t prec = std::min(a.prec(), b.prec());
    std::int64_t offset = std::min({a.offset(), b.offset(), prec});
    std::vector<typename Ring::Element> v(static_cast<std::size_t>(prec - offset), ring.zero());
    for (std::int64_t n = offset; n < prec; ++n)
        v[static_cast<std::size_t>(n - offset)] = ring.add(a.coeff(n), b.coeff(n));
    return QSeries<Ring>(ring, offset, prec, std::move(v));
}

template <class Ring>
QSeries<Ring> negate(const QSeries<Ring> &a)
{
    std::vector<typename Ring::Element> v(a.coeffs().begin(), a.coeffs().end());
    for (auto &c : v)
        c = a.ring().neg(c);
    return QSeries<Ring>(a.ring(), a.offset(), a.prec(), std::move(v));
}

template <class Ring>
QSeries<Ring> sub(const QSeries<Ring> &a, const QSeries<Ring> &b)
{
    return add(a, negate(b));
}

/// Product; known below min(a.prec + b.offset, b.prec + a.offset).
template <class Ring>
QSeries<Ring> mul(const QSeries<Ring> &a, const QSeries<Ring> &b)
{
    detail::require_same_ring(a, b);
    const auto &ring = a.ring();
    std::int64_t offset = a.offset() + b.offset();
    std::int64_t prec = std::min(a.prec() + b.offset(), b.prec() + a.offset());
    if (a.is_zero() || b.is_zero() || prec <= offset)
        return QSeries<Ring>::zero(ring, prec);

    // Walk the nonzero terms of the sparser factor.
    const bool a_outer = detail::count_nonzero(a) <= detail::count_nonzero(b);
    const auto outer = a_outer ? a.coeffs() : b.coeffs();
    const auto inner = a_outer ? b.coeffs() : a.coeffs();
    const auto len = static_cast<std::size_t>(prec - offset);

    std::vector<typename Ring::Element> v(len, ring.zero());
    for (std::size_t i = 0; i < outer.size() && i < len; ++i) {
        if (ring.is_zero(outer[i]))
            continue;
        const std::size_t stop = std::min(inner.size(), len - i);
        for (std::size_t j = 0; j < stop; ++j)
            v[i + j] = ring.add(v[i + j], ring.mul(outer[i], inner[j]));
    }
    return QSeries<Ring>(ring, offset, prec, std::move(v));
}

template <class Ring>
QSeries<Ring> scale(const QSeries<Ring> &a, const typename Ring::Element &c)
{
    std::vector<typename Ring::Element> v(a.coeffs().begin(), a.coeffs().end());
    for (auto &x : v)
        x = a.ring().mul(x, c);
    return QSeries<Ring>(a.ring(), a.offset(), a.prec(), std::move(v));
}

/// Multiply by q^k.
template <class Ring>
QSeries<Ring> shift(const QSeries<Ring> &a, std::int64_t k)
{
    return QSeries<Ring>(a.ring(), a.offset() + k, a.prec() + k,
                         std::vector<typename Ring::Element>(a.coeffs().begin(), a.coeffs().end()));
}

/// Forget everything at exponents >= prec.
template <class Ring>
QSeries<Ring> truncate(const QSeries<Ring> &a, std::int64_t prec)
{
    if (prec >= a.prec())
        return a;
    if (prec <= a.offset())
        return QSeries<Ring>::zero(a.ring(), prec);
    auto c = a.coeffs().first(static_cast<std::size_t>(prec - a.offset()));
    return QSeries<Ring>(a.ring(), a.offset(), prec, std::vector<typename Ring::Element>(c.begin(), c.end()));
}

/// a / b, requiring a unit leading coefficient in b. The relative precision
/// of the quotient is the smaller of the two relative precisions.
template <class Ring>
QSeries<Ring> div(const QSeries<Ring> &a, const QSeries<Ring> &b)
{
    detail::require_same_ring(a, b);
    const auto &ring = a.ring();
    if (b.is_zero())
        throw RingError("division by a series with no known nonzero coefficient");
    const auto lead_inv = ring.inverse(b.coeffs()[0]);
    const std::int64_t offset = a.offset() - b.offset();
    const std::int64_t len = std::min(a.prec() - a.offset(), b.prec() - b.offset());
    if (a.is_zero() || len <= 0)
        return QSeries<Ring>::zero(ring, offset + std::max<std::int64_t>(len, 0));

    std::vector<std::pair<std::size_t, typename Ring::Element>> tail;
    for (std::size_t k = 1; k < b.coeffs().size() && k < static_cast<std::size_t>(len); ++k)
        if (!ring.is_zero(b.coeffs()[k]))
            tail.emplace_back(k, b.coeffs()[k]);

    std::vector<typename Ring::Element> v(static_cast<std::size_t>(len), ring.zero());
    const auto ac = a.coeffs();
    for (std::size_t n = 0; n < v.size(); ++n) {
        auto acc = ring.zero();
        for (const auto &[k, bk] : tail) {
            if (k > n)
                break;
            acc = ring.add(acc, ring.mul(bk, v[n - k]));
        }
        v[n] = ring.mul(lead_inv, ring.sub(ac[n], acc));
    }
    return QSeries<Ring>(ring, offset, offset + len, std::move(v));
}

/// Multiplicative inverse; offset becomes -a.offset, relative precision is kept.
template <class Ring>
QSeries<Ring> inv(const QSeries<Ring> &a)
{
    if (a.is_zero())
        throw RingError("cannot invert a series with no known nonzero coefficient");
    const std::int64_t len = a.prec() - a.offset();
    return div(QSeries<Ring>::monomial(a.ring(), 0, a.ring().one(), len), a);
}

/// a^e by square-and-multiply; negative e goes through inv.
template <class Ring>
QSeries<Ring> int_pow(const QSeries<Ring> &a, std::int64_t e)
{
    if (e < 0)
        return int_pow(inv(a), -e);
    if (e == 0) {
        const std::int64_t len = a.is_zero() ? a.prec() : a.prec() - a.offset();
        return QSeries<Ring>::monomial(a.ring(), 0, a.ring().one(), std::max<std::int64_t>(len, 1));
    }
    QSeries<Ring> base = a;
    std::optional<QSeries<Ring>> acc;
    while (e > 0) {
        if (e & 1)
            acc = acc ? mul(*acc, base) : base;
        e >>= 1;
        if (e > 0)
            base = mul(base, base);
    }
    return *acc;
}

/// U_p: sum a(pn) q^n. Known for n <= floor((prec - 1) / p).
template <class Ring>
QSeries<Ring> u_p(const QSeries<Ring> &a, std::int64_t p)
{
    if (p < 2)
        throw std::invalid_argument("u_p requires p >= 2");
    const std::int64_t prec = floor_div(a.prec() - 1, p) + 1;
    const std::int64_t offset = std::min(ceil_div(a.offset(), p), prec);
    std::vector<typename Ring::Element> v;
    v.reserve(static_cast<std::size_t>(prec - offset));
    for (std::int64_t n = offset; n < prec; ++n)
        v.push_back(a.coeff(p * n));
    return QSeries<Ring>(a.ring(), offset, prec, std::move(v));
}

/// q -> q^p.
template <class Ring>
QSeries<Ring> dilate(const QSeries<Ring> &a, std::int64_t p)
{
    if (p < 1)
        throw std::invalid_argument("dilate requires p >= 1");
    if (p == 1)
        return a;
    if (a.is_zero())
        return QSeries<Ring>::zero(a.ring(), a.prec() * p);
    const std::int64_t offset = a.offset() * p;
    const std::int64_t prec = a.prec() * p;
    std::vector<typename Ring::Element> v(static_cast<std::size_t>(prec - offset), a.ring().zero());
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        v[i * static_cast<std::size_t>(p)] = a.coeffs()[i];
    return QSeries<Ring>(a.ring(), offset, prec, std::move(v));
}

/// True when a and b agree on every exponent below min(a.prec, b.prec).
template <class Ring>
bool agree(const QSeries<Ring> &a, const QSeries<Ring> &b)
{
    detail::require_same_ring(a, b);
    const std::int64_t prec = std::min(a.prec(), b.prec());
    const std::int64_t lo = std::min(a.offset(), b.offset());
    for (std::int64_t n = lo; n < prec; ++n)
        if (a.coeff(n) != b.coeff(n))
            return false;
    return true;
}

/// Coefficientwise image of an exact series in Z/11^K.
inline QSeries<Mod11PowerRing> reduce(const QSeries<IntegerRing> &a, const Mod11PowerRing &ring)
{
    std::vector<Mod11PowerRing::Element> v;
    v.reserve(a.coeffs().size());
    for (const auto &c : a.coeffs())
        v.push_back(ring.from_big(c));
    return QSeries<Mod11PowerRing>(ring, a.offset(), a.prec(), std::move(v));
}

} // namespace etacong
