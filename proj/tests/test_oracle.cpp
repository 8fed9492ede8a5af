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

#include <doctest.h>

#include "etacong/eta_quotient.hpp"
#include "etacong/oracle.hpp"
#include "reference.hpp"

using namespace etacong;

TEST_CASE("euler_p against brute-force enumeration")
{
    const auto p = euler_p(25);
    REQUIRE(p.values.size() == 25);
    CHECK(p.values[0] == 1);
    CHECK(p.values[1] == 1);
    CHECK(p.values[4] == 5);
    CHECK(p.values[6] == 11);
    for (std::int64_t n = 0; n < 25; ++n)
        CHECK(p.values[static_cast<std::size_t>(n)] == etacong_test::count_partitions(n));
    CHECK_THROWS_AS(euler_p(0), std::invalid_argument);
}

TEST_CASE("naive_coeffs examples")
{
    const auto p = naive_coeffs(1, 0, 11, 5);
    CHECK(p.values == std::vector<BigInt>{1, 1, 2, 3, 5});

    const auto pq = naive_coeffs(1, 1, 11, 12);
    CHECK(pq.values[11] == 57);
    CHECK(pq.values[11] == etacong_test::count_partitions(11) + 1);

    const auto regular = naive_coeffs(1, -1, 11, 7);
    CHECK(regular.values[6] == 11);

    CHECK(naive_coeffs(0, 0, 11, 4).values == std::vector<BigInt>{1, 0, 0, 0});
}

TEST_CASE("naive_coeffs structural properties")
{
    CHECK(naive_coeffs(1, 0, 11, 120).values == euler_p(120).values);
    for (std::int64_t c = -3; c <= 3; ++c) {
        for (std::int64_t d = -3; d <= 3; ++d) {
            const auto seq = naive_coeffs(c, d, 11, 60);
            CHECK(seq.values.size() == 60);
            CHECK(seq.values[0] == 1);
            if (c >= 0 && d >= 0)
                for (const auto &v : seq.values)
                    CHECK(v >= 0);
        }
    }
}

TEST_CASE("fast eta quotient equals the naive oracle")
{
    for (std::int64_t c = -12; c <= 12; c += 3) {
        for (std::int64_t d = -12; d <= 12; d += 4) {
            const auto fast = eta_quotient(partition_spec(c, d), 200, IntegerRing{});
            const auto slow = naive_coeffs(c, d, 11, 200);
            for (std::int64_t n = 0; n < 200; ++n)
                REQUIRE(fast.coeff(n) == slow.values[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("valuation_11")
{
    CHECK(valuation_11(0).is_infinite());
    CHECK(valuation_11(121) == Valuation{2, false});
    CHECK(valuation_11(-1331) == Valuation{3, false});
    CHECK(valuation_11(57) == Valuation{0, false});
    CHECK(valuation_11(pow11(40) * 3) == Valuation{40, false});
}

TEST_CASE("Mod11PowerRing arithmetic")
{
    const Mod11PowerRing R(3);
    CHECK(R.modulus() == 1331);
    CHECK(R.from_int(-1) == 1330);
    CHECK(R.from_big(BigInt(-1332)) == 1330);
    CHECK(R.mul(R.inverse(24), 24) == 1);
    CHECK(R.mul(R.inverse(1330), 1330) == 1);
    CHECK_THROWS_AS(R.inverse(22), RingError);
    CHECK(R.valuation(0) == Valuation::at_least(3));
    CHECK(R.valuation(242) == Valuation{2, false});
    CHECK(R.valuation(22) == Valuation{1, false});
    CHECK_THROWS_AS(Mod11PowerRing(0), RingError);
    CHECK_THROWS_AS(Mod11PowerRing(19), RingError);
    const Mod11PowerRing big(18);
    CHECK(big.mul(big.from_int(-1), big.from_int(-1)) == 1);
    CHECK(big.mul(big.inverse(24), 24) == 1);
}

TEST_CASE("Valuation min prefers exact values on ties")
{
    CHECK(min(Valuation{2, false}, Valuation::at_least(2)) == Valuation{2, false});
    CHECK(min(Valuation::at_least(4), Valuation{3, false}) == Valuation{3, false});
    CHECK(min(Valuation::infinite(), Valuation{1, false}) == Valuation{1, false});
    CHECK(to_string(Valuation::at_least(5)) == ">=5");
    CHECK(to_string(Valuation::infinite()) == "inf");
}
