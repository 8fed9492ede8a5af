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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "etacong/selftest.hpp"
#include "etacong/verifier.hpp"
#include "reference.hpp"

using namespace etacong;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char *name, const std::function<Outcome()> &body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception &e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.ok)
        ++failures;
    std::printf("[%s] %d %s (%.2fs)%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs, out.detail.empty() ? "" : ": ",
                out.detail.c_str());
    std::fflush(stdout);
}

std::string triple(std::int64_t c, std::int64_t d, std::int64_t r)
{
    return "(" + std::to_string(c) + "," + std::to_string(d) + "," + std::to_string(r) + ")";
}

Outcome check_progression(std::vector<std::string> &bad, std::int64_t c, std::int64_t d, std::int64_t r,
                          std::int64_t n, int exponent, std::int64_t terms)
{
    const CongruenceStatement st{c, d, r, n, exponent};
    const auto rep = verify_progression(st, terms, Mod11PowerRing(exponent + 4));
    if (!rep.pass)
        bad.push_back(st.to_string() + " min valuation " + to_string(rep.min_valuation));
    return {};
}

Outcome join(const std::vector<std::string> &bad, const std::string &ok_detail)
{
    if (bad.empty())
        return {true, ok_detail};
    std::ostringstream os;
    for (std::size_t i = 0; i < bad.size(); ++i)
        os << (i ? "; " : "") << bad[i];
    return {false, os.str()};
}

} // namespace

int main()
{
    criterion(1, "exponent A_r certified on [-4,4]^2, r <= 3, M = 30", [] {
        ScanConfig cfg;
        cfg.c = {-4, 4};
        cfg.d = {-4, 4};
        cfg.r = {1, 3};
        cfg.terms = 30;
        cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
        const auto rows = run_scan(cfg);
        std::vector<std::string> bad;
        for (const auto &row : rows) {
            const auto &s = row.report.statement;
            if (!row.error.empty())
                bad.push_back(triple(s.c, s.d, s.r) + " error " + row.error);
            else if (!row.report.pass)
                bad.push_back(triple(s.c, s.d, s.r) + " " + s.to_string() + " observed min valuation " +
                              to_string(row.report.min_valuation) + " at m = " +
                              std::to_string(row.report.first_failure_m.value_or(-1)));
        }
        auto out = join(bad, std::to_string(rows.size()) + " instances");
        if (!out.ok)
            out.detail = std::to_string(bad.size()) + " of " + std::to_string(rows.size()) + " fail: " + out.detail;
        return out;
    });

    criterion(2, "three known families for 11-cores, 11-regular and [1 11] partitions", [] {
        std::vector<std::string> bad;
        for (int k = 1; k <= 2; ++k) {
            const std::int64_t step = pow11(k).convert_to<std::int64_t>();
            check_progression(bad, 1, -11, k, step - 5, k, 30);
            const std::int64_t odd = pow11(2 * k - 1).convert_to<std::int64_t>();
            check_progression(bad, 1, -1, 2 * k - 1, (7 * odd - 5) / 12, k, 30);
        }
        for (int k = 1; k <= 3; ++k) {
            const std::int64_t step = pow11(k).convert_to<std::int64_t>();
            check_progression(bad, 1, 1, k, (step + 1) / 2, k, 30);
        }
        return join(bad, "7 progressions, 30 terms each");
    });

    criterion(3, "p(11m + 6) mod 11 and p(121m + 116) mod 121", [] {
        std::vector<std::string> bad;
        check_progression(bad, 1, 0, 1, 6, 1, 100);
        check_progression(bad, 1, 0, 2, 116, 2, 20);
        // Cross-check the first few by brute-force partition counting.
        for (std::int64_t m = 0; m <= 3; ++m)
            if (etacong_test::count_partitions(11 * m + 6) % 11 != 0)
                bad.push_back("brute force p(" + std::to_string(11 * m + 6) + ")");
        return join(bad, "");
    });

    criterion(4, "alpha table regenerated from theta", [] {
        const auto rep = alpha_table_regenerate();
        std::vector<std::string> bad;
        for (const auto &mm : rep.mismatches)
            bad.push_back(std::string(mm.negative_regime ? "negative " : "") + "row " + std::to_string(mm.row_label) +
                          " col " + std::to_string(mm.column) + " (c+11d = " + std::to_string(mm.c_plus_11d) +
                          "): embedded " + std::to_string(mm.embedded) + ", computed " + std::to_string(mm.computed));
        auto out = join(bad, std::to_string(rep.cells_checked) + " cells");
        if (!out.ok)
            out.detail = std::to_string(rep.mismatches.size()) + " of " + std::to_string(rep.cells_checked) +
                         " cells differ: " + out.detail;
        return out;
    });

    criterion(5, "worked examples for A_r and alpha", [] {
        std::vector<std::string> bad;
        for (std::int64_t r = 1; r <= 10; ++r)
            if (exponent_A(1, 1, r) != r)
                bad.push_back("A_" + std::to_string(r) + "(1,1)");
        for (std::int64_t r = 1; r <= 5; ++r) {
            if (exponent_A(1, -1, 2 * r) != r)
                bad.push_back("A_" + std::to_string(2 * r) + "(1,-1)");
            if (exponent_A(2, 7, 2 * r) != 2 * r - 1)
                bad.push_back("A_" + std::to_string(2 * r) + "(2,7)");
        }
        if (alpha(1, 1) != 2)
            bad.push_back("alpha(1,1)");
        if (alpha(1, -1) != 1)
            bad.push_back("alpha(1,-1)");
        if (alpha(2, 7) != 2)
            bad.push_back("alpha(2,7)");
        return join(bad, "");
    });

    criterion(6, "U_11 identity, tower crosscheck, closed forms", [] {
        std::vector<std::string> bad;
        if (!up_identity_selftest(100, 20190602))
            bad.push_back("U_11 commutation identity");
        for (auto [c, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, -1}, {1, 0}, {2, 7}, {1, -11}})
            for (std::int64_t r = 0; r <= 2; ++r) {
                const auto res = crosscheck_product_form(c, d, r, 30, IntegerRing{});
                if (!res.ok)
                    bad.push_back("tower " + triple(c, d, r) + " " + res.detail);
            }
        for (std::int64_t c = -20; c <= 20; ++c)
            for (std::int64_t d = -20; d <= 20; ++d)
                for (std::int64_t r = 1; r <= 6; ++r) {
                    const BigInt n = n_raw(c, d, r);
                    if (n != n_raw_closed(c, d, r) || mu_seq(c, d, r) != mu_least(c, d, r) ||
                        (24 * n - (c + 11 * d)) % pow11(static_cast<unsigned>(r)) != 0)
                        bad.push_back("closed form " + triple(c, d, r));
                }
        return join(bad, "");
    });

    criterion(7, "fast eta-product expansion equals naive oracle on [-12,12]^2, N = 200", [] {
        std::vector<std::string> bad;
        for (std::int64_t c = -12; c <= 12; ++c)
            for (std::int64_t d = -12; d <= 12; ++d) {
                const auto fast = eta_quotient(partition_spec(c, d), 200, IntegerRing{});
                const auto slow = naive_coeffs(c, d, 11, 200);
                for (std::int64_t n = 0; n < 200; ++n)
                    if (fast.coeff(n) != slow.values[static_cast<std::size_t>(n)]) {
                        bad.push_back("(" + std::to_string(c) + "," + std::to_string(d) + ") at q^" +
                                      std::to_string(n));
                        break;
                    }
            }
        return join(bad, "625 pairs");
    });

    criterion(8, "growth bound for A_r on [-10,10]^2, r <= 60", [] {
        std::vector<std::string> bad;
        for (std::int64_t c = -10; c <= 10; ++c)
            for (std::int64_t d = -10; d <= 10; ++d) {
                if (c + 11 * d == 0)
                    continue;
                for (std::int64_t r = 1; r <= 60; ++r)
                    if (!corollary_bound_check(c, d, r))
                        bad.push_back(triple(c, d, r));
            }
        return join(bad, "");
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
