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

#include "etacong/verifier.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <thread>

namespace etacong {

template <class Ring>
VerificationReport verify_progression(const CongruenceStatement &st, std::int64_t terms, const Ring &ring,
                                      std::int64_t max_length)
{
    if (terms < 1)
        throw ConfigError("number of terms M must be at least 1");
    if (st.r < 1 || st.r > Mod11PowerRing::kMaxExponent)
        throw ConfigError("level r must lie in [1, " + std::to_string(Mod11PowerRing::kMaxExponent) + "]");
    if (st.n < 0)
        throw ConfigError("progression offset n must be nonnegative");

    const auto start = std::chrono::steady_clock::now();
    const BigInt length = pow11(static_cast<unsigned>(st.r)) * terms + st.n + 1;
    if (length > max_length)
        throw ResourceError("expansion to " + length.str() + " terms exceeds the budget of " +
                            std::to_string(max_length));

    const std::int64_t step = st.step();
    const auto series = eta_quotient(partition_spec(st.c, st.d), length.convert_to<std::int64_t>(), ring);

    VerificationReport report;
    report.statement = st;
    report.terms = terms;
    report.ring = ring.name();
    report.min_valuation = ring.valuation(ring.zero());
    for (std::int64_t m = 0; m <= terms; ++m) {
        const Valuation v = ring.valuation(series.coeff(step * m + st.n));
        report.min_valuation = min(report.min_valuation, v);
        if (!v.reaches(st.exponent) && !report.first_failure_m)
            report.first_failure_m = m;
    }
    report.pass = report.min_valuation.reaches(st.exponent);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

template VerificationReport verify_progression<IntegerRing>(const CongruenceStatement &, std::int64_t,
                                                            const IntegerRing &, std::int64_t);
template VerificationReport verify_progression<Mod11PowerRing>(const CongruenceStatement &, std::int64_t,
                                                               const Mod11PowerRing &, std::int64_t);

int default_modulus_exponent(std::int64_t c, std::int64_t d, std::int64_t r)
{
    return exponent_A(c, d, r) + 6;
}

VerificationReport verify_theorem(std::int64_t c, std::int64_t d, std::int64_t r, std::int64_t terms, int K)
{
    if (terms < 1)
        throw ConfigError("number of terms M must be at least 1");
    const auto st = statement(c, d, r);
    if (K == 0)
        K = st.exponent + 6;
    if (K < st.exponent + 1)
        throw ConfigError("modulus exponent K = " + std::to_string(K) + " must exceed A_r = " +
                          std::to_string(st.exponent));
    if (K > Mod11PowerRing::kMaxExponent)
        throw ConfigError("modulus exponent K = " + std::to_string(K) + " exceeds the supported maximum " +
                          std::to_string(Mod11PowerRing::kMaxExponent));
    auto report = verify_progression(st, terms, Mod11PowerRing(K));
    report.modulus_exponent = K;
    return report;
}

VerificationReport verify_theorem_exact(std::int64_t c, std::int64_t d, std::int64_t r, std::int64_t terms)
{
    return verify_progression(statement(c, d, r), terms, IntegerRing{});
}

namespace {

QSeries<IntegerRing> random_polynomial(std::mt19937_64 &rng, std::int64_t lowest, std::int64_t highest,
                                       std::int64_t prec)
{
    std::uniform_int_distribution<std::int64_t> lo_dist(lowest, highest);
    const std::int64_t lo = lo_dist(rng);
    std::uniform_int_distribution<std::int64_t> hi_dist(lo, highest);
    const std::int64_t hi = hi_dist(rng);
    std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
    std::vector<std::int64_t> values(static_cast<std::size_t>(hi - lo + 1));
    for (auto &v : values)
        v = coeff(rng);
    return QSeries<IntegerRing>::from_ints(IntegerRing{}, lo, values, prec);
}

} // namespace

bool up_identity_selftest(int trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        // Polynomials are exact, so any precision above their degree is honest.
        const auto f = random_polynomial(rng, -20, 400, 800);
        const auto g = random_polynomial(rng, 0, 30, 70);
        const auto lhs = u_p(mul(f, dilate(g, 11)), 11);
        const auto rhs = mul(g, u_p(f, 11));
        if (!agree(lhs, rhs))
            return false;
    }
    return true;
}

std::vector<ScanRow> run_scan(const ScanConfig &config)
{
    if (config.c.empty() || config.d.empty() || config.r.empty())
        throw ConfigError("scan ranges must be nonempty");
    if (config.terms < 1)
        throw ConfigError("number of terms M must be at least 1");

    struct Job {
        std::int64_t c, d, r;
    };
    std::vector<Job> jobs;
    for (std::int64_t c = config.c.lo; c <= config.c.hi; ++c)
        for (std::int64_t d = config.d.lo; d <= config.d.hi; ++d)
            for (std::int64_t r = config.r.lo; r <= config.r.hi; ++r)
                jobs.push_back({c, d, r});

    std::vector<ScanRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const auto &job = jobs[i];
            auto &row = rows[i];
            try {
                const int K = exponent_A(job.c, job.d, job.r) + config.extra_digits;
                row.report = verify_theorem(job.c, job.d, job.r, config.terms, K);
            } catch (const std::exception &e) {
                row.error = e.what();
                row.report.statement.c = job.c;
                row.report.statement.d = job.d;
                row.report.statement.r = job.r;
                row.report.terms = config.terms;
                row.report.pass = false;
            }
        }
    };

    const unsigned n_threads = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(jobs.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < n_threads; ++t)
            pool.emplace_back(worker);
        worker();
    }
    return rows;
}

ScanSummary summarize(const std::vector<ScanRow> &rows)
{
    ScanSummary s;
    for (const auto &row : rows) {
        if (!row.error.empty())
            ++s.errors;
        else if (row.report.pass)
            ++s.passed;
        else
            ++s.failed;
        if (row.error.empty() && row.report.trivial())
            ++s.trivial;
    }
    return s;
}

} // namespace etacong
