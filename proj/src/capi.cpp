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

#include "etacong/etacong.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <thread>

#include "etacong/report.hpp"

using namespace etacong;

struct etacong_statement_s {
    CongruenceStatement value;
};

struct etacong_report_s {
    VerificationReport value;
};

struct etacong_scan_s {
    std::vector<ScanRow> rows;
};

struct etacong_sequence_s {
    OracleSequence value;
    std::vector<std::string> text;
};

namespace {

thread_local std::string g_last_error;

etacong_status fail(etacong_status status, const char *what)
{
    g_last_error = what;
    return status;
}

template <class F>
etacong_status guarded(F &&body)
{
    try {
        body();
        g_last_error.clear();
        return ETACONG_OK;
    } catch (const ConfigError &e) {
        return fail(ETACONG_ERR_CONFIG, e.what());
    } catch (const ResourceError &e) {
        return fail(ETACONG_ERR_RESOURCE, e.what());
    } catch (const RingError &e) {
        return fail(ETACONG_ERR_RING, e.what());
    } catch (const PrecisionError &e) {
        return fail(ETACONG_ERR_PRECISION, e.what());
    } catch (const std::domain_error &e) {
        return fail(ETACONG_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(ETACONG_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(ETACONG_ERR_RESOURCE, "out of memory");
    } catch (const std::exception &e) {
        return fail(ETACONG_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ETACONG_ERR_INTERNAL, "unknown error");
    }
}

char *copy_string(const std::string &s)
{
    char *p = static_cast<char *>(std::malloc(s.size() + 1));
    if (!p)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

Format to_format(etacong_format f)
{
    switch (f) {
    case ETACONG_FORMAT_TEXT:
        return Format::text;
    case ETACONG_FORMAT_JSON:
        return Format::json;
    case ETACONG_FORMAT_CSV:
        return Format::csv;
    }
    throw std::invalid_argument("unknown output format");
}

template <class T>
void require_out(T *p)
{
    if (!p)
        throw std::invalid_argument("null output pointer");
}

} // namespace

extern "C" {

const char *etacong_version(void)
{
    return "1.0.0";
}

const char *etacong_status_string(etacong_status status)
{
    switch (status) {
    case ETACONG_OK:
        return "ok";
    case ETACONG_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case ETACONG_ERR_CONFIG:
        return "configuration error";
    case ETACONG_ERR_RING:
        return "ring error";
    case ETACONG_ERR_PRECISION:
        return "precision error";
    case ETACONG_ERR_DOMAIN:
        return "domain error";
    case ETACONG_ERR_RESOURCE:
        return "resource error";
    case ETACONG_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *etacong_last_error(void)
{
    return g_last_error.c_str();
}

void etacong_string_free(char *s)
{
    std::free(s);
}

etacong_status etacong_theta(int64_t lambda, int64_t mu, int *out)
{
    return guarded([&] {
        require_out(out);
        *out = theta(lambda, mu);
    });
}

etacong_status etacong_delta(int64_t mu, int64_t nu, int *out)
{
    return guarded([&] {
        require_out(out);
        *out = delta(mu, nu);
    });
}

etacong_status etacong_order_bound(int64_t mu, int64_t nu, int64_t lambda, int64_t *out)
{
    return guarded([&] {
        require_out(out);
        *out = order_bound(mu, nu, lambda);
    });
}

etacong_status etacong_mu(int64_t c, int64_t d, int64_t r, int64_t *out)
{
    return guarded([&] {
        require_out(out);
        *out = mu_seq(c, d, r);
    });
}

etacong_status etacong_exponent(int64_t c, int64_t d, int64_t r, int *out)
{
    return guarded([&] {
        require_out(out);
        if (r < 0)
            throw std::invalid_argument("r must be nonnegative");
        *out = exponent_A(c, d, r);
    });
}

etacong_status etacong_alpha(int64_t c, int64_t d, int *out)
{
    return guarded([&] {
        require_out(out);
        *out = alpha(c, d);
    });
}

etacong_status etacong_n_canonical(int64_t c, int64_t d, int64_t r, int64_t *out)
{
    return guarded([&] {
        require_out(out);
        *out = n_canonical(c, d, r);
    });
}

etacong_status etacong_corollary_bound(int64_t c, int64_t d, int64_t r, int *holds)
{
    return guarded([&] {
        require_out(holds);
        *holds = corollary_bound_check(c, d, r) ? 1 : 0;
    });
}

etacong_status etacong_statement_create(int64_t c, int64_t d, int64_t r, etacong_statement *out)
{
    return guarded([&] {
        require_out(out);
        *out = new etacong_statement_s{statement(c, d, r)};
    });
}

void etacong_statement_free(etacong_statement st)
{
    delete st;
}

int64_t etacong_statement_n(etacong_statement st)
{
    return st ? st->value.n : -1;
}

int etacong_statement_exponent(etacong_statement st)
{
    return st ? st->value.exponent : -1;
}

int etacong_statement_trivial(etacong_statement st)
{
    return st && st->value.trivial() ? 1 : 0;
}

etacong_status etacong_statement_render(etacong_statement st, etacong_format format, char **out)
{
    return guarded([&] {
        require_out(out);
        require_out(st);
        *out = copy_string(render(st->value, to_format(format)));
    });
}

etacong_status etacong_table_render(const char *which, etacong_format format, char **out, int *all_match)
{
    return guarded([&] {
        require_out(out);
        require_out(which);
        bool match = true;
        *out = copy_string(render_table(which, to_format(format), match));
        if (all_match)
            *all_match = match ? 1 : 0;
    });
}

etacong_status etacong_verify(int64_t c, int64_t d, int64_t r, int64_t terms, int K, etacong_report *out)
{
    return guarded([&] {
        require_out(out);
        *out = new etacong_report_s{verify_theorem(c, d, r, terms, K)};
    });
}

etacong_status etacong_verify_progression(int64_t c, int64_t d, int64_t r, int64_t n, int exponent,
                                          int64_t terms, int K, etacong_report *out)
{
    return guarded([&] {
        require_out(out);
        if (exponent < 0)
            throw ConfigError("exponent must be nonnegative");
        if (K == 0)
            K = exponent + 6;
        if (K <= exponent)
            throw ConfigError("modulus exponent K must exceed the claimed exponent");
        const CongruenceStatement st{c, d, r, n, exponent};
        auto report = verify_progression(st, terms, Mod11PowerRing(K));
        report.modulus_exponent = K;
        *out = new etacong_report_s{std::move(report)};
    });
}

void etacong_report_free(etacong_report report)
{
    delete report;
}

int etacong_report_pass(etacong_report report)
{
    return report && report->value.pass ? 1 : 0;
}

int etacong_report_trivial(etacong_report report)
{
    return report && report->value.trivial() ? 1 : 0;
}

int etacong_report_min_valuation(etacong_report report, int *lower_bound)
{
    if (!report)
        return -1;
    const auto &v = report->value.min_valuation;
    if (lower_bound)
        *lower_bound = v.lower_bound ? 1 : 0;
    return v.is_infinite() ? -1 : v.value;
}

etacong_status etacong_report_render(etacong_report report, etacong_format format, char **out)
{
    return guarded([&] {
        require_out(out);
        require_out(report);
        *out = copy_string(render(report->value, to_format(format)));
    });
}

etacong_status etacong_scan_run(int64_t c_lo, int64_t c_hi, int64_t d_lo, int64_t d_hi, int64_t r_lo, int64_t r_hi,
                                int64_t terms, int extra_digits, unsigned jobs, etacong_scan *out)
{
    return guarded([&] {
        require_out(out);
        ScanConfig cfg;
        cfg.c = {c_lo, c_hi};
        cfg.d = {d_lo, d_hi};
        cfg.r = {r_lo, r_hi};
        cfg.terms = terms;
        cfg.extra_digits = extra_digits;
        cfg.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
        *out = new etacong_scan_s{run_scan(cfg)};
    });
}

void etacong_scan_free(etacong_scan scan)
{
    delete scan;
}

size_t etacong_scan_size(etacong_scan scan)
{
    return scan ? scan->rows.size() : 0;
}

void etacong_scan_counts(etacong_scan scan, int *passed, int *failed, int *trivial, int *errors)
{
    const auto s = scan ? summarize(scan->rows) : ScanSummary{};
    if (passed)
        *passed = s.passed;
    if (failed)
        *failed = s.failed;
    if (trivial)
        *trivial = s.trivial;
    if (errors)
        *errors = s.errors;
}

etacong_status etacong_scan_render(etacong_scan scan, etacong_format format, char **out)
{
    return guarded([&] {
        require_out(out);
        require_out(scan);
        *out = copy_string(render_scan(scan->rows, to_format(format)));
    });
}

etacong_status etacong_oracle_create(int64_t c, int64_t d, int64_t ell, int64_t count, etacong_sequence *out)
{
    return guarded([&] {
        require_out(out);
        auto seq = naive_coeffs(c, d, ell, count);
        std::vector<std::string> text;
        text.reserve(seq.values.size());
        for (const auto &v : seq.values)
            text.push_back(v.str());
        *out = new etacong_sequence_s{std::move(seq), std::move(text)};
    });
}

void etacong_sequence_free(etacong_sequence seq)
{
    delete seq;
}

size_t etacong_sequence_length(etacong_sequence seq)
{
    return seq ? seq->text.size() : 0;
}

const char *etacong_sequence_value(etacong_sequence seq, size_t n)
{
    if (!seq || n >= seq->text.size())
        return nullptr;
    return seq->text[n].c_str();
}

etacong_status etacong_sequence_render(etacong_sequence seq, etacong_format format, char **out)
{
    return guarded([&] {
        require_out(out);
        require_out(seq);
        *out = copy_string(render_oracle(seq->value, to_format(format)));
    });
}

etacong_status etacong_up_identity_selftest(int trials, uint64_t seed, int *passed)
{
    return guarded([&] {
        require_out(passed);
        *passed = up_identity_selftest(trials, seed) ? 1 : 0;
    });
}

etacong_status etacong_selftest(uint64_t seed, int trials, etacong_format format, char **out, int *passed)
{
    return guarded([&] {
        require_out(out);
        const auto result = run_selftest(seed, trials);
        *out = copy_string(render_selftest(result, to_format(format)));
        if (passed)
            *passed = result.passed() ? 1 : 0;
    });
}

} // extern "C"
