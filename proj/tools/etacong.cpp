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

// Command-line front end over the etacong C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "etacong/etacong.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct Options {
    std::int64_t c = 0;
    std::int64_t d = 0;
    std::int64_t r = 1;
    std::int64_t terms = 30;
    int K = 0;
    std::int64_t ell = 11;
    std::int64_t c_min = 0, c_max = -1, d_min = 0, d_max = -1, r_min = 1, r_max = 1;
    int extra_digits = 6;
    std::optional<unsigned> jobs;
    std::string which = "theta";
    std::string format = "text";
    std::string output;
    std::uint64_t seed = 20190602;
    int trials = 100;
};

etacong_format parse_format(const std::string &f)
{
    static const std::map<std::string, etacong_format> formats{
        {"text", ETACONG_FORMAT_TEXT}, {"json", ETACONG_FORMAT_JSON}, {"csv", ETACONG_FORMAT_CSV}};
    return formats.at(f);
}

unsigned resolve_jobs(const Options &o)
{
    if (o.jobs)
        return *o.jobs;
    if (const char *env = std::getenv("ETACONG_JOBS")) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception &) {
            std::cerr << "ignoring malformed ETACONG_JOBS=" << env << '\n';
        }
    }
    return 0;
}

int status_exit(etacong_status st)
{
    std::cerr << "error: " << etacong_status_string(st) << ": " << etacong_last_error() << '\n';
    return (st == ETACONG_ERR_INVALID_ARGUMENT || st == ETACONG_ERR_CONFIG || st == ETACONG_ERR_DOMAIN)
               ? kExitUsage
               : kExitRuntime;
}

int emit(const Options &o, char *text)
{
    std::unique_ptr<char, decltype(&etacong_string_free)> owned(text, &etacong_string_free);
    if (o.output.empty()) {
        std::cout << owned.get();
        return kExitPass;
    }
    std::ofstream out(o.output);
    if (!out) {
        std::cerr << "error: cannot open " << o.output << " for writing\n";
        return kExitRuntime;
    }
    out << owned.get();
    return kExitPass;
}

int run_statement(const Options &o)
{
    etacong_statement st = nullptr;
    if (auto s = etacong_statement_create(o.c, o.d, o.r, &st); s != ETACONG_OK)
        return status_exit(s);
    std::unique_ptr<etacong_statement_s, decltype(&etacong_statement_free)> owned(st, &etacong_statement_free);
    char *text = nullptr;
    if (auto s = etacong_statement_render(st, parse_format(o.format), &text); s != ETACONG_OK)
        return status_exit(s);
    return emit(o, text);
}

int run_verify(const Options &o)
{
    etacong_report report = nullptr;
    if (auto s = etacong_verify(o.c, o.d, o.r, o.terms, o.K, &report); s != ETACONG_OK)
        return status_exit(s);
    std::unique_ptr<etacong_report_s, decltype(&etacong_report_free)> owned(report, &etacong_report_free);
    char *text = nullptr;
    if (auto s = etacong_report_render(report, parse_format(o.format), &text); s != ETACONG_OK)
        return status_exit(s);
    if (int rc = emit(o, text); rc != kExitPass)
        return rc;
    return etacong_report_pass(report) ? kExitPass : kExitFail;
}

int run_scan(const Options &o)
{
    if (o.c_max < o.c_min || o.d_max < o.d_min || o.r_max < o.r_min) {
        std::cerr << "error: scan ranges must be nonempty (min <= max)\n";
        return kExitUsage;
    }
    etacong_scan scan = nullptr;
    if (auto s = etacong_scan_run(o.c_min, o.c_max, o.d_min, o.d_max, o.r_min, o.r_max, o.terms, o.extra_digits,
                                  resolve_jobs(o), &scan);
        s != ETACONG_OK)
        return status_exit(s);
    std::unique_ptr<etacong_scan_s, decltype(&etacong_scan_free)> owned(scan, &etacong_scan_free);
    char *text = nullptr;
    if (auto s = etacong_scan_render(scan, parse_format(o.format), &text); s != ETACONG_OK)
        return status_exit(s);
    if (int rc = emit(o, text); rc != kExitPass)
        return rc;
    int passed = 0, failed = 0, trivial = 0, errors = 0;
    etacong_scan_counts(scan, &passed, &failed, &trivial, &errors);
    return (failed == 0 && errors == 0) ? kExitPass : kExitFail;
}

int run_tables(const Options &o)
{
    char *text = nullptr;
    int all_match = 1;
    if (auto s = etacong_table_render(o.which.c_str(), parse_format(o.format), &text, &all_match); s != ETACONG_OK)
        return status_exit(s);
    if (int rc = emit(o, text); rc != kExitPass)
        return rc;
    return all_match ? kExitPass : kExitFail;
}

int run_alpha(const Options &o, bool have_pair)
{
    if (!have_pair) {
        Options t = o;
        t.which = "alpha";
        return run_tables(t);
    }
    int value = 0;
    if (auto s = etacong_alpha(o.c, o.d, &value); s != ETACONG_OK)
        return status_exit(s);
    const std::int64_t k = o.c + 11 * o.d;
    std::string text;
    if (o.format == "json")
        text = "{\n  \"schema\": 1,\n  \"kind\": \"alpha\",\n  \"c\": " + std::to_string(o.c) +
               ",\n  \"d\": " + std::to_string(o.d) + ",\n  \"c_plus_11d\": " + std::to_string(k) +
               ",\n  \"alpha\": " + std::to_string(value) + "\n}\n";
    else if (o.format == "csv")
        text = "c,d,c_plus_11d,alpha\n" + std::to_string(o.c) + ',' + std::to_string(o.d) + ',' + std::to_string(k) +
               ',' + std::to_string(value) + '\n';
    else
        text = "alpha(" + std::to_string(o.c) + ", " + std::to_string(o.d) + ") = " + std::to_string(value) +
               "  (c + 11d = " + std::to_string(k) + ")\n";
    char *owned = static_cast<char *>(std::malloc(text.size() + 1));
    std::copy(text.c_str(), text.c_str() + text.size() + 1, owned);
    return emit(o, owned);
}

int run_oracle(const Options &o)
{
    etacong_sequence seq = nullptr;
    if (auto s = etacong_oracle_create(o.c, o.d, o.ell, o.terms, &seq); s != ETACONG_OK)
        return status_exit(s);
    std::unique_ptr<etacong_sequence_s, decltype(&etacong_sequence_free)> owned(seq, &etacong_sequence_free);
    char *text = nullptr;
    if (auto s = etacong_sequence_render(seq, parse_format(o.format), &text); s != ETACONG_OK)
        return status_exit(s);
    return emit(o, text);
}

int run_selftest(const Options &o)
{
    char *text = nullptr;
    int passed = 0;
    if (auto s = etacong_selftest(o.seed, o.trials, parse_format(o.format), &text, &passed); s != ETACONG_OK)
        return status_exit(s);
    if (int rc = emit(o, text); rc != kExitPass)
        return rc;
    return passed ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Congruences modulo powers of 11 for p_[1^c 11^d](n)", "etacong"};
    app.require_subcommand(1);
    Options o;

    const auto formats = CLI::IsMember({"text", "json", "csv"});
    auto common = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "Output format")->check(formats);
        sub->add_option("--output,-o", o.output, "Write output to this file instead of stdout");
    };
    auto pair = [&](CLI::App *sub, bool required) {
        auto *c = sub->add_option("--c", o.c, "Exponent c of (1 - q^n)^(-c)");
        auto *d = sub->add_option("--d", o.d, "Exponent d of (1 - q^(11n))^(-d)");
        if (required) {
            c->required();
            d->required();
        }
    };

    auto *statement = app.add_subcommand("statement", "Print the congruence for (c, d, r)");
    pair(statement, true);
    statement->add_option("--r", o.r, "Level r >= 1")->required();
    common(statement);

    auto *verify = app.add_subcommand("verify", "Check the congruence on m = 0..terms");
    pair(verify, true);
    verify->add_option("--r", o.r, "Level r >= 1")->required();
    verify->add_option("--terms,-M", o.terms, "Largest m to check (M >= 1)");
    verify->add_option("--K", o.K, "Work modulo 11^K (default A_r + 6)");
    common(verify);

    auto *scan = app.add_subcommand("scan", "Verify every (c, d, r) in a grid");
    scan->add_option("--c-min", o.c_min)->required();
    scan->add_option("--c-max", o.c_max)->required();
    scan->add_option("--d-min", o.d_min)->required();
    scan->add_option("--d-max", o.d_max)->required();
    scan->add_option("--r-min", o.r_min);
    scan->add_option("--r-max", o.r_max);
    scan->add_option("--terms,-M", o.terms, "Largest m to check per row");
    scan->add_option("--extra-digits", o.extra_digits, "K = A_r + extra digits");
    scan->add_option("--jobs,-j", o.jobs, "Parallel rows (default: ETACONG_JOBS or all cores)");
    common(scan);

    auto *tables = app.add_subcommand("tables", "Print the theta/delta tables or diff the alpha table");
    tables->add_option("--which", o.which)->check(CLI::IsMember({"theta", "delta", "alpha"}));
    common(tables);

    auto *alpha = app.add_subcommand("alpha", "alpha(c, d), or the alpha table diff without --c/--d");
    pair(alpha, false);
    common(alpha);

    auto *oracle = app.add_subcommand("oracle", "List p_[1^c ell^d](n) for n < terms");
    pair(oracle, true);
    oracle->add_option("--terms,-N", o.terms, "Number of coefficients")->required();
    oracle->add_option("--ell", o.ell, "Second scale (default 11)");
    common(oracle);

    auto *selftest = app.add_subcommand("selftest", "Identity, recurrence and oracle-equivalence suites");
    selftest->add_option("--seed", o.seed, "Seed for randomized checks");
    selftest->add_option("--trials", o.trials, "Random trials for the U_11 identity");
    common(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    if (statement->parsed())
        return run_statement(o);
    if (verify->parsed())
        return run_verify(o);
    if (scan->parsed())
        return run_scan(o);
    if (tables->parsed())
        return run_tables(o);
    if (alpha->parsed())
        return run_alpha(o, alpha->count("--c") > 0 && alpha->count("--d") > 0);
    if (oracle->parsed())
        return run_oracle(o);
    if (selftest->parsed())
        return run_selftest(o);
    return kExitUsage;
}
