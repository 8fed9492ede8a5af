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

#include "etacong/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace etacong {

namespace {

std::string dump(const Json &j)
{
    return j.dump(2) + "\n";
}

Json valuation_json(const Valuation &v)
{
    if (v.is_infinite())
        return nullptr;
    return v.value;
}

std::string format_ms(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

Json envelope(const char *kind)
{
    Json j;
    j["schema"] = kReportSchemaVersion;
    j["kind"] = kind;
    return j;
}

} // namespace

Json to_json(const CongruenceStatement &st)
{
    Json j;
    j["c"] = st.c;
    j["d"] = st.d;
    j["r"] = st.r;
    j["step"] = st.step();
    j["n"] = st.n;
    j["exponent"] = st.exponent;
    j["trivial"] = st.trivial();
    j["text"] = st.to_string();
    return j;
}

Json to_json(const VerificationReport &report)
{
    Json j;
    j["statement"] = to_json(report.statement);
    j["checked_m_range"] = Json::array({0, report.terms});
    j["ring"] = report.ring;
    j["modulus_exponent"] = report.modulus_exponent;
    j["min_valuation"] = valuation_json(report.min_valuation);
    j["min_valuation_is_lower_bound"] = report.min_valuation.lower_bound;
    if (auto e = report.exceeds_by())
        j["exceeds_exponent_by"] = *e;
    else
        j["exceeds_exponent_by"] = nullptr;
    j["pass"] = report.pass;
    j["trivial"] = report.trivial();
    if (report.first_failure_m)
        j["first_failure_m"] = *report.first_failure_m;
    else
        j["first_failure_m"] = nullptr;
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

std::string csv_header()
{
    return "c,d,r,n,A,M,K,min_valuation,pass,trivial,elapsed_ms\n";
}

std::string csv_row(const VerificationReport &report)
{
    const auto &st = report.statement;
    std::ostringstream os;
    os << st.c << ',' << st.d << ',' << st.r << ',' << st.n << ',' << st.exponent << ',' << report.terms << ','
       << report.modulus_exponent << ',' << to_string(report.min_valuation) << ','
       << (report.pass ? "true" : "false") << ',' << (report.trivial() ? "true" : "false") << ','
       << format_ms(report.elapsed_ms) << '\n';
    return os.str();
}

std::string render(const CongruenceStatement &st, Format format)
{
    switch (format) {
    case Format::json: {
        auto j = envelope("statement");
        j["statement"] = to_json(st);
        return dump(j);
    }
    case Format::csv:
        return "c,d,r,n,A,trivial\n" + std::to_string(st.c) + ',' + std::to_string(st.d) + ',' +
               std::to_string(st.r) + ',' + std::to_string(st.n) + ',' + std::to_string(st.exponent) + ',' +
               (st.trivial() ? "true" : "false") + '\n';
    case Format::text:
        break;
    }
    return st.to_string() + "\n";
}

namespace {

std::string text_line(const VerificationReport &report)
{
    std::ostringstream os;
    os << (report.pass ? "PASS " : "FAIL ") << report.statement.to_string() << "  m in [0, " << report.terms
       << "], " << report.ring << ", min valuation " << to_string(report.min_valuation);
    if (auto e = report.exceeds_by(); e && *e > 0)
        os << " (exceeds A_r by " << *e << ")";
    if (report.first_failure_m)
        os << ", first failure at m = " << *report.first_failure_m;
    os << ", " << format_ms(report.elapsed_ms) << " ms";
    return os.str();
}

} // namespace

std::string render(const VerificationReport &report, Format format)
{
    switch (format) {
    case Format::json: {
        auto j = envelope("verification");
        j["report"] = to_json(report);
        return dump(j);
    }
    case Format::csv:
        return csv_header() + csv_row(report);
    case Format::text:
        break;
    }
    return text_line(report) + "\n";
}

std::string render_scan(const std::vector<ScanRow> &rows, Format format)
{
    const auto summary = summarize(rows);
    switch (format) {
    case Format::json: {
        auto j = envelope("scan");
        j["rows"] = Json::array();
        for (const auto &row : rows) {
            Json r = to_json(row.report);
            r["error"] = row.error.empty() ? Json(nullptr) : Json(row.error);
            j["rows"].push_back(std::move(r));
        }
        j["summary"] = {{"rows", rows.size()},
                        {"passed", summary.passed},
                        {"failed", summary.failed},
                        {"trivial", summary.trivial},
                        {"errors", summary.errors}};
        return dump(j);
    }
    case Format::csv: {
        std::string out = csv_header();
        for (const auto &row : rows)
            out += csv_row(row.report);
        return out;
    }
    case Format::text:
        break;
    }
    std::string out;
    for (const auto &row : rows) {
        if (row.error.empty())
            out += text_line(row.report) + "\n";
        else
            out += "ERROR (c, d, r) = (" + std::to_string(row.report.statement.c) + ", " +
                   std::to_string(row.report.statement.d) + ", " + std::to_string(row.report.statement.r) +
                   "): " + row.error + "\n";
    }
    out += "summary: " + std::to_string(rows.size()) + " rows, " + std::to_string(summary.passed) + " pass, " +
           std::to_string(summary.failed) + " fail, " + std::to_string(summary.trivial) + " trivial, " +
           std::to_string(summary.errors) + " errors\n";
    return out;
}

std::string render_oracle(const OracleSequence &seq, Format format)
{
    switch (format) {
    case Format::json: {
        auto j = envelope("oracle");
        j["c"] = seq.c;
        j["d"] = seq.d;
        j["ell"] = seq.ell;
        j["values"] = Json::array();
        for (std::size_t n = 0; n < seq.values.size(); ++n)
            j["values"].push_back({{"n", n},
                                   {"value", seq.values[n].str()},
                                   {"valuation_11", valuation_json(valuation_11(seq.values[n]))}});
        return dump(j);
    }
    case Format::csv: {
        std::string out = "n,value,valuation_11\n";
        for (std::size_t n = 0; n < seq.values.size(); ++n)
            out += std::to_string(n) + ',' + seq.values[n].str() + ',' + to_string(valuation_11(seq.values[n])) +
                   '\n';
        return out;
    }
    case Format::text:
        break;
    }
    std::string out;
    for (std::size_t n = 0; n < seq.values.size(); ++n)
        out += std::to_string(n) + "  " + seq.values[n].str() + "  v11=" + to_string(valuation_11(seq.values[n])) +
               '\n';
    return out;
}

std::string render_alpha_report(const AlphaTableReport &report, Format format)
{
    switch (format) {
    case Format::json: {
        auto j = envelope("alpha-table");
        j["cells_checked"] = report.cells_checked;
        j["all_match"] = report.all_match();
        j["computed"] = report.computed;
        j["computed_negative_last_column"] = report.computed_negative_last_column;
        j["mismatches"] = Json::array();
        for (const auto &m : report.mismatches)
            j["mismatches"].push_back({{"row", m.row_label},
                                       {"column", m.column},
                                       {"c_plus_11d", m.c_plus_11d},
                                       {"negative_regime", m.negative_regime},
                                       {"embedded", m.embedded},
                                       {"computed", m.computed}});
        return dump(j);
    }
    case Format::csv: {
        std::string out = "row,column,c_plus_11d,negative_regime,embedded,computed,match\n";
        for (int i = 0; i < 5; ++i) {
            for (int jcol = 1; jcol <= 24; ++jcol) {
                const int e = kAlphaTable[i][jcol - 1], c = report.computed[i][jcol - 1];
                out += std::to_string(24 * i) + ',' + std::to_string(jcol) + ',' + std::to_string(24 * i + jcol) +
                       ",false," + std::to_string(e) + ',' + std::to_string(c) + ',' + (e == c ? "true" : "false") +
                       '\n';
            }
        }
        for (int i = 0; i < 5; ++i) {
            const int e = kAlphaNegativeLastColumn[i], c = report.computed_negative_last_column[i];
            const int v = 24 * i + 24 - 120 >= 0 ? 24 * i + 24 - 240 : 24 * i + 24 - 120;
            out += std::to_string(24 * i) + ",24," + std::to_string(v) + ",true," + std::to_string(e) + ',' +
                   std::to_string(c) + ',' + (e == c ? "true" : "false") + '\n';
        }
        return out;
    }
    case Format::text:
        break;
    }
    std::string out = "embedded:\n" + render_alpha_table(kAlphaTable, kAlphaNegativeLastColumn);
    out += "regenerated:\n" + render_alpha_table(report.computed, report.computed_negative_last_column);
    for (const auto &m : report.mismatches)
        out += "MISMATCH row " + std::to_string(m.row_label) + " column " + std::to_string(m.column) +
               " (c + 11d = " + std::to_string(m.c_plus_11d) + "): embedded " + std::to_string(m.embedded) +
               ", computed " + std::to_string(m.computed) + "\n";
    out += std::to_string(report.cells_checked - static_cast<int>(report.mismatches.size())) + "/" +
           std::to_string(report.cells_checked) + " cells match\n";
    return out;
}

std::string render_selftest(const SelftestResult &result, Format format)
{
    if (format == Format::json) {
        auto j = envelope("selftest");
        j["passed"] = result.passed();
        j["checks"] = Json::array();
        for (const auto &c : result.checks)
            j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        return dump(j);
    }
    std::string out = format == Format::csv ? "name,passed,detail\n" : "";
    for (const auto &c : result.checks) {
        if (format == Format::csv)
            out += c.name + ',' + (c.passed ? "true" : "false") + ",\"" + c.detail + "\"\n";
        else
            out += std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
    }
    return out;
}

std::string render_table(const std::string &which, Format format, bool &all_match)
{
    all_match = true;
    if (which == "alpha") {
        const auto report = alpha_table_regenerate();
        all_match = report.all_match();
        return render_alpha_report(report, format);
    }
    if (which != "theta" && which != "delta")
        throw std::invalid_argument("unknown table '" + which + "' (expected theta, delta or alpha)");

    if (format == Format::json) {
        auto j = envelope("table");
        j["table"] = which;
        if (which == "theta")
            j["rows"] = kThetaTable;
        else
            j["rows"] = kDeltaTable;
        return dump(j);
    }
    if (format == Format::csv) {
        std::string out;
        auto emit = [&](const auto &grid) {
            for (const auto &row : grid) {
                for (std::size_t k = 0; k < row.size(); ++k)
                    out += (k ? "," : "") + std::to_string(row[k]);
                out += '\n';
            }
        };
        if (which == "theta")
            emit(kThetaTable);
        else
            emit(kDeltaTable);
        return out;
    }
    return which == "theta" ? render_theta_table() : render_delta_table();
}

} // namespace etacong
