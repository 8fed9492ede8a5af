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

#include <string>
#include <vector>

#include <json.hpp>

#include "etacong/congruence.hpp"
#include "etacong/oracle.hpp"
#include "etacong/selftest.hpp"
#include "etacong/verifier.hpp"

namespace etacong {

enum class Format { text, json, csv };

inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json to_json(const CongruenceStatement &st);
Json to_json(const VerificationReport &report);

/// c,d,r,n,A,M,K,min_valuation,pass,trivial,elapsed_ms
std::string csv_header();
std::string csv_row(const VerificationReport &report);

std::string render(const CongruenceStatement &st, Format format);
std::string render(const VerificationReport &report, Format format);
std::string render_scan(const std::vector<ScanRow> &rows, Format format);
std::string render_oracle(const OracleSequence &seq, Format format);
std::string render_alpha_report(const AlphaTableReport &report, Format format);
std::string render_selftest(const SelftestResult &result, Format format);

/// "theta", "delta" or "alpha"; alpha includes the regeneration diff.
std::string render_table(const std::string &which, Format format, bool &all_match);

} // namespace etacong
