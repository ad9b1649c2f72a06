/*
   Copyright 2026 The fsig authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FSIG_REPORT_HPP
#define FSIG_REPORT_HPP

#include "fsig/instance.hpp"
#include "fsig/signature.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace fsig {

using Json = nlohmann::ordered_json;

/// Effective run configuration: instance task parameters overlaid with
/// explicitly passed command-line flags (flags win).
struct RunOptions {
    SignatureOptions signature;
    std::optional<unsigned> e_max_flag;
    std::optional<std::string> order_flag;
    std::optional<int> dim_flag;
    std::optional<std::uint64_t> budget_flag;
    std::optional<bool> rank1_flag;
    bool emit_gb = false;
    bool include_timestamp = true;
    std::string instance_label = "instance";
};

struct RunOutput {
    Json json;
    std::string table;
    std::vector<std::vector<std::string>> csv_rows;  // without header
    bool verify_failed = false;  // verify/oracle-diff found a violation
};

/// Execute the instance's task and assemble every output form.
/// Validation and budget problems propagate as exceptions; the CLI maps
/// them to exit codes.
RunOutput run_instance(const InstanceFile& file, const RunOptions& options);

std::string csv_header();
std::string csv_line(const std::vector<std::string>& row);

/// JSON rendering with the volatile timestamp removed, for
/// byte-identical comparisons.
std::string json_without_timestamp(const Json& j);

}  // namespace fsig

#endif
