/*
   Copyright 2026 The tdlab Authors

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

#ifndef TDLAB_IO_HPP
#define TDLAB_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tdlab/harness.hpp"
#include "tdlab/model.hpp"

namespace tdlab {

constexpr const char* kToolVersion = "0.3.0";

// Exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exit code 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunParams {
    std::uint64_t x = 100000;
    unsigned k_max = 3;
    unsigned samples = 50;
    std::uint64_t seed = 0;
    std::uint64_t budget = 10000;
};

struct ParsedConfig {
    ModelConfig model;
    RunParams run;
};

/**
 * Schema: {"kind": "iid-diag" | "dyson", "diag": [[value, num, den], ...], "offdiag": [...],
 * "a": int, "n": int, "x": int, "k_max": int, "samples": int, "seed": int, "budget": int}.
 * Only kind and n are required; unknown keys are rejected. Errors carry a field path like $.diag[1][2].
 */
ParsedConfig parse_config(const std::string& text);

// Canonical form: every field spelled out, keys sorted, no whitespace.
nlohmann::json config_json(const ParsedConfig& cfg);
std::string canonical_config(const ParsedConfig& cfg);
std::string sha256_hex(const std::string& data);

struct RunManifest {
    std::string config_path;
    std::string subcommand;
    std::uint64_t master_seed = 0;
    unsigned threads = 1;
    std::string output_dir;
    std::string tool_version = kToolVersion;
    std::string config_digest;
};

// Full manifest, or only the fields that do not depend on the machine (no threads, no output dir).
nlohmann::json manifest_json(const RunManifest& m, bool environment = true);

// %.17g
std::string format_double(double v);

void emit_records(std::ostream& os, const std::vector<ChebotarevRecord>& records);
std::string records_csv(const std::vector<ChebotarevRecord>& records);
// Inverse of emit_records. Throws IoError on malformed input.
std::vector<ChebotarevRecord> parse_records(std::istream& is);

nlohmann::json population_summary(const PopulationReport& rep, const ParsedConfig& cfg, const RunManifest& m);
nlohmann::json chebotarev_summary(const ChebotarevResult& res, const ChebotarevOptions& opt, const RunManifest& m);

// Dump with a trailing newline.
std::string dump(const nlohmann::json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tdlab

#endif  // TDLAB_IO_HPP
