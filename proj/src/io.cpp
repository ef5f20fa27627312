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

#include "tdlab/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace tdlab {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) { throw ConfigError(path + ": " + what); }

std::int64_t get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) bad(path, "out of range");
    return j.get<std::int64_t>();
}

std::uint64_t get_uint(const json& j, const std::string& path, std::uint64_t lo, std::uint64_t hi) {
    if (!j.is_number_integer()) bad(path, "expected an integer");
    if (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0) bad(path, "must be non-negative");
    const auto v = j.get<std::uint64_t>();
    if (v < lo || v > hi) bad(path, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
}

std::vector<Atom> get_table(const json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array of [value, num, den]");
    std::vector<Atom> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = path + "[" + std::to_string(i) + "]";
        const json& e = j[i];
        if (!e.is_array() || e.size() != 3) bad(at, "expected [value, num, den]");
        const std::int64_t v = get_int(e[0], at + "[0]");
        const std::int64_t num = get_int(e[1], at + "[1]");
        const std::int64_t den = get_int(e[2], at + "[2]");
        if (num <= 0) bad(at + "[1]", "weight numerator must be positive");
        if (den <= 0) bad(at + "[2]", "weight denominator must be positive");
        mpq_class w(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
        w.canonicalize();
        out.push_back({v, w});
    }
    return out;
}

json table_json(const std::vector<Atom>& t) {
    json a = json::array();
    for (const auto& atom : t)
        a.push_back({atom.value, std::stoll(atom.weight.get_num().get_str()), std::stoll(atom.weight.get_den().get_str())});
    return a;
}

std::string join_degrees(std::vector<unsigned> d) {
    std::sort(d.begin(), d.end());
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(d[i]);
    }
    return s;
}

template <class T>
T parse_num(const std::string& s, std::size_t line) {
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw IoError("records line " + std::to_string(line) + ": bad number '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

constexpr const char* kHeader = "p,log_p,r_all,r_nonzero,factor_degrees,squarefree";

}  // namespace

ParsedConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        bad("$", std::string("not valid JSON (") + e.what() + ")");
    }
    if (!j.is_object()) bad("$", "expected an object");
    static const std::set<std::string> known{"kind", "diag", "offdiag", "a", "n", "x", "k_max", "samples", "seed", "budget"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) bad("$." + key, "unknown field");

    ParsedConfig cfg;
    if (!j.contains("kind")) bad("$.kind", "missing");
    if (!j["kind"].is_string()) bad("$.kind", "expected a string");
    const std::string kind = j["kind"];
    if (kind == "iid-diag")
        cfg.model.kind = ModelKind::iid_diag;
    else if (kind == "dyson")
        cfg.model.kind = ModelKind::dyson;
    else
        bad("$.kind", "must be \"iid-diag\" or \"dyson\"");

    if (!j.contains("n")) bad("$.n", "missing");
    cfg.model.n = static_cast<unsigned>(get_uint(j["n"], "$.n", 1, 4096));
    if (j.contains("diag")) cfg.model.diag = get_table(j["diag"], "$.diag");
    if (j.contains("offdiag")) cfg.model.offdiag = get_table(j["offdiag"], "$.offdiag");
    if (j.contains("a")) {
        if (cfg.model.kind != ModelKind::dyson) bad("$.a", "only used by dyson");
        cfg.model.shift = get_int(j["a"], "$.a");
    }
    if (j.contains("x")) cfg.run.x = get_uint(j["x"], "$.x", 0, std::uint64_t{1} << 40);
    if (j.contains("k_max")) cfg.run.k_max = static_cast<unsigned>(get_uint(j["k_max"], "$.k_max", 1, 8));
    if (j.contains("samples")) cfg.run.samples = static_cast<unsigned>(get_uint(j["samples"], "$.samples", 1, 1000000));
    if (j.contains("seed")) cfg.run.seed = get_uint(j["seed"], "$.seed", 0, UINT64_MAX);
    if (j.contains("budget")) cfg.run.budget = get_uint(j["budget"], "$.budget", 1, 10000000);
    if (cfg.run.x != 0 && cfg.run.x < 10) bad("$.x", "must be 0 or at least 10");

    try {
        cfg.model.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("$.") + e.what());
    }
    return cfg;
}

json config_json(const ParsedConfig& cfg) {
    json j;
    j["kind"] = to_string(cfg.model.kind);
    j["n"] = cfg.model.n;
    if (cfg.model.kind == ModelKind::iid_diag) {
        j["diag"] = table_json(cfg.model.diag);
    } else {
        j["offdiag"] = table_json(cfg.model.offdiag);
        j["a"] = cfg.model.shift;
    }
    j["x"] = cfg.run.x;
    j["k_max"] = cfg.run.k_max;
    j["samples"] = cfg.run.samples;
    j["seed"] = cfg.run.seed;
    j["budget"] = cfg.run.budget;
    return j;
}

std::string canonical_config(const ParsedConfig& cfg) { return config_json(cfg).dump(); }

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256: digest failed");
    static const char* hex = "0123456789abcdef";
    std::string s;
    for (unsigned i = 0; i < len; ++i) {
        s += hex[md[i] >> 4];
        s += hex[md[i] & 15];
    }
    return s;
}

json manifest_json(const RunManifest& m, bool environment) {
    json j;
    j["config_path"] = m.config_path;
    j["subcommand"] = m.subcommand;
    j["master_seed"] = m.master_seed;
    j["tool_version"] = m.tool_version;
    j["config_digest"] = m.config_digest;
    if (environment) {
        j["threads"] = m.threads;
        j["output_dir"] = m.output_dir;
    }
    return j;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit_records(std::ostream& os, const std::vector<ChebotarevRecord>& records) {
    os << kHeader << '\n';
    for (const auto& r : records)
        os << r.p << ',' << format_double(r.log_p) << ',' << r.r_all << ',' << r.r_nonzero << ','
           << join_degrees(r.degrees) << ',' << (r.squarefree ? "true" : "false") << '\n';
}

std::string records_csv(const std::vector<ChebotarevRecord>& records) {
    std::ostringstream os;
    emit_records(os, records);
    return os.str();
}

std::vector<ChebotarevRecord> parse_records(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kHeader) throw IoError("records: missing or wrong header");
    std::vector<ChebotarevRecord> out;
    std::size_t no = 1;
    while (std::getline(is, line)) {
        ++no;
        const auto f = split(line, ',');
        if (f.size() != 6) throw IoError("records line " + std::to_string(no) + ": expected 6 fields");
        ChebotarevRecord r;
        r.p = parse_num<std::uint64_t>(f[0], no);
        char* end = nullptr;
        r.log_p = std::strtod(f[1].c_str(), &end);
        if (f[1].empty() || *end != '\0') throw IoError("records line " + std::to_string(no) + ": bad log_p");
        r.r_all = parse_num<unsigned>(f[2], no);
        r.r_nonzero = parse_num<unsigned>(f[3], no);
        if (!f[4].empty())
            for (const auto& d : split(f[4], ';')) r.degrees.push_back(parse_num<unsigned>(d, no));
        if (f[5] != "true" && f[5] != "false") throw IoError("records line " + std::to_string(no) + ": bad squarefree flag");
        r.squarefree = f[5] == "true";
        out.push_back(std::move(r));
    }
    return out;
}

json population_summary(const PopulationReport& rep, const ParsedConfig& cfg, const RunManifest& m) {
    json j;
    j["manifest"] = manifest_json(m, false);
    j["config"] = config_json(cfg);
    j["certify"] = rep.options.certify;
    j["targets"] = rep.targets;
    j["frac_within_half"] = rep.frac_within_half;
    j["frac_reducibility_evidence"] = rep.frac_reducibility_evidence;
    j["frac_perfect_power"] = rep.frac_perfect_power;
    j["frac_irreducible_evidence"] = rep.frac_irreducible_evidence;
    j["frac_zero_root_removed"] = rep.frac_zero_root_removed;
    j["all_r_nonzero_even"] = rep.all_r_nonzero_even;
    j["all_height_bound_ok"] = rep.all_height_bound_ok;
    j["verdicts"] = rep.verdicts;
    json samples = json::array();
    for (const auto& s : rep.samples) {
        json e;
        e["index"] = s.index;
        e["degree"] = s.degree;
        e["height"] = s.height.get_str();
        e["height_bound_ok"] = s.height_bound_ok;
        e["zero_root_removed"] = s.zero_root_removed;
        e["perfect_power"] = s.perfect_power;
        e["irreducible_evidence"] = s.irreducible_evidence;
        e["r_nonzero_even"] = s.r_nonzero_even;
        if (rep.options.certify) {
            e["verdict"] = to_string(s.cert.verdict);
            e["jordan_prime"] = s.cert.jordan_prime;
            e["jordan_q"] = s.cert.jordan_q;
            e["disc_square"] = s.cert.disc_square ? json(*s.cert.disc_square) : json(nullptr);
            e["reducible_reason"] = s.cert.reducible_reason;
        }
        e["irreducible_prime"] = s.cert.irreducible_prime;
        e["primes_tried"] = s.cert.primes_tried;
        e["a"] = s.a;
        e["se"] = s.se;
        if (!s.a.empty() && s.height > 0) {
            json bv = json::array();
            for (unsigned k = 1; k <= s.a.size(); ++k)
                bv.push_back(bv_error_bound(k, s.degree, s.height, static_cast<double>(rep.options.x)));
            e["bv_error_bound"] = bv;
        }
        e["primes_used"] = s.primes_used;
        e["primes_skipped"] = s.primes_skipped;
        samples.push_back(std::move(e));
    }
    j["samples"] = std::move(samples);
    return j;
}

json chebotarev_summary(const ChebotarevResult& res, const ChebotarevOptions& opt, const RunManifest& m) {
    json j;
    j["manifest"] = manifest_json(m, false);
    j["x"] = res.x;
    j["k_max"] = opt.k_max;
    j["exclude_zero"] = opt.exclude_zero;
    j["a"] = res.a;
    j["se"] = res.se;
    j["primes_used"] = res.records.size();
    j["skipped"] = res.skipped;
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError(path + ": read failed");
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    try {
        const auto parent = std::filesystem::path(path).parent_path();
        if (!parent.empty()) std::filesystem::create_directories(parent);
    } catch (const std::filesystem::filesystem_error& e) {
        throw IoError(path + ": " + e.what());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path + ": cannot open for writing");
    out << content;
    out.flush();
    if (!out) throw IoError(path + ": write failed");
}

}  // namespace tdlab
