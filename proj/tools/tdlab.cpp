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

// tdlab command line. Exit codes: 0 ok, 1 a scientific check failed, 2 config or usage error, 3 IO error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tdlab/checks.hpp"
#include "tdlab/cohomology.hpp"
#include "tdlab/generation.hpp"
#include "tdlab/io.hpp"
#include "tdlab/mixing.hpp"
#include "tdlab/parallel.hpp"
#include "tdlab/primes.hpp"
#include "tdlab/wreath.hpp"

using namespace tdlab;
using nlohmann::json;

namespace {

struct Common {
    unsigned threads = 0;  // 0: hardware concurrency
    std::string out = "tdlab-out";
};

RunManifest manifest(const Common& c, const std::string& sub, const std::string& config_path, std::uint64_t seed,
                     const std::string& canonical) {
    RunManifest m;
    m.config_path = config_path;
    m.subcommand = sub;
    m.master_seed = seed;
    m.threads = resolve_threads(c.threads);
    m.output_dir = c.out;
    m.config_digest = sha256_hex(canonical);
    return m;
}

std::string out_path(const Common& c, const std::string& name) { return (std::filesystem::path(c.out) / name).string(); }

void write_manifest(const Common& c, const RunManifest& m) { write_file(out_path(c, "manifest.json"), dump(manifest_json(m))); }

int print_check(const char* what, const CheckReport& r) {
    std::printf("%s: %s\n", what, r.pass ? "pass" : "FAIL");
    for (const auto& n : r.notes) std::printf("  %s\n", n.c_str());
    return r.pass ? 0 : 1;
}

ParsedConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

IntPoly parse_poly(const std::string& text) {
    std::vector<mpz_class> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        mpz_class v;
        if (item.empty() || v.set_str(item, 10) != 0) throw ConfigError("--poly: bad coefficient '" + item + "'");
        c.push_back(v);
    }
    IntPoly p(c);
    if (p.degree() < 1 || !p.is_monic()) throw ConfigError("--poly: need a monic polynomial of degree >= 1 (coefficients ascending)");
    return p;
}

// identities
int cmd_identities(const Common&, unsigned count, unsigned n_max, std::uint64_t seed) {
    int rc = print_check("identities", identity_suite(count, n_max, seed));
    rc |= print_check("height bound", height_bound_suite(500, seed));
    return rc;
}

// chebotarev
struct ChebArgs {
    std::string poly, config;
    std::uint64_t index = 0, x = 10000, skip_through = 5;
    unsigned k_max = 3;
    bool exclude_zero = false, roots_only = false;
};

int cmd_chebotarev(const Common& c, const ChebArgs& a) {
    if (a.poly.empty() == a.config.empty()) throw ConfigError("chebotarev: give exactly one of --poly and --config");
    IntPoly p;
    ChebotarevOptions opt;
    opt.x = a.x;
    opt.k_max = a.k_max;
    opt.exclude_zero = a.exclude_zero;
    opt.skip_through = a.skip_through;
    opt.factor_degrees = !a.roots_only;
    opt.threads = resolve_threads(c.threads);
    std::uint64_t seed = 0;
    if (!a.poly.empty()) {
        p = parse_poly(a.poly);
    } else {
        const ParsedConfig cfg = load_config(a.config);
        seed = cfg.run.seed;
        const SampleDraw d = sample(cfg.model, seed, a.index);
        bool removed = false;
        p = analyzed_poly(cfg.model, d, removed);
        opt.skip_through = std::max(opt.skip_through, skip_threshold(cfg.model));
        opt.skip_divisors_of = d.offdiag;
        if (cfg.model.kind == ModelKind::dyson) opt.exclude_zero = true;
    }
    if (opt.x < 10) throw ConfigError("--x: must be at least 10");
    json params;
    std::vector<std::string> coeffs;
    for (const auto& v : p.coeffs()) coeffs.push_back(v.get_str());
    params["poly"] = coeffs;
    params["x"] = opt.x;
    params["k_max"] = opt.k_max;
    params["exclude_zero"] = opt.exclude_zero;
    params["skip_through"] = opt.skip_through;
    params["factor_degrees"] = opt.factor_degrees;
    const RunManifest m = manifest(c, "chebotarev", a.config, seed, params.dump());

    const ChebotarevResult res = run_chebotarev(p, opt);
    write_file(out_path(c, "records.csv"), records_csv(res.records));
    write_file(out_path(c, "chebotarev.json"), dump(chebotarev_summary(res, opt, m)));
    write_manifest(c, m);
    const mpz_class h = height(p);
    for (unsigned k = 1; k <= opt.k_max; ++k)
        std::printf("A_%u = %.6f  (se %.6f, error bound %.3g)\n", k, res.a[k - 1], res.se[k - 1],
                    bv_error_bound(k, static_cast<unsigned>(p.degree()), h, static_cast<double>(opt.x)));
    std::printf("%zu primes used; records in %s\n", res.records.size(), out_path(c, "records.csv").c_str());
    return 0;
}

// population and dyson
struct PopArgs {
    std::string config;
    std::optional<unsigned> samples;
    std::optional<std::uint64_t> x, seed, budget;
    bool no_certify = false;
};

std::pair<ParsedConfig, PopulationReport> population_run(const Common& c, const PopArgs& a, bool certify, const char* sub) {
    ParsedConfig cfg = load_config(a.config);
    if (a.samples) cfg.run.samples = *a.samples;
    if (a.x) cfg.run.x = *a.x;
    if (a.seed) cfg.run.seed = *a.seed;
    if (a.budget) cfg.run.budget = *a.budget;
    if (cfg.run.x != 0 && cfg.run.x < 10) throw ConfigError("--x: must be 0 or at least 10");
    PopulationOptions o;
    o.samples = cfg.run.samples;
    o.master_seed = cfg.run.seed;
    o.x = cfg.run.x;
    o.k_max = cfg.run.k_max;
    o.prime_budget = cfg.run.budget;
    o.certify = certify;
    o.threads = resolve_threads(c.threads);
    const RunManifest m = manifest(c, sub, a.config, cfg.run.seed, canonical_config(cfg));
    PopulationReport rep = run_population(cfg.model, o);
    write_file(out_path(c, std::string(sub) + ".json"), dump(population_summary(rep, cfg, m)));
    write_manifest(c, m);
    std::printf("%u samples, %s, n = %u\n", o.samples, to_string(cfg.model.kind), cfg.model.n);
    for (unsigned k = 0; k < rep.frac_within_half.size() && o.x; ++k)
        std::printf("  |A_%u - %g| < 1/2 in %.3f of samples\n", k + 1, rep.targets[k], rep.frac_within_half[k]);
    std::printf("  reducibility evidence %.3f, perfect powers %.3f, zero root removed %.3f\n", rep.frac_reducibility_evidence,
                rep.frac_perfect_power, rep.frac_zero_root_removed);
    for (const auto& [v, n] : rep.verdicts) std::printf("  %s: %llu\n", v.c_str(), static_cast<unsigned long long>(n));
    return {cfg, rep};
}

int cmd_population(const Common& c, const PopArgs& a) {
    population_run(c, a, !a.no_certify, "population");
    return 0;
}

int cmd_dyson(const Common& c, const PopArgs& a) {
    if (load_config(a.config).model.kind != ModelKind::dyson) throw ConfigError("$.kind: the dyson subcommand needs kind \"dyson\"");
    const auto [cfg, rep] = population_run(c, a, false, "dyson");
    return print_check("dyson checks", dyson_report_check(rep));
}

// mixing
struct MixArgs {
    std::vector<std::uint32_t> primes{5};
    std::vector<std::int64_t> lambdas;
    int chain = 4;
    unsigned steps = 2000;
    std::string config;
};

int cmd_mixing(const Common& c, const MixArgs& a) {
    ModelConfig model = ModelConfig::bernoulli(10);
    std::string canonical;
    if (!a.config.empty()) {
        const ParsedConfig cfg = load_config(a.config);
        if (cfg.model.kind != ModelKind::iid_diag) throw ConfigError("$.kind: mixing chains use an iid-diag model");
        model = cfg.model;
        canonical = canonical_config(cfg);
    }
    std::vector<std::int64_t> lambdas = a.lambdas;
    if (lambdas.empty()) lambdas.assign(a.primes.size(), 0);
    if (lambdas.size() != a.primes.size()) throw ConfigError("--lambda: need one value per --p");
    for (auto p : a.primes)
        if (!is_prime_u64(p) || p < 5) throw ConfigError("--p: must be a prime >= 5");
    json params;
    params["primes"] = a.primes;
    params["lambdas"] = lambdas;
    params["chain"] = a.chain;
    params["steps"] = a.steps;
    params["model"] = canonical;
    const RunManifest m = manifest(c, "mixing", a.config, 0, params.dump());
    const unsigned t = resolve_threads(c.threads);

    ChainSpec spec;
    try {
        spec = build_chain(model, a.chain, a.primes, lambdas);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    const auto curve = decay_curve(spec, a.steps, 0, t);
    std::string csv = "n,d_k\n";
    for (std::size_t n = 0; n < curve.size(); ++n) csv += std::to_string(n) + "," + format_double(curve[n]) + "\n";
    write_file(out_path(c, "decay.csv"), csv);

    json j;
    j["manifest"] = manifest_json(m, false);
    const auto fit = tail_fit(curve);
    j["tail_fit"] = {{"valid", fit.valid}, {"first", fit.first}, {"last", fit.last}, {"slope", fit.slope}, {"r2", fit.r2}};
    int rc = 0;
    const auto ev = second_eigenvalue(spec, t);
    j["lambda2"] = ev.lambda2;
    j["lambda_min"] = ev.lambda_min;
    j["singular_values"] = ev.singular_values;
    std::printf("chain %d on %zu factor(s): %llu states, d_k(%zu) = %.3g\n", a.chain, a.primes.size(),
                static_cast<unsigned long long>(ChainOperator(spec).states()), curve.size() - 1, curve.back());
    if (fit.valid) std::printf("tail fit: slope %.5g, R^2 %.6f over n in [%u, %u]\n", fit.slope, fit.r2, fit.first, fit.last);
    if (a.chain >= 3) {
        const unsigned delta = support_diameter(spec);
        const double bound = 1 - 1.0 / (64.0 * delta * delta) + 1e-9;
        const bool ok = ev.converged && std::fabs(ev.lambda2) <= bound && std::fabs(ev.lambda_min) <= bound;
        j["diameter"] = delta;
        j["dsc_bound"] = bound;
        j["dsc_pass"] = ok;
        std::printf("DSC: Delta = %u, lambda_2 = %.6f, lambda_min = %.6f, bound %.6f: %s\n", delta, ev.lambda2, ev.lambda_min, bound,
                    ok ? "pass" : "FAIL");
        rc = ok ? 0 : 1;
    } else {
        std::printf("second singular value %.6f (chain %d is not symmetric; no DSC check)\n", ev.lambda2, a.chain);
    }
    write_file(out_path(c, "mixing.json"), dump(j));
    write_manifest(c, m);
    return rc;
}

// groups
struct GroupArgs {
    std::string check = "gen";
    std::uint32_t pmin = 0, pmax = 101;
    std::int64_t v = 0, vp = 1;
    std::vector<std::uint32_t> primes;
    std::vector<std::int64_t> lambdas;
};

int cmd_groups(const Common& c, const GroupArgs& a) {
    const bool dyson = a.check == "dyson" || a.check == "dysonprod";
    if (a.check == "gen" || a.check == "dyson") {
        const std::uint32_t lo = a.pmin ? a.pmin : (dyson ? 7 : 5);
        std::vector<std::pair<std::uint32_t, std::int64_t>> jobs;
        for (std::uint64_t p : primes_between(lo, a.pmax))
            for (std::int64_t l = dyson ? 1 : 0; l < static_cast<std::int64_t>(p); ++l) jobs.emplace_back(static_cast<std::uint32_t>(p), l);
        std::vector<CheckOutcome> out(jobs.size());
        parallel_for(jobs.size(), resolve_threads(c.threads), [&](std::size_t i) {
            out[i] = dyson ? dyson_gen_check(a.v, a.vp, jobs[i].first, jobs[i].second)
                           : lemma_gen_check(a.v, a.vp, jobs[i].first, jobs[i].second);
        });
        std::uint64_t n[3] = {0, 0, 0};
        for (std::size_t i = 0; i < out.size(); ++i) {
            ++n[static_cast<int>(out[i].status)];
            if (out[i].status != CheckStatus::pass)
                std::printf("  p = %u, lambda = %lld: %s %s\n", jobs[i].first, static_cast<long long>(jobs[i].second),
                            to_string(out[i].status), out[i].reason.c_str());
        }
        std::printf("%s_gen_check(%lld, %lld), p in [%u, %u]: %llu pass, %llu fail, %llu skipped\n", dyson ? "dyson" : "lemma",
                    static_cast<long long>(a.v), static_cast<long long>(a.vp), lo, a.pmax, static_cast<unsigned long long>(n[0]),
                    static_cast<unsigned long long>(n[1]), static_cast<unsigned long long>(n[2]));
        return n[1] ? 1 : 0;
    }
    if (a.check == "genprod" || a.check == "dysonprod") {
        if (a.primes.empty() || a.primes.size() != a.lambdas.size()) throw ConfigError("--primes and --lambdas: need equal, nonzero lengths");
        const auto o = dyson ? dyson_genprod_check(a.v, a.vp, a.primes, a.lambdas) : lemma_genprod_check(a.v, a.vp, a.primes, a.lambdas);
        std::printf("%s: %s %s (closure %llu / %llu, expected %llu)\n", a.check.c_str(), to_string(o.status), o.reason.c_str(),
                    static_cast<unsigned long long>(o.size_forward), static_cast<unsigned long long>(o.size_backward),
                    static_cast<unsigned long long>(o.expected));
        return o.status == CheckStatus::fail ? 1 : 0;
    }
    throw ConfigError("--check: one of gen, dyson, genprod, dysonprod");
}

// wreath
int cmd_wreath(const Common&, unsigned m, unsigned k, const std::string& group, bool structure) {
    if (k < 1 || k > m || m > 6) throw ConfigError("--m, --k: need 1 <= k <= m <= 6");
    const bool full = group == "full";
    if (!full && group != "derived") throw ConfigError("--group: full or derived");
    const auto n = brute_orbits(m, k, full ? WreathSubgroup::full : WreathSubgroup::derived);
    std::printf("%llu\n", static_cast<unsigned long long>(n));
    int rc = 0;
    if (full) {
        const bool ok = n == orbit_count_formula(k);
        std::printf("formula O(%u) = %llu: %s\n", k, static_cast<unsigned long long>(orbit_count_formula(k)), ok ? "pass" : "FAIL");
        rc = ok ? 0 : 1;
    }
    if (structure) {
        const auto d = derived_subgroup_check(m);
        std::printf("derived subgroup: order %llu of %llu, index %llu: %s\n", static_cast<unsigned long long>(d.derived_order),
                    static_cast<unsigned long long>(d.group_order), static_cast<unsigned long long>(d.index), d.pass ? "pass" : "FAIL");
        rc |= d.pass ? 0 : 1;
        if (m >= 4) {
            const auto b = complement_block_check(m);
            std::printf("complements on two blocks: K %llu, twisted %llu, <-1, K> %llu, full %llu: %s\n",
                        static_cast<unsigned long long>(b.k_order), static_cast<unsigned long long>(b.twisted_order),
                        static_cast<unsigned long long>(b.minus_k_order), static_cast<unsigned long long>(b.full_order), b.pass ? "pass" : "FAIL");
            rc |= b.pass ? 0 : 1;
        }
    }
    return rc;
}

// cohomology
int cmd_cohomology(const Common&, unsigned n, bool check) {
    if (n < 3 || n > 6) throw ConfigError("--n: must lie in [3, 6]");
    for (auto g : {PermGroup::symmetric, PermGroup::alternating})
        for (auto mod : {CohomModule::full, CohomModule::full_mod_const, CohomModule::perp_mod_const}) {
            const auto r = h1_dimension(g, n, mod);
            std::printf("%s%u %-11s dim Z1 %u, dim B1 %u, H1 %u\n", to_string(g), n, to_string(mod), r.dim_z1, r.dim_b1, r.h1);
        }
    if (!check) return 0;
    CheckReport r;
    const auto h = [n](PermGroup g, CohomModule m) { return h1_dimension(g, n, m).h1; };
    r.require(h(PermGroup::symmetric, CohomModule::full) == 1, "(S_n, full) != 1");
    r.require(h(PermGroup::alternating, CohomModule::full) == 0, "(A_n, full) != 0");
    r.require(h(PermGroup::symmetric, CohomModule::full_mod_const) == 0, "(S_n, full/const) != 0");
    r.require(h(PermGroup::alternating, CohomModule::full_mod_const) == 0, "(A_n, full/const) != 0");
    if (n % 2 == 0) r.require(h(PermGroup::alternating, CohomModule::perp_mod_const) == 1, "(A_n, perp/const) != 1");
    return print_check("expected dimensions", r);
}

// report
int cmd_report(const std::vector<std::string>& files, const std::string& records) {
    int rc = 0;
    for (const auto& f : files) {
        json j;
        try {
            j = json::parse(read_file(f));
        } catch (const json::parse_error& e) {
            throw IoError(f + ": not JSON");
        }
        if (!j.contains("manifest")) throw IoError(f + ": no manifest");
        const auto& m = j["manifest"];
        std::printf("%s: %s, seed %s, tool %s\n", f.c_str(), m.value("subcommand", "?").c_str(), m["master_seed"].dump().c_str(),
                    m.value("tool_version", "?").c_str());
        if (j.contains("config")) {
            const bool ok = sha256_hex(j["config"].dump()) == m.value("config_digest", "");
            std::printf("  config digest: %s\n", ok ? "matches" : "MISMATCH");
            rc |= ok ? 0 : 1;
        }
        if (j.contains("frac_within_half")) {
            std::printf("  within 1/2: %s\n", j["frac_within_half"].dump().c_str());
            std::printf("  reducibility evidence %s, perfect powers %s\n", j["frac_reducibility_evidence"].dump().c_str(),
                        j["frac_perfect_power"].dump().c_str());
            std::printf("  verdicts %s\n", j["verdicts"].dump().c_str());
        }
        if (j.contains("a") && !records.empty()) {
            std::istringstream is(read_file(records));
            const auto recs = parse_records(is);
            const bool exclude = j.value("exclude_zero", false);
            double sum = 0;
            for (const auto& r : recs) sum += r.log_p * (exclude ? r.r_nonzero : r.r_all);
            const double a1 = sum / j["x"].get<double>();
            const bool ok = !j["a"].empty() && a1 == j["a"][0].get<double>();
            std::printf("  A_1 from %s: %s vs %s: %s\n", records.c_str(), format_double(a1).c_str(), format_double(j["a"][0].get<double>()).c_str(),
                        ok ? "match" : "MISMATCH");
            rc |= ok ? 0 : 1;
        }
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tdlab: Galois groups of random tridiagonal matrices"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--threads", common.threads, "Worker threads, 0 for all cores")->envname("TDLAB_THREADS");
    app.add_option("--out", common.out, "Output directory")->envname("TDLAB_OUTPUT_DIR");
    std::function<int()> run;

    auto* ids = app.add_subcommand("identities", "Exact identity checks for the characteristic polynomial");
    unsigned id_count = 500, id_nmax = 30;
    std::uint64_t id_seed = 0;
    ids->add_option("--count", id_count, "Random matrices to compare with the oracle");
    ids->add_option("--nmax", id_nmax, "Largest size")->check(CLI::Range(1U, 200U));
    ids->add_option("--seed", id_seed);
    ids->callback([&] { run = [&] { return cmd_identities(common, id_count, id_nmax, id_seed); }; });

    auto* cheb = app.add_subcommand("chebotarev", "A_k averages and per-prime records for one polynomial");
    ChebArgs ca;
    cheb->add_option("--poly", ca.poly, "Monic integer polynomial, coefficients ascending: c0,c1,...,1");
    cheb->add_option("--config", ca.config, "Model config; analyzes draw --index");
    cheb->add_option("--index", ca.index);
    cheb->add_option("--x", ca.x, "Primes in (x, 2x]");
    cheb->add_option("--k-max", ca.k_max)->check(CLI::Range(1U, 8U));
    cheb->add_option("--skip-through", ca.skip_through, "Leave out primes up to this bound");
    cheb->add_flag("--exclude-zero", ca.exclude_zero, "Count nonzero roots only");
    cheb->add_flag("--roots-only", ca.roots_only, "Skip factor degrees");
    cheb->callback([&] { run = [&] { return cmd_chebotarev(common, ca); }; });

    PopArgs pa;
    auto pop_options = [&pa](CLI::App* sub) {
        sub->add_option("--config", pa.config, "Model config (JSON)")->required();
        sub->add_option("--samples", pa.samples);
        sub->add_option("--x", pa.x, "0 skips the A_k averages");
        sub->add_option("--seed", pa.seed);
        sub->add_option("--budget", pa.budget, "Prime budget of the Galois scan");
    };
    auto* pop = app.add_subcommand("population", "Sampled population: A_k, reducibility evidence, Galois verdicts");
    pop_options(pop);
    pop->add_flag("--no-certify", pa.no_certify, "Irreducibility scan only");
    pop->callback([&] { run = [&] { return cmd_population(common, pa); }; });
    auto* dys = app.add_subcommand("dyson", "Dyson population with its symmetry checks");
    pop_options(dys);
    dys->callback([&] { run = [&] { return cmd_dyson(common, pa); }; });

    auto* mix = app.add_subcommand("mixing", "Decay curve and spectral check of a transfer-matrix chain");
    MixArgs ma;
    mix->add_option("--p", ma.primes, "Prime(s) of the product group");
    mix->add_option("--lambda", ma.lambdas, "Spectral parameter(s), one per prime");
    mix->add_option("--chain", ma.chain)->check(CLI::Range(1, 4));
    mix->add_option("--steps", ma.steps);
    mix->add_option("--config", ma.config, "iid-diag model config; Bernoulli{0,1} by default");
    mix->callback([&] { run = [&] { return cmd_mixing(common, ma); }; });

    auto* grp = app.add_subcommand("groups", "Generation sweeps in PSL2(p) and products");
    GroupArgs ga;
    grp->add_option("--check", ga.check, "gen, dyson, genprod or dysonprod");
    grp->add_option("--pmin", ga.pmin);
    grp->add_option("--pmax", ga.pmax);
    grp->add_option("--v", ga.v);
    grp->add_option("--vp", ga.vp);
    grp->add_option("--primes", ga.primes)->delimiter(',');
    grp->add_option("--lambdas", ga.lambdas)->delimiter(',');
    grp->callback([&] { run = [&] { return cmd_groups(common, ga); }; });

    auto* wr = app.add_subcommand("wreath", "Orbits of C2 wr S_m on distinct k-tuples");
    unsigned wm = 6, wk = 6;
    std::string wgroup = "full";
    bool wstruct = false;
    wr->add_option("--m", wm);
    wr->add_option("--k", wk);
    wr->add_option("--group", wgroup, "full or derived");
    wr->add_flag("--structure", wstruct, "Also run the derived-subgroup and complement checks");
    wr->callback([&] { run = [&] { return cmd_wreath(common, wm, wk, wgroup, wstruct); }; });

    auto* co = app.add_subcommand("cohomology", "H^1 of S_n and A_n with coefficients in F_2^n and quotients");
    unsigned cn = 5;
    bool ccheck = false;
    co->add_option("--n", cn);
    co->add_flag("--check", ccheck, "Compare with the expected dimensions");
    co->callback([&] { run = [&] { return cmd_cohomology(common, cn, ccheck); }; });

    auto* rep = app.add_subcommand("report", "Summarize output JSON files; verify digests and the A_1 round trip");
    std::vector<std::string> files;
    std::string records;
    rep->add_option("files", files, "Summary JSON files")->required();
    rep->add_option("--records", records, "records.csv to recompute A_1 from");
    rep->callback([&] { run = [&] { return cmd_report(files, records); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        if (rc == 0) return 0;
        std::cerr << app.help();
        return 2;
    }
    try {
        return run();
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid argument: %s\n", e.what());
        return 2;
    }
}
