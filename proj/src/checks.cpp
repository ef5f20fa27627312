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

#include "tdlab/checks.hpp"

#include <cmath>
#include <cstdio>

#include "tdlab/cohomology.hpp"
#include "tdlab/generation.hpp"
#include "tdlab/io.hpp"
#include "tdlab/mixing.hpp"
#include "tdlab/parallel.hpp"
#include "tdlab/primes.hpp"
#include "tdlab/rng.hpp"
#include "tdlab/tridiag.hpp"
#include "tdlab/wreath.hpp"

namespace tdlab {

void CheckReport::require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    notes.push_back("FAILED " + what);
}

namespace {

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::int64_t uniform(Xoshiro256& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
}

TridiagMatrix random_matrix(Xoshiro256& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> v(n), w(n ? n - 1 : 0);
    for (auto& x : v) x = uniform(rng, lo, hi);
    for (auto& x : w) x = uniform(rng, lo, hi);
    return TridiagMatrix(v, w);
}

// q(a x + b); nullopt if some coefficient is not integral
std::optional<IntPoly> substitute_affine(const IntPoly& q, const mpq_class& a, const mpq_class& b) {
    std::vector<mpq_class> acc;
    for (std::size_t i = q.coeffs().size(); i-- > 0;) {
        std::vector<mpq_class> next(acc.size() + 1);
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] += acc[j] * a;
            next[j] += acc[j] * b;
        }
        next[0] += mpq_class(q.coeffs()[i]);
        acc = std::move(next);
    }
    std::vector<mpz_class> out;
    for (auto& c : acc) {
        c.canonicalize();
        if (c.get_den() != 1) return std::nullopt;
        out.push_back(c.get_num());
    }
    return IntPoly(out);
}

ModelConfig dyson12(unsigned n) {
    ModelConfig c;
    c.kind = ModelKind::dyson;
    c.offdiag = {{1, mpq_class(1, 2)}, {2, mpq_class(1, 2)}};
    c.n = n;
    return c;
}

ParsedConfig parsed(const ModelConfig& m, const PopulationOptions& o) {
    ParsedConfig c;
    c.model = m;
    c.run.x = o.x;
    c.run.k_max = o.k_max;
    c.run.samples = o.samples;
    c.run.seed = o.master_seed;
    c.run.budget = o.prime_budget;
    return c;
}

std::string summary_of(const PopulationReport& rep, const char* subcommand) {
    const ParsedConfig cfg = parsed(rep.config, rep.options);
    RunManifest m;
    m.config_path = "(built in)";
    m.subcommand = subcommand;
    m.master_seed = rep.options.master_seed;
    m.threads = rep.options.threads;
    m.config_digest = sha256_hex(canonical_config(cfg));
    return dump(population_summary(rep, cfg, m));
}

PopulationReport iid_ak_run(unsigned threads, std::uint64_t seed) {
    PopulationOptions o;
    o.samples = 50;
    o.master_seed = seed;
    o.x = 100000;
    o.k_max = 3;
    o.certify = true;
    o.threads = threads;
    return run_population(ModelConfig::bernoulli(40), o);
}

}  // namespace

CheckReport identity_suite(unsigned count, unsigned n_max, std::uint64_t seed) {
    CheckReport r;
    Xoshiro256 rng(stream_seed(seed, 0));
    unsigned bad = 0;
    for (unsigned t = 0; t < count; ++t) {
        const auto m = random_matrix(rng, 1 + rng.next() % n_max, -5, 5);
        if (char_poly(m) != char_poly_oracle(m)) ++bad;
    }
    r.require(bad == 0, std::to_string(bad) + " of " + std::to_string(count) + " char_poly mismatches against the oracle");
    r.note(std::to_string(count) + " random matrices, n <= " + std::to_string(n_max) + ", entries in [-5, 5]");

    bad = 0;
    for (std::int64_t v : {0, 1, -3}) {
        for (unsigned n = 0; n <= 200; ++n) {
            const auto expect = substitute_affine(chebyshev_U(n), mpq_class(1, 2), mpq_class(-v, 2));
            if (!expect || char_poly(TridiagMatrix::constant(n, v)) != *expect) ++bad;
        }
    }
    r.require(bad == 0, std::to_string(bad) + " constant-diagonal Chebyshev mismatches");

    bad = 0;
    for (unsigned n = 1; n <= 100; ++n) {
        std::vector<std::int64_t> w(n - 1);
        for (auto& x : w) x = uniform(rng, 1, 5);
        const IntPoly p = char_poly(TridiagMatrix(std::vector<std::int64_t>(n, 0), w));
        // P(-x) = (-1)^n P(x)
        if (p.reflect() != (n % 2 ? -p : p)) ++bad;
        mpz_class prod = 0;
        if (n % 2 == 0) {
            prod = (n / 2) % 2 ? -1 : 1;
            for (unsigned j = 1; j <= n / 2; ++j) prod *= mpz_class(w[2 * j - 2]) * w[2 * j - 2];
        }
        if (p[0] != prod) ++bad;
    }
    r.require(bad == 0, std::to_string(bad) + " zero-diagonal symmetry or P(0) mismatches");

    bad = 0;
    for (unsigned t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng.next() % 40;
        const auto m = random_matrix(rng, n, -5, 5);
        auto w = m.offdiag();
        const std::size_t cut = rng.next() % (n - 1);
        w[cut] = 0;
        std::vector<std::int64_t> v1(m.diag().begin(), m.diag().begin() + cut + 1);
        std::vector<std::int64_t> v2(m.diag().begin() + cut + 1, m.diag().end());
        std::vector<std::int64_t> w1(w.begin(), w.begin() + cut), w2(w.begin() + cut + 1, w.end());
        if (char_poly(TridiagMatrix(m.diag(), w)) != char_poly(TridiagMatrix(v1, w1)) * char_poly(TridiagMatrix(v2, w2))) ++bad;
    }
    r.require(bad == 0, std::to_string(bad) + " block splitting mismatches");
    return r;
}

CheckReport height_bound_suite(unsigned draws_per_model, std::uint64_t seed) {
    CheckReport r;
    std::vector<ModelConfig> models;
    for (unsigned n : {10U, 30U, 40U, 60U}) models.push_back(ModelConfig::bernoulli(n));
    ModelConfig three = ModelConfig::bernoulli(50);
    three.diag = {{-3, mpq_class(1, 4)}, {0, mpq_class(1, 4)}, {5, mpq_class(1, 2)}};
    models.push_back(three);
    for (unsigned n : {40U, 41U}) models.push_back(dyson12(n));
    ModelConfig shifted = dyson12(30);
    shifted.offdiag = {{1, mpq_class(1, 3)}, {4, mpq_class(2, 3)}};
    shifted.shift = -2;
    models.push_back(shifted);
    std::uint64_t total = 0, bad = 0;
    for (const auto& m : models) {
        for (unsigned i = 0; i < draws_per_model; ++i) {
            const auto mat = draw_matrix(m, sample(m, seed, i));
            ++total;
            if (height(char_poly(mat)) > height_bound(mat)) ++bad;
        }
    }
    r.require(bad == 0, std::to_string(bad) + " draws exceed the height bound");
    r.note(std::to_string(total) + " sampled polynomials");
    return r;
}

CheckReport orbit_suite() {
    CheckReport r;
    for (unsigned k = 1; k <= 8; ++k)
        r.require(orbit_count_formula(k) == involution_count(k), "formula vs involutions at k = " + std::to_string(k));
    for (unsigned m = 5; m <= 6; ++m)
        for (unsigned k = 1; k <= 5; ++k)
            r.require(brute_orbits(m, k, WreathSubgroup::full) == orbit_count_formula(k),
                      "brute_orbits(" + std::to_string(m) + ", " + std::to_string(k) + ")");
    const auto o66 = brute_orbits(6, 6, WreathSubgroup::full);
    r.require(o66 == 76, "brute_orbits(6, 6) = " + std::to_string(o66));
    r.note("brute_orbits(6, 6, full) = " + std::to_string(o66));
    return r;
}

CheckReport generation_sweep(std::uint32_t p_min_lemma, std::uint32_t p_min_dyson, std::uint32_t p_max, unsigned threads) {
    struct Job {
        int kind;  // 0 lemma, 1 dyson
        std::int64_t a, b;
        std::uint32_t p;
        std::int64_t l;
    };
    std::vector<Job> jobs;
    for (std::uint64_t p : primes_between(p_min_lemma, p_max))
        for (std::int64_t l = 0; l < static_cast<std::int64_t>(p); ++l)
            for (auto [v, vp] : {std::pair{0, 1}, {0, 2}, {1, 3}}) jobs.push_back({0, v, vp, static_cast<std::uint32_t>(p), l});
    for (std::uint64_t p : primes_between(p_min_dyson, p_max))
        for (std::int64_t l = 1; l < static_cast<std::int64_t>(p); ++l)
            for (auto [w, wp] : {std::pair{1, 2}, {2, 3}}) jobs.push_back({1, w, wp, static_cast<std::uint32_t>(p), l});

    std::vector<CheckStatus> status(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t i) {
        const Job& j = jobs[i];
        status[i] = (j.kind == 0 ? lemma_gen_check(j.a, j.b, j.p, j.l) : dyson_gen_check(j.a, j.b, j.p, j.l)).status;
    });
    CheckReport r;
    std::uint64_t pass[2] = {0, 0};
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (status[i] == CheckStatus::pass) {
            ++pass[jobs[i].kind];
            continue;
        }
        const Job& j = jobs[i];
        r.require(false, std::string(j.kind ? "dyson" : "lemma") + "_gen_check(" + std::to_string(j.a) + ", " + std::to_string(j.b) +
                             ", " + std::to_string(j.p) + ", " + std::to_string(j.l) + ") " + to_string(status[i]));
    }
    r.note(std::to_string(pass[0]) + " lemma and " + std::to_string(pass[1]) + " dyson cases pass");

    struct Prod {
        int kind;
        std::int64_t a, b;
        std::vector<std::uint32_t> primes;
        std::vector<std::int64_t> lambdas;
    };
    std::vector<Prod> prods;
    for (auto [v, vp] : {std::pair{0, 1}, {0, 2}, {1, 3}}) {
        prods.push_back({0, v, vp, {5, 5}, {0, 1}});
        prods.push_back({0, v, vp, {7, 5}, {0, 0}});
        prods.push_back({0, v, vp, {7, 7}, {1, 2}});
        prods.push_back({0, v, vp, {11, 7}, {2, 5}});
        prods.push_back({0, v, vp, {11, 11}, {0, 3}});
    }
    for (auto [w, wp] : {std::pair{1, 2}, {2, 3}}) {
        prods.push_back({1, w, wp, {7, 7}, {1, 2}});
        prods.push_back({1, w, wp, {11, 7}, {1, 1}});
        prods.push_back({1, w, wp, {11, 11}, {1, 2}});
        prods.push_back({1, w, wp, {13, 11}, {3, 4}});
    }
    std::vector<CheckStatus> ps(prods.size());
    parallel_for(prods.size(), threads, [&](std::size_t i) {
        const Prod& q = prods[i];
        ps[i] = (q.kind == 0 ? lemma_genprod_check(q.a, q.b, q.primes, q.lambdas) : dyson_genprod_check(q.a, q.b, q.primes, q.lambdas)).status;
    });
    for (std::size_t i = 0; i < prods.size(); ++i) {
        const Prod& q = prods[i];
        r.require(ps[i] == CheckStatus::pass, std::string(q.kind ? "dyson" : "lemma") + "_genprod_check(" + std::to_string(q.a) + ", " +
                                                   std::to_string(q.b) + ", p = (" + std::to_string(q.primes[0]) + ", " +
                                                   std::to_string(q.primes[1]) + ")) " + to_string(ps[i]));
    }
    r.note(std::to_string(prods.size()) + " product checks");
    return r;
}

CheckReport mixing_suite(const std::vector<std::uint32_t>& primes, unsigned threads) {
    CheckReport r;
    const ModelConfig bern = ModelConfig::bernoulli(10);
    for (std::uint32_t p : primes) {
        const std::string at = "p = " + std::to_string(p) + ": ";
        const ChainSpec c1 = build_chain(bern, 1, {p}, {0}), c2 = build_chain(bern, 2, {p}, {0});
        const ChainSpec c3 = build_chain(bern, 3, {p}, {0}), c4 = build_chain(bern, 4, {p}, {0});
        const ChainOperator o1(c1), o2(c2), o3(c3);
        std::uint64_t bad = 0;
        for (std::uint64_t s = 0; s < o1.states(); ++s) {
            const SparseLaw d{{s, mpq_class(1)}};
            const SparseLaw a = o1.apply_exact(o1.apply_exact(o1.apply_exact(d)));
            if (a != o2.apply_exact(d)) ++bad;
            const SparseLaw b = o1.apply_exact(o1.apply_exact(o1.apply_exact(a, true), true), true);
            if (b != o3.apply_exact(d)) ++bad;
        }
        r.require(bad == 0, at + std::to_string(bad) + " basis vectors break Pi_2 = Pi_1^3 or Pi_3 = (Pi_1^3)^t Pi_1^3");

        const auto dc = decomposition_check(c3, c4);
        r.require(dc.pass, at + "decomposition_check");

        const unsigned delta = support_diameter(c4);
        const double bound = 1 - 1.0 / (64.0 * delta * delta) + 1e-9;
        const auto ev = second_eigenvalue(c4, threads);
        r.require(ev.converged, at + "eigenvalue solver did not converge");
        r.require(std::fabs(ev.lambda2) <= bound && std::fabs(ev.lambda_min) <= bound,
                  at + "chain 4 eigenvalues " + fmt("%.6f", ev.lambda2) + ", " + fmt("%.6f", ev.lambda_min) + " vs bound " + fmt("%.6f", bound));

        const auto curve = decay_curve(c1, 5000, 1e-11, threads);
        std::size_t first = curve.size();
        for (std::size_t n = 0; n < curve.size(); ++n)
            if (curve[n] <= 1e-3) {
                first = n;
                break;
            }
        r.require(first < curve.size(), at + "d_1 never reaches 1e-3 within 5000 steps");
        const auto fit = tail_fit(curve);
        r.require(fit.valid && fit.slope < 0 && fit.r2 >= 0.99, at + "tail fit slope " + fmt("%.4g", fit.slope) + ", R^2 " + fmt("%.6f", fit.r2));
        r.note(at + "Delta = " + std::to_string(delta) + ", |lambda| <= " + fmt("%.6f", std::max(std::fabs(ev.lambda2), std::fabs(ev.lambda_min))) +
               ", d_1 <= 1e-3 at n = " + std::to_string(first) + ", slope " + fmt("%.4g", fit.slope));
    }
    return r;
}

CheckReport chebotarev_goldens() {
    CheckReport r;
    ChebotarevOptions opt;
    opt.x = 10000;
    opt.k_max = 2;
    const double lin = run_chebotarev(IntPoly{-3, 1}, opt).a[0];
    const double sq = run_chebotarev(IntPoly{1, 0, 1}, opt).a[0];
    const double cyc = run_chebotarev(IntPoly{1, 1, 1, 1, 1}, opt).a[1];
    r.require(lin >= 0.95 && lin <= 1.05, "A_1(x - 3) = " + format_double(lin));
    r.require(sq >= 0.9 && sq <= 1.1, "A_1(x^2 + 1) = " + format_double(sq));
    r.require(cyc >= 2.7 && cyc <= 3.3, "A_2(x^4 + x^3 + x^2 + x + 1) = " + format_double(cyc));
    r.note("A_1 = " + fmt("%.4f", lin) + ", A_1 = " + fmt("%.4f", sq) + ", A_2 = " + fmt("%.4f", cyc));
    return r;
}

ExperimentRun iid_experiment(unsigned threads, std::uint64_t seed) {
    ExperimentRun out;
    CheckReport& r = out.check;
    const PopulationReport ak = iid_ak_run(threads, seed);
    out.summary = summary_of(ak, "population");
    for (unsigned k = 0; k < 3; ++k)
        r.require(ak.frac_within_half[k] >= 0.9, "n = 40: |A_" + std::to_string(k + 1) + " - 1| < 1/2 in " +
                                                     fmt("%.2f", ak.frac_within_half[k]) + " of 50 samples (need 0.90)");
    r.require(ak.all_height_bound_ok, "height bound");

    PopulationOptions o;
    o.samples = 500;
    o.master_seed = seed;
    o.x = 0;
    o.prime_budget = 10000;
    o.threads = threads;
    const PopulationReport p40 = run_population(ModelConfig::bernoulli(40), o);
    r.require(p40.frac_reducibility_evidence <= 0.02,
              "n = 40, N = 500: reducibility evidence " + fmt("%.3f", p40.frac_reducibility_evidence) + " (need <= 0.02)");
    r.require(p40.frac_perfect_power == 0, "n = 40: perfect powers " + fmt("%.3f", p40.frac_perfect_power));

    const PopulationReport p30 = run_population(ModelConfig::bernoulli(30), o);
    std::uint64_t big = 0;
    for (const char* v : {"Sn", "An"})
        if (auto it = p30.verdicts.find(v); it != p30.verdicts.end()) big += it->second;
    const double frac = static_cast<double>(big) / 500.0;
    r.require(frac >= 0.9, "n = 30, N = 500: Sn or An in " + fmt("%.3f", frac) + " (need >= 0.90)");
    r.require(p30.frac_perfect_power == 0, "n = 30: perfect powers " + fmt("%.3f", p30.frac_perfect_power));

    // integer roots are exact reducibility certificates
    for (const auto* rep : {&p40, &p30}) {
        std::uint64_t roots = 0;
        for (const auto& s : rep->samples)
            if (s.cert.reducible_reason.rfind("integer root", 0) == 0 || s.cert.reducible_reason == "root at 0") ++roots;
        r.note("n = " + std::to_string(rep->config.n) + ": " + std::to_string(roots) + " of 500 draws have an integer eigenvalue");
    }
    std::uint64_t outside = 0, outside_reducible = 0;
    for (const auto& s : ak.samples) {
        bool off = false;
        for (double a : s.a) off = off || std::fabs(a - 1) >= 0.5;
        outside += off;
        outside_reducible += off && s.cert.verdict == GaloisVerdict::reducible;
    }
    r.note("n = 40, 50 samples: " + std::to_string(outside) + " outside the window, " + std::to_string(outside_reducible) +
           " of them with an exact reducibility certificate");
    r.note("n = 40, 50 samples: within 1/2 for k = 1, 2, 3: " + fmt("%.2f", ak.frac_within_half[0]) + ", " +
           fmt("%.2f", ak.frac_within_half[1]) + ", " + fmt("%.2f", ak.frac_within_half[2]));
    return out;
}

std::string iid_summary(unsigned threads, std::uint64_t seed) { return summary_of(iid_ak_run(threads, seed), "population"); }

CheckReport dyson_report_check(const PopulationReport& rep) {
    CheckReport r;
    const std::string at = "n = " + std::to_string(rep.config.n) + ": ";
    r.require(rep.all_r_nonzero_even, at + "some record has an odd number of nonzero roots");
    r.require(rep.all_height_bound_ok, at + "height bound");
    for (unsigned k = 0; k < rep.frac_within_half.size(); ++k)
        if (!rep.samples.empty() && !rep.samples[0].a.empty())
            r.require(rep.frac_within_half[k] >= 0.9, at + "|A_" + std::to_string(k + 1) + " - O(" + std::to_string(k + 1) +
                                                          ")| < 1/2 in " + fmt("%.2f", rep.frac_within_half[k]));
    if (rep.config.n % 2 == 0)
        r.require(rep.frac_irreducible_evidence >= 0.95, at + "irreducibility evidence " + fmt("%.2f", rep.frac_irreducible_evidence));
    else
        r.require(rep.frac_zero_root_removed == 1.0, at + "root at the centre found in " + fmt("%.2f", rep.frac_zero_root_removed));
    return r;
}

CheckReport dyson_experiment(unsigned threads, std::uint64_t seed) {
    PopulationOptions o;
    o.samples = 50;
    o.master_seed = seed;
    o.x = 100000;
    o.certify = false;
    o.threads = threads;
    const PopulationReport even = run_population(dyson12(40), o);
    CheckReport r = dyson_report_check(even);
    o.x = 0;
    const PopulationReport odd = run_population(dyson12(41), o);
    const CheckReport r2 = dyson_report_check(odd);
    r.pass = r.pass && r2.pass;
    r.notes.insert(r.notes.end(), r2.notes.begin(), r2.notes.end());
    r.note("n = 40: within 1/2 for k = 1, 2, 3: " + fmt("%.2f", even.frac_within_half[0]) + ", " + fmt("%.2f", even.frac_within_half[1]) +
           ", " + fmt("%.2f", even.frac_within_half[2]) + "; irreducibility evidence " + fmt("%.2f", even.frac_irreducible_evidence));
    r.note("n = 41: root at the centre in " + fmt("%.2f", odd.frac_zero_root_removed));
    return r;
}

CheckReport cohomology_suite() {
    CheckReport r;
    for (unsigned n = 3; n <= 6; ++n) {
        const auto dim = [n](PermGroup g, CohomModule m) { return h1_dimension(g, n, m).h1; };
        const std::string at = "n = " + std::to_string(n) + ": ";
        const auto sf = dim(PermGroup::symmetric, CohomModule::full), af = dim(PermGroup::alternating, CohomModule::full);
        const auto sq = dim(PermGroup::symmetric, CohomModule::full_mod_const), aq = dim(PermGroup::alternating, CohomModule::full_mod_const);
        r.require(sf == 1, at + "H^1(S_n, full) = " + std::to_string(sf) + ", expected 1");
        r.require(af == 0, at + "H^1(A_n, full) = " + std::to_string(af) + ", expected 0");
        r.require(sq == 0, at + "H^1(S_n, full/const) = " + std::to_string(sq) + ", expected 0");
        r.require(aq == 0, at + "H^1(A_n, full/const) = " + std::to_string(aq) + ", expected 0");
        if (n == 4 || n == 6) {
            const auto ap = dim(PermGroup::alternating, CohomModule::perp_mod_const);
            r.require(ap == 1, at + "H^1(A_n, perp/const) = " + std::to_string(ap) + ", expected 1");
        }
    }
    return r;
}

CheckReport wreath_suite() {
    CheckReport r;
    for (unsigned m = 2; m <= 6; ++m) {
        const auto d = derived_subgroup_check(m);
        r.require(d.pass, "derived_subgroup_check(" + std::to_string(m) + "), index " + std::to_string(d.index));
    }
    for (unsigned m = 4; m <= 6; ++m) {
        const auto b = complement_block_check(m);
        r.require(b.pass, "complement_block_check(" + std::to_string(m) + ")");
    }
    return r;
}

}  // namespace tdlab
