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

#include "tdlab/harness.hpp"

#include <mpfr.h>

#include <algorithm>
#include <bitset>
#include <cmath>
#include <stdexcept>

#include "tdlab/fp_poly.hpp"
#include "tdlab/generation.hpp"
#include "tdlab/parallel.hpp"
#include "tdlab/primes.hpp"
#include "tdlab/rng.hpp"
#include "tdlab/wreath.hpp"

namespace tdlab {

namespace {

constexpr unsigned kMaxDegree = 255;
using DegreeSet = std::bitset<kMaxDegree + 1>;

// Cumulative weights scaled by 2^53, exact.
std::vector<mpz_class> thresholds(const std::vector<Atom>& table) {
    std::vector<mpz_class> out;
    mpq_class cum = 0;
    const mpz_class scale = mpz_class(1) << 53;
    for (const auto& a : table) {
        cum += a.weight;
        const mpq_class t = cum * scale;
        out.push_back(mpz_class(t.get_num() / t.get_den()) + (t.get_num() % t.get_den() != 0 ? 1 : 0));
    }
    return out;
}

// Atom with the first cumulative weight exceeding u / 2^53.
std::int64_t draw(const std::vector<Atom>& table, const std::vector<mpz_class>& thr, Xoshiro256& rng) {
    const mpz_class u(static_cast<unsigned long>(rng.next53()));
    for (std::size_t i = 0; i < table.size(); ++i)
        if (u < thr[i]) return table[i].value;
    return table.back().value;
}

double falling(unsigned r, unsigned k) {
    double f = 1;
    for (unsigned j = 0; j < k; ++j) f *= static_cast<double>(r) - j;
    return r < k ? 0.0 : f;
}

bool is_prime_small(unsigned q) { return q >= 2 && is_prime_u64(q); }

// Subset sums of a degree multiset, as a bitset over 0..n.
DegreeSet subset_sums(const std::vector<unsigned>& degrees) {
    DegreeSet s;
    s.set(0);
    for (unsigned d : degrees) s |= s << d;
    return s;
}

// Common subset sums other than 0 and n are empty: no factor of any degree is possible.
bool degrees_rule_out_factors(const DegreeSet& common, unsigned n) {
    for (unsigned d = 1; d < n; ++d)
        if (common.test(d)) return false;
    return true;
}

struct Scan {
    std::uint64_t irreducible_prime = 0;
    std::uint64_t jordan_prime = 0;
    unsigned jordan_q = 0;
    std::uint64_t tried = 0;
    DegreeSet common;  // subset sums shared by every tried prime
};

// Scans square-free reductions at odd primes. Stops once irreducibility is known and, if asked, a Jordan prime found.
Scan scan_reductions(const IntPoly& poly, std::uint64_t budget, bool want_jordan) {
    const unsigned n = static_cast<unsigned>(poly.degree());
    Scan s;
    s.common.set();
    std::uint64_t p = 2;
    while (s.tried < budget) {
        p = next_prime(p);
        const FpPoly f = reduce_mod(poly, p);
        const FactorDegrees fd = factor_degree_multiset(f);
        if (!fd.squarefree) continue;
        ++s.tried;
        s.common &= subset_sums(fd.degrees);
        if (!s.irreducible_prime && fd.degrees.size() == 1 && fd.degrees[0] == n) s.irreducible_prime = p;
        if (want_jordan && !s.jordan_prime) {
            for (unsigned q : fd.degrees) {
                if (2 * q <= n || q + 3 > n || !is_prime_small(q)) continue;
                bool lone = std::count(fd.degrees.begin(), fd.degrees.end(), q) == 1;
                for (unsigned d : fd.degrees)
                    if (d != q && d % q == 0) lone = false;
                if (lone) {
                    s.jordan_prime = p;
                    s.jordan_q = q;
                    break;
                }
            }
        }
        const bool irreducible = s.irreducible_prime || degrees_rule_out_factors(s.common, n);
        if (irreducible && (!want_jordan || s.jordan_prime)) break;
    }
    return s;
}

// Integer root of poly, searched among divisors of the constant term up to `bound`.
std::optional<mpz_class> integer_root(const IntPoly& poly, std::uint64_t bound) {
    const mpz_class c0 = poly[0];
    if (c0 == 0) return mpz_class(0);
    const mpz_class a = abs(c0);
    for (std::uint64_t r = 1; r <= bound && mpz_class(static_cast<unsigned long>(r)) <= a; ++r) {
        const mpz_class rr(static_cast<unsigned long>(r));
        if (a % rr != 0) continue;
        if (poly.eval(rr) == 0) return rr;
        if (poly.eval(-rr) == 0) return mpz_class(-rr);
    }
    return std::nullopt;
}

}  // namespace

SampleDraw sample(const ModelConfig& cfg, std::uint64_t master_seed, std::uint64_t index) {
    cfg.validate();
    SampleDraw d;
    d.master_seed = master_seed;
    d.index = index;
    Xoshiro256 rng(stream_seed(master_seed, index));
    if (cfg.kind == ModelKind::iid_diag) {
        const auto thr = thresholds(cfg.diag);
        for (unsigned i = 0; i < cfg.n; ++i) d.diag.push_back(draw(cfg.diag, thr, rng));
    } else {
        const auto thr = thresholds(cfg.offdiag);
        for (unsigned i = 0; i + 1 < cfg.n; ++i) d.offdiag.push_back(draw(cfg.offdiag, thr, rng));
    }
    return d;
}

TridiagMatrix draw_matrix(const ModelConfig& cfg, const SampleDraw& draw) {
    if (cfg.kind == ModelKind::iid_diag) {
        if (draw.diag.size() != cfg.n) throw std::invalid_argument("draw_matrix: diagonal length");
        return TridiagMatrix(draw.diag, std::vector<std::int64_t>(cfg.n ? cfg.n - 1 : 0, 1));
    }
    if (draw.offdiag.size() + 1 != cfg.n) throw std::invalid_argument("draw_matrix: off-diagonal length");
    return TridiagMatrix(std::vector<std::int64_t>(cfg.n, cfg.shift), draw.offdiag);
}

double log_prime(std::uint64_t p) {
    mpfr_t t;
    mpfr_init2(t, 128);
    mpfr_set_ui(t, static_cast<unsigned long>(p), MPFR_RNDN);
    mpfr_t r;
    mpfr_init2(r, 53);
    mpfr_log(r, t, MPFR_RNDN);
    const double out = mpfr_get_d(r, MPFR_RNDN);
    mpfr_clear(t);
    mpfr_clear(r);
    return out;
}

ChebotarevResult run_chebotarev(const IntPoly& poly, const ChebotarevOptions& opt) {
    if (opt.x < 5) throw std::invalid_argument("run_chebotarev: x must be at least 5");
    if (!poly.is_monic() || poly.degree() < 1) throw std::invalid_argument("run_chebotarev: need a monic polynomial");
    if (opt.k_max < 1) throw std::invalid_argument("run_chebotarev: k_max must be positive");

    ChebotarevResult res;
    res.x = opt.x;
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : sieve_range(opt.x).primes) {
        if (p <= opt.skip_through) {
            ++res.skipped["below_threshold"];
            continue;
        }
        bool divides = false;
        for (std::int64_t w : opt.skip_divisors_of)
            if (w != 0 && static_cast<std::uint64_t>(w < 0 ? -w : w) % p == 0) divides = true;
        if (divides) {
            ++res.skipped["divides_offdiag"];
            continue;
        }
        primes.push_back(p);
    }

    res.records.resize(primes.size());
    parallel_for(primes.size(), opt.threads, [&](std::size_t i) {
        const std::uint64_t p = primes[i];
        ChebotarevRecord& rec = res.records[i];
        rec.p = p;
        rec.log_p = log_prime(p);
        const FpPoly f = reduce_mod(poly, p);
        if (opt.factor_degrees) {
            const FactorDegrees fd = factor_degree_multiset(f);
            rec.degrees = fd.degrees;
            rec.squarefree = fd.squarefree;
            rec.r_all = static_cast<unsigned>(std::count(fd.degrees.begin(), fd.degrees.end(), 1U));
        } else {
            rec.r_all = count_distinct_roots(f);
            rec.squarefree = fp::gcd(f, fp::derivative(f)).degree() == 0;
        }
        rec.r_nonzero = rec.r_all - (f[0] == 0 ? 1U : 0U);
    });

    const double x = static_cast<double>(opt.x);
    const double m = static_cast<double>(res.records.size());
    for (unsigned k = 1; k <= opt.k_max; ++k) {
        double sum = 0, sumsq = 0;
        for (const auto& r : res.records) {
            const double t = r.log_p * falling(opt.exclude_zero ? r.r_nonzero : r.r_all, k);
            sum += t;
            sumsq += t * t;
        }
        res.a.push_back(sum / x);
        double var = 0;
        if (m > 1) var = std::max(0.0, (sumsq - sum * sum / m) / (m - 1));
        res.se.push_back(std::sqrt(m * var) / x);
    }
    return res;
}

const char* to_string(GaloisVerdict v) noexcept {
    switch (v) {
        case GaloisVerdict::contains_an:
            return "contains_An";
        case GaloisVerdict::sn:
            return "Sn";
        case GaloisVerdict::an:
            return "An";
        case GaloisVerdict::undetermined:
            return "undetermined";
        case GaloisVerdict::reducible:
            return "reducible";
    }
    return "?";
}

bool disc_square_test(const IntPoly& poly) {
    const mpz_class d = discriminant(poly);
    if (d == 0) throw std::domain_error("disc_square_test: zero discriminant");
    return d > 0 && mpz_perfect_square_p(d.get_mpz_t()) != 0;
}

GaloisCertificate certify_galois(const IntPoly& poly, std::uint64_t prime_budget, bool test_disc) {
    if (!poly.is_monic()) throw std::invalid_argument("certify_galois: need a monic polynomial");
    const unsigned n = static_cast<unsigned>(poly.degree());
    if (n < 8 || n > kMaxDegree) throw std::invalid_argument("certify_galois: degree must be in [8, 255]");
    GaloisCertificate c;
    if (poly[0] == 0) {
        c.verdict = GaloisVerdict::reducible;
        c.reducible_reason = "root at 0";
        return c;
    }
    if (auto pp = is_perfect_power(poly)) {
        c.verdict = GaloisVerdict::reducible;
        c.reducible_reason = "perfect power, exponent " + std::to_string(pp->exponent);
        return c;
    }
    // small integer roots are common for 0/1 matrices and cheap to find
    if (auto r = integer_root(poly, 64)) {
        c.verdict = GaloisVerdict::reducible;
        c.reducible_reason = "integer root " + r->get_str();
        return c;
    }
    const Scan s = scan_reductions(poly, prime_budget, true);
    c.primes_tried = s.tried;
    c.irreducible_prime = s.irreducible_prime;
    c.jordan_prime = s.jordan_prime;
    c.jordan_q = s.jordan_q;
    c.irreducible = s.irreducible_prime || degrees_rule_out_factors(s.common, n);
    if (!c.irreducible) {
        // a linear factor is consistent with every reduction: look for it
        if (s.common.test(1) || s.common.test(n - 1)) {
            const std::uint64_t bound = 100000;
            if (auto r = integer_root(poly, bound)) {
                c.verdict = GaloisVerdict::reducible;
                c.reducible_reason = "integer root " + r->get_str();
            }
        }
        return c;
    }
    if (!s.jordan_prime) return c;
    if (!test_disc) {
        c.verdict = GaloisVerdict::contains_an;
        return c;
    }
    c.disc_square = disc_square_test(poly);
    c.verdict = *c.disc_square ? GaloisVerdict::an : GaloisVerdict::sn;
    return c;
}

double bv_error_bound(unsigned k, unsigned n, const mpz_class& height, double x, double c) {
    if (k == 0 || n == 0 || height <= 0 || x <= 1) throw std::invalid_argument("bv_error_bound: arguments must be positive");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, height.get_mpz_t());
    const double log_h = std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
    const double lx = std::log(x);
    return c * k * std::pow(static_cast<double>(n), k) * (log_h + std::log(static_cast<double>(n))) * lx * lx / std::sqrt(x);
}

std::uint64_t skip_threshold(const ModelConfig& cfg) {
    const auto& table = cfg.kind == ModelKind::iid_diag ? cfg.diag : cfg.offdiag;
    const auto [a, b] = ModelConfig::top_two(table);
    return static_cast<std::uint64_t>(std::max<std::int64_t>(5, gen_threshold(a.value, b.value)));
}

IntPoly analyzed_poly(const ModelConfig& cfg, const SampleDraw& draw, bool& zero_root_removed) {
    IntPoly p = char_poly(draw_matrix(cfg, draw));
    zero_root_removed = false;
    if (cfg.kind == ModelKind::dyson) {
        if (cfg.shift != 0) p = p.taylor_shift(cfg.shift);
        if (cfg.n % 2 == 1) {
            auto q = divide_exact(p, IntPoly::linear(0));
            if (!q) throw std::logic_error("analyzed_poly: odd dyson polynomial without a root at the shift");
            p = std::move(*q);
            zero_root_removed = true;
        }
    }
    return p;
}

PopulationReport run_population(const ModelConfig& cfg, const PopulationOptions& opt) {
    cfg.validate();
    PopulationReport rep;
    rep.config = cfg;
    rep.options = opt;
    const bool dyson = cfg.kind == ModelKind::dyson;
    for (unsigned k = 1; k <= opt.k_max; ++k)
        rep.targets.push_back(dyson ? static_cast<double>(orbit_count_formula(k)) : 1.0);

    const std::uint64_t skip = skip_threshold(cfg);
    rep.samples.resize(opt.samples);
    parallel_for(opt.samples, opt.threads, [&](std::size_t i) {
        SampleReport& s = rep.samples[i];
        s.index = i;
        const SampleDraw d = sample(cfg, opt.master_seed, i);
        const TridiagMatrix m = draw_matrix(cfg, d);
        s.height_bound_ok = height(char_poly(m)) <= height_bound(m);
        const IntPoly p = analyzed_poly(cfg, d, s.zero_root_removed);
        s.height = height(p);
        s.degree = static_cast<unsigned>(p.degree());
        s.perfect_power = p.degree() >= 2 && is_perfect_power(p).has_value();

        if (opt.x > 0) {
            ChebotarevOptions co;
            co.x = opt.x;
            co.k_max = opt.k_max;
            co.exclude_zero = dyson;
            co.skip_through = skip;
            co.skip_divisors_of = d.offdiag;
            co.factor_degrees = false;
            const ChebotarevResult cr = run_chebotarev(p, co);
            s.a = cr.a;
            s.se = cr.se;
            s.primes_used = cr.records.size();
            for (const auto& [why, count] : cr.skipped) s.primes_skipped += count;
            for (const auto& r : cr.records)
                if (r.r_nonzero % 2) s.r_nonzero_even = false;
        }

        if (s.degree >= 8) {
            if (opt.certify) {
                s.cert = certify_galois(p, opt.prime_budget);
                s.irreducible_evidence = s.cert.irreducible;
            } else {
                const Scan sc = scan_reductions(p, opt.prime_budget, false);
                s.cert.irreducible_prime = sc.irreducible_prime;
                s.cert.primes_tried = sc.tried;
                s.cert.irreducible = sc.irreducible_prime != 0 || degrees_rule_out_factors(sc.common, s.degree);
                s.irreducible_evidence = s.cert.irreducible;
            }
        }
    });

    const double n = opt.samples ? static_cast<double>(opt.samples) : 1.0;
    rep.frac_within_half.assign(opt.k_max, 0.0);
    std::uint64_t red = 0, pp = 0, irr = 0, zr = 0;
    for (const auto& s : rep.samples) {
        for (unsigned k = 0; k < s.a.size(); ++k)
            if (std::fabs(s.a[k] - rep.targets[k]) < 0.5) rep.frac_within_half[k] += 1;
        red += (s.perfect_power || !s.irreducible_evidence);
        pp += s.perfect_power;
        irr += s.irreducible_evidence;
        zr += s.zero_root_removed;
        rep.all_r_nonzero_even = rep.all_r_nonzero_even && s.r_nonzero_even;
        rep.all_height_bound_ok = rep.all_height_bound_ok && s.height_bound_ok;
        if (opt.certify) ++rep.verdicts[to_string(s.cert.verdict)];
    }
    for (auto& f : rep.frac_within_half) f /= n;
    rep.frac_reducibility_evidence = static_cast<double>(red) / n;
    rep.frac_perfect_power = static_cast<double>(pp) / n;
    rep.frac_irreducible_evidence = static_cast<double>(irr) / n;
    rep.frac_zero_root_removed = static_cast<double>(zr) / n;
    return rep;
}

}  // namespace tdlab
