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

#include <numeric>
#include <random>

#include "doctest.h"
#include "tdlab/fp_poly.hpp"
#include "tdlab/primes.hpp"

using namespace tdlab;

namespace {

unsigned brute_roots(const FpPoly& f) {
    unsigned c = 0;
    for (std::uint64_t x = 0; x < f.prime(); ++x) c += f.eval(x) == 0;
    return c;
}

FpPoly random_poly(std::mt19937_64& rng, std::uint64_t p, int deg) {
    std::vector<std::uint64_t> c(deg + 1);
    for (auto& x : c) x = rng() % p;
    c[deg] = 1;
    return FpPoly(p, c);
}

}  // namespace

TEST_CASE("reduce_mod") {
    CHECK(reduce_mod(IntPoly{-1, 0, 1}, 7) == FpPoly(7, {6, 0, 1}));
    CHECK(reduce_mod(IntPoly{-2, 9, -6, 1}, 3) == FpPoly(3, {1, 0, 0, 1}));
    CHECK(reduce_mod(IntPoly{5, 4, 1}, 11).is_monic());
    CHECK_THROWS(reduce_mod(IntPoly{1, 1}, 2));
}

TEST_CASE("count_distinct_roots examples") {
    CHECK(count_distinct_roots(FpPoly(7, {6, 0, 1})) == 2);
    CHECK(count_distinct_roots(FpPoly(7, {1, 0, 1})) == 0);
    CHECK(count_distinct_roots(FpPoly(13, {1, 0, 1})) == 2);
    // same answers on the gcd route
    CHECK(count_distinct_roots(FpPoly(7, {6, 0, 1}), 0) == 2);
    CHECK(count_distinct_roots(FpPoly(13, {1, 0, 1}), 0) == 2);
    CHECK_THROWS(count_distinct_roots(FpPoly(7)));
}

TEST_CASE("gcd root count agrees with a full scan") {
    std::mt19937_64 rng(21);
    const auto primes = primes_between(3, 2000);
    for (int trial = 0; trial < 400; ++trial) {
        const std::uint64_t p = primes[rng() % primes.size()];
        const int deg = 1 + static_cast<int>(rng() % 12);
        FpPoly f = random_poly(rng, p, deg);
        if (trial % 3 == 0) f = fp::mul(f, fp::mul(FpPoly(p, {rng() % p, 1}), FpPoly(p, {rng() % p, 1})));
        CHECK(count_distinct_roots(f, 0) == brute_roots(f));
        CHECK(count_distinct_roots(f) == brute_roots(f));
    }
}

TEST_CASE("factor_degree_multiset examples") {
    CHECK(factor_degree_multiset(FpPoly(3, {1, 0, 1})).degrees == std::vector<unsigned>{2});
    CHECK(factor_degree_multiset(FpPoly(7, {6, 0, 1})).degrees == std::vector<unsigned>{1, 1});
    CHECK(factor_degree_multiset(FpPoly(11, {1, 1, 1, 1, 1})).degrees == std::vector<unsigned>{1, 1, 1, 1});
    const auto sq = factor_degree_multiset(fp::mul(FpPoly(7, {1, 0, 1}), FpPoly(7, {1, 0, 1})));
    CHECK_FALSE(sq.squarefree);
    CHECK(sq.degrees == std::vector<unsigned>{2});
    CHECK_THROWS(factor_degree_multiset(FpPoly(5)));
}

TEST_CASE("factor degrees sum to the radical degree and count the roots") {
    std::mt19937_64 rng(31);
    const auto primes = primes_between(3, 200);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t p = primes[rng() % primes.size()];
        FpPoly f = random_poly(rng, p, 1 + static_cast<int>(rng() % 10));
        if (trial % 4 == 0) f = fp::mul(f, f);
        if (trial % 7 == 0) {
            // a p-th power factor: (x^p - c) = (x - c)^p
            std::vector<std::uint64_t> c(p + 1);
            c[0] = p - (rng() % p);
            c[p] = 1;
            f = fp::mul(f, FpPoly(p, c));
        }
        const auto fd = factor_degree_multiset(f);
        const FpPoly rad = fp::radical(f);
        CHECK(std::accumulate(fd.degrees.begin(), fd.degrees.end(), 0U) == static_cast<unsigned>(rad.degree()));
        CHECK(static_cast<unsigned>(std::count(fd.degrees.begin(), fd.degrees.end(), 1U)) == brute_roots(rad));
        CHECK(brute_roots(rad) == brute_roots(f));
        CHECK(fd.squarefree == (rad.degree() == f.degree()));
    }
}

TEST_CASE("irreducible reductions give a single degree") {
    // x^2 - 2 over F_5: 2 is not a square mod 5.
    CHECK(factor_degree_multiset(FpPoly(5, {3, 0, 1})).degrees == std::vector<unsigned>{2});
    // x^4 + x^3 + x^2 + x + 1 over F_7: 7 has order 4 mod 5.
    CHECK(factor_degree_multiset(FpPoly(7, {1, 1, 1, 1, 1})).degrees == std::vector<unsigned>{4});
    // over F_19 (19 = -1 mod 5): two quadratics.
    CHECK(factor_degree_multiset(FpPoly(19, {1, 1, 1, 1, 1})).degrees == std::vector<unsigned>{2, 2});
}

TEST_CASE("resultant basics") {
    // Res(x - a, g) = g(a)
    const FpPoly g(101, {5, 7, 3});
    CHECK(fp::resultant(FpPoly(101, {101 - 4, 1}), g) == g.eval(4));
    CHECK(fp::resultant(FpPoly(101, {1, 0, 1}), FpPoly(101, {1, 0, 1})) == 0);
}

TEST_CASE("falling_factorial") {
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(1, 2) == 0);
    CHECK(falling_factorial(6, 6) == 720);
    CHECK(falling_factorial(9, 0) == 1);
    CHECK(falling_factorial_u64(7, 3) == 210);
}

TEST_CASE("moment identity (N)_k^2 = sum_l C(k,l)^2 l! (N)_{2k-l}") {
    for (std::uint64_t n = 0; n <= 60; ++n) {
        for (unsigned k = 0; k <= 6; ++k) {
            mpz_class rhs = 0;
            for (unsigned l = 0; l <= k; ++l) {
                mpz_class binom, fact;
                mpz_bin_uiui(binom.get_mpz_t(), k, l);
                mpz_fac_ui(fact.get_mpz_t(), l);
                rhs += binom * binom * fact * falling_factorial(n, 2 * k - l);
            }
            const mpz_class lhs = falling_factorial(n, k);
            CHECK(lhs * lhs == rhs);
        }
    }
}

TEST_CASE("moment constants") {
    CHECK(moment_constant(1) == 2);
    CHECK(moment_constant(2) == 7);
    CHECK(moment_constant(3) == 34);
    // E[((r)_k)^2] over a uniform permutation of a large set, by the identity with every E (r)_j = 1.
    for (unsigned k = 1; k <= 6; ++k) {
        mpz_class brute = 0;
        for (unsigned l = 0; l <= k; ++l) {
            mpz_class binom, fact;
            mpz_bin_uiui(binom.get_mpz_t(), k, l);
            mpz_fac_ui(fact.get_mpz_t(), l);
            brute += binom * binom * fact;
        }
        CHECK(moment_constant(k) == brute);
    }
}

TEST_CASE("mth_power_residues") {
    CHECK(mth_power_residues(7, 3) == std::set<std::uint64_t>{0, 1, 6});
    CHECK(mth_power_residues(5, 2) == std::set<std::uint64_t>{0, 1, 4});
    CHECK(mth_power_residues(7, 2).size() == 4);
    for (std::uint64_t p : primes_between(3, 300))
        for (std::uint64_t m = 2; m < p; ++m)
            if ((p - 1) % m == 0) CHECK(mth_power_residues(p, m).size() == (p - 1) / m + 1);
    CHECK_THROWS(mth_power_residues(7, 4));
}

TEST_CASE("sieve_range") {
    CHECK(sieve_range(10).primes == std::vector<std::uint64_t>{11, 13, 17, 19});
    const auto r = sieve_range(100);
    CHECK(r.primes.size() == 21);
    std::size_t brute = 0;
    for (std::uint64_t n = 101; n <= 200; ++n) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= n; ++d) prime = prime && n % d;
        brute += prime;
    }
    CHECK(brute == 21);
    // small segments exercise the boundary handling
    const auto big = sieve_range(50000, 1000);
    CHECK(big.primes == sieve_range(50000).primes);
    for (auto p : big.primes) {
        CHECK(is_prime_u64(p));
        CHECK(p > 50000);
        CHECK(p <= 100000);
    }
    CHECK_THROWS(sieve_range(4));
}

TEST_CASE("is_prime_u64") {
    CHECK(is_prime_u64(2));
    CHECK_FALSE(is_prime_u64(1));
    CHECK(is_prime_u64(18446744073709551557ULL));
    CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(prev_prime(std::uint64_t{1} << 62) == 4611686018427387847ULL);
}
