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

#include <random>

#include "doctest.h"
#include "tdlab/fp_poly.hpp"
#include "tdlab/int_poly.hpp"
#include "tdlab/primes.hpp"
#include "tdlab/tridiag.hpp"

using namespace tdlab;

namespace {

TridiagMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<std::int64_t> v(n), w(n ? n - 1 : 0);
    for (auto& x : v) x = d(rng);
    for (auto& x : w) x = d(rng);
    return TridiagMatrix(v, w);
}

// q(a x + b) with rational a, b; fails the test if the result is not integral.
IntPoly substitute_affine(const IntPoly& q, const mpq_class& a, const mpq_class& b) {
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
        REQUIRE(c.get_den() == 1);
        out.push_back(c.get_num());
    }
    return IntPoly(out);
}

// Determinant of the Sylvester matrix of (f, g) over Q.
mpz_class sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    const int m = f.degree(), n = g.degree();
    const int size = m + n;
    std::vector<std::vector<mpq_class>> a(size, std::vector<mpq_class>(size));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) a[r][r + i] = mpq_class(f[m - i]);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) a[n + r][r + i] = mpq_class(g[n - i]);
    mpq_class det = 1;
    for (int k = 0; k < size; ++k) {
        int piv = k;
        while (piv < size && a[piv][k] == 0) ++piv;
        if (piv == size) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (int i = k + 1; i < size; ++i) {
            const mpq_class f2 = a[i][k] / a[k][k];
            for (int j = k; j < size; ++j) a[i][j] -= f2 * a[k][j];
        }
    }
    det.canonicalize();
    return det.get_num();
}

}  // namespace

TEST_CASE("char_poly examples") {
    CHECK(char_poly(TridiagMatrix::constant(2, 0)) == IntPoly{-1, 0, 1});
    CHECK(char_poly(TridiagMatrix()) == IntPoly{1});
    CHECK(char_poly(TridiagMatrix({1, 2, 3}, {1, 1})) == IntPoly{-2, 9, -6, 1});
    CHECK(char_poly(TridiagMatrix({0, 0, 0}, {1, 2})) == IntPoly{0, -5, 0, 1});
    CHECK_THROWS_AS(TridiagMatrix({1, 2}, {}), std::invalid_argument);
}

TEST_CASE("char_poly_oracle examples") {
    CHECK(char_poly_oracle(TridiagMatrix({5}, {})) == IntPoly{-5, 1});
    CHECK(char_poly_oracle(TridiagMatrix({0, 0}, {1})) == IntPoly{-1, 0, 1});
    CHECK(char_poly_oracle(TridiagMatrix({1, 2, 3}, {1, 1})) == IntPoly{-2, 9, -6, 1});
    CHECK(char_poly_oracle(TridiagMatrix()) == IntPoly{1});
}

TEST_CASE("char_poly agrees with the determinant oracle and is monic") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = rng() % 31;
        const auto m = random_matrix(rng, n, -5, 5);
        const IntPoly p = char_poly(m);
        CHECK(p == char_poly_oracle(m));
        CHECK(p.degree() == static_cast<int>(n));
        CHECK(p.is_monic());
    }
}

TEST_CASE("chebyshev_U") {
    CHECK(chebyshev_U(0) == IntPoly{1});
    CHECK(chebyshev_U(1) == IntPoly{0, 2});
    CHECK(chebyshev_U(3) == IntPoly{0, -4, 0, 8});
    for (unsigned n = 0; n < 20; ++n) CHECK(chebyshev_U(n).leading() == mpz_class(1) << n);
}

TEST_CASE("constant diagonal gives U_n((x - v)/2)") {
    for (std::int64_t v : {0, 3, -2}) {
        for (unsigned n = 0; n <= 200; n += (n < 20 ? 1 : 37)) {
            const IntPoly expect = substitute_affine(chebyshev_U(n), mpq_class(1, 2), mpq_class(-v, 2));
            CHECK(char_poly(TridiagMatrix::constant(n, v)) == expect);
        }
    }
}

TEST_CASE("constant off-diagonal b, zero diagonal gives b^n U_n(x/(2b))") {
    for (std::int64_t b : {2, 3}) {
        for (unsigned n = 1; n <= 100; n += 11) {
            TridiagMatrix m(std::vector<std::int64_t>(n, 0), std::vector<std::int64_t>(n - 1, b));
            mpz_class bn;
            mpz_ui_pow_ui(bn.get_mpz_t(), b, n);
            const IntPoly expect = substitute_affine(chebyshev_U(n) * bn, mpq_class(1, 2 * b), 0);
            CHECK(char_poly(m) == expect);
        }
    }
}

TEST_CASE("zero diagonal: spectrum symmetry and constant term") {
    std::mt19937_64 rng(11);
    for (unsigned n = 1; n <= 40; ++n) {
        std::vector<std::int64_t> w(n - 1);
        for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng() % 3);
        const IntPoly p = char_poly(TridiagMatrix(std::vector<std::int64_t>(n, 0), w));
        CHECK(p.reflect() == (n % 2 ? -p : p));
        if (n % 2) {
            CHECK(p[0] == 0);
        } else {
            mpz_class prod = (n / 2) % 2 ? -1 : 1;
            for (unsigned j = 1; j <= n / 2; ++j) prod *= mpz_class(w[2 * j - 2]) * w[2 * j - 2];
            CHECK(p[0] == prod);
        }
    }
}

TEST_CASE("zero off-diagonal entry splits the characteristic polynomial") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 20;
        auto m = random_matrix(rng, n, -4, 4);
        auto w = m.offdiag();
        const std::size_t cut = rng() % (n - 1);
        w[cut] = 0;
        std::vector<std::int64_t> v1(m.diag().begin(), m.diag().begin() + cut + 1);
        std::vector<std::int64_t> v2(m.diag().begin() + cut + 1, m.diag().end());
        std::vector<std::int64_t> w1(w.begin(), w.begin() + cut), w2(w.begin() + cut + 1, w.end());
        CHECK(char_poly(TridiagMatrix(m.diag(), w)) ==
              char_poly(TridiagMatrix(v1, w1)) * char_poly(TridiagMatrix(v2, w2)));
    }
}

TEST_CASE("height") {
    CHECK(height(IntPoly{-2, 9, -6, 1}) == 9);
    CHECK(height(IntPoly{1}) == 1);
    CHECK_THROWS_AS(height(IntPoly()), std::invalid_argument);
    const IntPoly u10 = substitute_affine(chebyshev_U(10), mpq_class(1, 2), 0);
    CHECK(height(char_poly(TridiagMatrix::constant(10, 0))) == height(u10));
}

TEST_CASE("height bound holds on random matrices") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_matrix(rng, 1 + rng() % 60, -6, 6);
        CHECK(height(char_poly(m)) <= height_bound(m));
    }
}

TEST_CASE("is_perfect_power") {
    auto r = is_perfect_power(IntPoly{4, 0, -4, 0, 1});
    REQUIRE(r);
    CHECK(r->exponent == 2);
    CHECK(r->root == IntPoly{-2, 0, 1});
    CHECK_FALSE(is_perfect_power(IntPoly{-1, 0, 1}));
    r = is_perfect_power(pow(IntPoly{1, 1}, 3));
    REQUIRE(r);
    CHECK(r->exponent == 3);
    CHECK(r->root == IntPoly{1, 1});
    CHECK_THROWS(is_perfect_power(IntPoly{1, 2}));

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 1 + rng() % 5;
        std::vector<mpz_class> c(d + 1);
        for (auto& x : c) x = static_cast<long>(rng() % 7) - 3;
        c[d] = 1;
        const IntPoly q(c);
        const unsigned m = 2 + rng() % 3;
        const auto got = is_perfect_power(pow(q, m));
        REQUIRE(got);
        CHECK(got->exponent % m == 0);
        CHECK(pow(got->root, got->exponent) == pow(q, m));
    }
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant(IntPoly{-1, 0, 1}) == 4);
    CHECK(discriminant(IntPoly{0, -1, 0, 1}) == 4);
    CHECK(discriminant(IntPoly{-1, -3, 0, 1}) == 81);
    CHECK(discriminant(IntPoly{1, 0, 1}) == -4);
    CHECK(discriminant(pow(IntPoly{1, 1}, 2) * IntPoly{3, 1}) == 0);
}

TEST_CASE("discriminant matches the Sylvester determinant and modular resultants") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        const auto m = random_matrix(rng, 2 + rng() % 12, -5, 5);
        const IntPoly p = char_poly(m);
        const mpz_class disc = discriminant(p);
        const int n = p.degree();
        mpz_class expect = sylvester_resultant(p, p.derivative());
        if ((n * (n - 1) / 2) % 2) expect = -expect;
        CHECK(disc == expect);
        for (int k = 0; k < 20; ++k) {
            const std::uint64_t q = prev_prime((std::uint64_t{1} << 40) + (rng() % (std::uint64_t{1} << 40)));
            const Modulus mod(q);
            std::uint64_t r = fp::resultant(reduce_mod(p, q), reduce_mod(p.derivative(), q));
            if ((n * (n - 1) / 2) % 2) r = mod.neg(r);
            CHECK(mod.reduce(disc) == r);
        }
    }
}

TEST_CASE("taylor shift and reflect") {
    const IntPoly p{-2, 9, -6, 1};
    const IntPoly s = p.taylor_shift(3);
    for (long x = -5; x <= 5; ++x) CHECK(s.eval(x) == p.eval(x + 3));
    CHECK(p.reflect().eval(2) == p.eval(-2));
    CHECK(IntPoly{}.degree() == IntPoly::kZeroDegree);
}
