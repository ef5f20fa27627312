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

#include <bit>
#include <numeric>

#include "doctest.h"
#include "tdlab/cohomology.hpp"
#include "tdlab/wreath.hpp"

using namespace tdlab;

namespace {

SignedPerm random_elem(unsigned m, std::uint64_t& s) {
    auto next = [&s] {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    };
    std::vector<unsigned> p(m);
    std::iota(p.begin(), p.end(), 0U);
    for (unsigned i = m; i > 1; --i) std::swap(p[i - 1], p[next() % i]);
    std::vector<std::uint8_t> f(m);
    for (auto& x : f) x = next() & 1;
    return SignedPerm(f, p);
}

// Counts cocycles by choosing values on two generators and extending along a BFS.
std::uint64_t cocycles_from_generators(const CocycleSystem& sys, const std::vector<std::vector<unsigned>>& gens) {
    const std::size_t order = sys.group_order();
    const unsigned dim = sys.module_dim();
    const std::size_t id = 0;  // identity is the first permutation in lexicographic order
    std::vector<std::size_t> gi;
    for (const auto& g : gens) gi.push_back(sys.index_of(g));
    std::uint64_t count = 0;
    const std::uint32_t span = 1U << dim;
    for (std::uint32_t a = 0; a < span; ++a)
        for (std::uint32_t b = 0; b < (gens.size() > 1 ? span : 1U); ++b) {
            const std::uint32_t val[2] = {a, b};
            std::vector<std::uint32_t> f(order, 0);
            std::vector<bool> seen(order, false);
            std::vector<std::size_t> queue{id};
            seen[id] = true;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const auto& x = sys.elements()[queue[head]];
                for (std::size_t j = 0; j < gi.size(); ++j) {
                    const auto& s = sys.elements()[gi[j]];
                    std::vector<unsigned> sx(x.size());
                    for (std::size_t i = 0; i < x.size(); ++i) sx[i] = s[x[i]];
                    const std::size_t y = sys.index_of(sx);
                    if (seen[y]) continue;
                    seen[y] = true;
                    f[y] = val[j] ^ sys.act(gi[j], f[queue[head]]);
                    queue.push_back(y);
                }
            }
            REQUIRE(queue.size() == order);
            count += sys.is_cocycle(f);
        }
    return count;
}

std::vector<unsigned> cyc(unsigned n, unsigned from, unsigned to) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0U);
    for (unsigned i = from; i < to; ++i) p[i] = i + 1;
    p[to] = from;
    return p;
}

}  // namespace

TEST_CASE("signed permutations: group laws and action") {
    std::uint64_t seed = 7;
    for (int t = 0; t < 200; ++t) {
        const unsigned m = 2 + t % 5;
        const auto x = random_elem(m, seed), y = random_elem(m, seed), z = random_elem(m, seed);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * inverse(x) == SignedPerm::identity(m));
        for (unsigned pt = 0; pt < 2 * m; ++pt) {
            CHECK((x * y).apply(pt) == x.apply(y.apply(pt)));
            CHECK(x.apply(pt) / 2 == x.apply(pt ^ 1U) / 2);  // blocks go to blocks
        }
        CHECK((x * y).even_flips() == (x.even_flips() == y.even_flips()));
        CHECK((x * y).even_perm() == (x.even_perm() == y.even_perm()));
    }
    CHECK_THROWS(SignedPerm({0, 0}, {0, 0}));
    CHECK_THROWS(SignedPerm({0, 2}, {0, 1}));
}

TEST_CASE("orbit count formula against involution counts") {
    const std::vector<std::uint64_t> golden{1, 2, 4, 10, 26, 76, 232, 764};
    for (unsigned k = 1; k <= 8; ++k) {
        CHECK(orbit_count_formula(k) == golden[k - 1]);
        CHECK(involution_count(k) == golden[k - 1]);
    }
    CHECK_THROWS(orbit_count_formula(0));
}

TEST_CASE("generator sets give groups of the right order") {
    std::uint64_t fact = 1;
    for (unsigned m = 1; m <= 6; ++m) {
        fact *= m;
        CHECK(closure(wreath_generators(m, WreathSubgroup::full)).size() == (std::uint64_t{1} << m) * fact);
        if (m >= 2) {
            const auto h = closure(wreath_generators(m, WreathSubgroup::derived));
            CHECK(h.size() == (std::uint64_t{1} << (m - 1)) * fact / 2);
            for (const auto& x : h) CHECK((x.even_flips() && x.even_perm()));
        }
    }
}

TEST_CASE("U[m] has order 2^(m-1) and is stable under block permutations") {
    for (unsigned m = 2; m <= 6; ++m) {
        std::vector<SignedPerm> u;
        for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
            if (std::popcount(mask) % 2) continue;
            std::vector<std::uint8_t> f(m);
            for (unsigned i = 0; i < m; ++i) f[i] = mask >> i & 1U;
            u.push_back(SignedPerm(f, SignedPerm::identity(m).perm()));
        }
        CHECK(u.size() == (std::size_t{1} << (m - 1)));
        const auto s = SignedPerm(std::vector<std::uint8_t>(m, 0), cyc(m, 0, m - 1));
        const auto t = SignedPerm(std::vector<std::uint8_t>(m, 0), cyc(m, 0, 1));
        for (const auto& a : u)
            for (const auto& g : {s, t}) {
                const auto c = g * a * inverse(g);
                CHECK(c.even_flips());
                CHECK(c.perm() == SignedPerm::identity(m).perm());
            }
    }
}

TEST_CASE("brute-force orbits match Burnside oracle") {
    CHECK(brute_orbits(3, 2, WreathSubgroup::full) == 2);
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned k = 1; k <= std::min(m, 5U); ++k) CHECK(brute_orbits(m, k, WreathSubgroup::full) == orbit_count_formula(k));
    CHECK(brute_orbits(6, 6, WreathSubgroup::full) == 76);

    const std::vector<std::vector<std::uint64_t>> derived{
        {2, 6}, {1, 3, 10}, {1, 2, 5, 19}, {1, 2, 4, 11, 39}, {1, 2, 4, 10, 27, 94}};
    for (unsigned m = 2; m <= 6; ++m)
        for (unsigned k = 1; k <= m; ++k) CHECK(brute_orbits(m, k, WreathSubgroup::derived) == derived[m - 2][k - 1]);
    CHECK_THROWS(brute_orbits(7, 2, WreathSubgroup::full));
    CHECK_THROWS(brute_orbits(3, 4, WreathSubgroup::full));
}

TEST_CASE("derived subgroup has index 4") {
    for (unsigned m = 2; m <= 6; ++m) {
        const auto r = derived_subgroup_check(m);
        CHECK(r.pass);
        CHECK(r.index == 4);
    }
    const auto r2 = derived_subgroup_check(2);
    CHECK(r2.group_order == 8);
    CHECK(r2.derived_order == 2);
    CHECK(derived_subgroup_check(3).derived_order == 12);
}

TEST_CASE("complements do not induce the full group on two blocks") {
    for (unsigned m = 4; m <= 6; ++m) {
        const auto r = complement_block_check(m);
        CHECK(r.pass);
        CHECK(r.k_order == 2);
        CHECK(r.twisted_order == 4);
        CHECK(r.minus_k_order == 4);
        CHECK(r.full_order == 8);
    }
}

TEST_CASE("H^1 dimensions match the brute-force oracle") {
    // rows: n = 3..6; columns: (S, full) (S, full/const) (S, perp/const) (A, full) (A, full/const) (A, perp/const)
    // n = 4 is exceptional for both quotient modules
    const unsigned golden[4][6] = {{1, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 1, 2}, {1, 0, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 1}};
    for (unsigned n = 3; n <= 6; ++n) {
        unsigned col = 0;
        for (auto g : {PermGroup::symmetric, PermGroup::alternating})
            for (auto mod : {CohomModule::full, CohomModule::full_mod_const, CohomModule::perp_mod_const}) {
                CAPTURE(n);
                CAPTURE(col);
                CHECK(h1_dimension(g, n, mod).h1 == golden[n - 3][col++]);
            }
        const auto full = h1_dimension(PermGroup::symmetric, n, CohomModule::full);
        CHECK(full.dim_b1 == n - 1);
        CHECK(full.module_dim == n);
    }
    CHECK_THROWS(h1_dimension(PermGroup::symmetric, 7, CohomModule::full));
}

TEST_CASE("cocycle counts from generator images agree with the pairwise system") {
    for (unsigned n = 3; n <= 4; ++n)
        for (auto g : {PermGroup::symmetric, PermGroup::alternating})
            for (auto mod : {CohomModule::full, CohomModule::full_mod_const, CohomModule::perp_mod_const}) {
                const CocycleSystem sys(g, n, mod);
                std::vector<std::vector<unsigned>> gens;
                if (g == PermGroup::symmetric)
                    gens = {cyc(n, 0, 1), cyc(n, 0, n - 1)};
                else if (n == 3)
                    gens = {cyc(3, 0, 2)};
                else
                    gens = {cyc(n, 0, 2), cyc(n, 1, n - 1)};
                CHECK(cocycles_from_generators(sys, gens) == (std::uint64_t{1} << sys.dim_z1()));
            }
}

TEST_CASE("explicit witness cocycle") {
    for (unsigned n : {4U, 6U}) {
        const auto w = witness_cocycle_check(n);
        CHECK(w.cocycle);
        CHECK_FALSE(w.coboundary);
    }
    CHECK_THROWS(witness_cocycle_check(5));
}
