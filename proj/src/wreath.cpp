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

#include "tdlab/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tdlab {

namespace {

bool perm_parity_odd(const std::vector<unsigned>& p) {
    std::vector<bool> seen(p.size(), false);
    bool odd = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) odd = !odd;
    }
    return odd;
}

SignedPerm from_perm(std::vector<unsigned> perm) {
    std::vector<std::uint8_t> flips(perm.size(), 0);
    return SignedPerm(std::move(flips), std::move(perm));
}

std::vector<unsigned> cycle(unsigned m, unsigned from, unsigned to) {
    // cycle from -> from+1 -> ... -> to -> from
    std::vector<unsigned> p(m);
    std::iota(p.begin(), p.end(), 0U);
    for (unsigned i = from; i < to; ++i) p[i] = i + 1;
    p[to] = from;
    return p;
}

SignedPerm commutator(const SignedPerm& a, const SignedPerm& b) { return inverse(a) * inverse(b) * a * b; }

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

std::uint64_t factorial(unsigned k) {
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

SignedPerm::SignedPerm(std::vector<std::uint8_t> flips, std::vector<unsigned> perm)
    : flips_(std::move(flips)), perm_(std::move(perm)) {
    const std::size_t m = perm_.size();
    if (m == 0 || m > 16 || flips_.size() != m) throw std::invalid_argument("SignedPerm: bad degree");
    std::vector<bool> hit(m, false);
    for (unsigned x : perm_) {
        if (x >= m || hit[x]) throw std::invalid_argument("SignedPerm: not a permutation");
        hit[x] = true;
    }
    for (auto& f : flips_) {
        if (f > 1) throw std::invalid_argument("SignedPerm: flips must be 0 or 1");
    }
}

SignedPerm SignedPerm::identity(unsigned m) {
    std::vector<unsigned> p(m);
    std::iota(p.begin(), p.end(), 0U);
    return from_perm(std::move(p));
}

unsigned SignedPerm::apply(unsigned point) const noexcept {
    const unsigned j = perm_[point / 2];
    return 2 * j + ((point & 1U) ^ flips_[j]);
}

bool SignedPerm::even_flips() const noexcept {
    return std::count(flips_.begin(), flips_.end(), std::uint8_t{1}) % 2 == 0;
}

bool SignedPerm::even_perm() const noexcept { return !perm_parity_odd(perm_); }

std::vector<std::uint8_t> SignedPerm::points() const {
    std::vector<std::uint8_t> r(2 * perm_.size());
    for (unsigned x = 0; x < r.size(); ++x) r[x] = static_cast<std::uint8_t>(apply(x));
    return r;
}

SignedPerm operator*(const SignedPerm& x, const SignedPerm& y) {
    const std::size_t m = x.perm_.size();
    if (y.perm_.size() != m) throw std::invalid_argument("SignedPerm: degree mismatch");
    std::vector<unsigned> p(m);
    std::vector<std::uint8_t> f(m);
    for (std::size_t i = 0; i < m; ++i) {
        const unsigned t = y.perm_[i];
        const unsigned j = x.perm_[t];
        p[i] = j;
        f[j] = x.flips_[j] ^ y.flips_[t];
    }
    return SignedPerm(std::move(f), std::move(p));
}

SignedPerm inverse(const SignedPerm& x) {
    const std::size_t m = x.perm_.size();
    std::vector<unsigned> p(m);
    std::vector<std::uint8_t> f(m);
    // x: (i,s) -> (j, s+a_j) with j = sigma(i); inverse sends (j, s) -> (i, s + a_j)
    for (std::size_t i = 0; i < m; ++i) {
        const unsigned j = x.perm_[i];
        p[j] = static_cast<unsigned>(i);
        f[i] = x.flips_[j];
    }
    return SignedPerm(std::move(f), std::move(p));
}

std::uint64_t orbit_count_formula(unsigned k) {
    if (k == 0 || k > 20) throw std::invalid_argument("orbit_count_formula: need 1 <= k <= 20");
    std::uint64_t total = 0;
    for (unsigned k2 = 0; 2 * k2 <= k; ++k2) {
        const unsigned k1 = k - 2 * k2;
        total += factorial(k) / (factorial(k1) * (std::uint64_t{1} << k2) * factorial(k2));
    }
    return total;
}

std::uint64_t involution_count(unsigned k) {
    if (k == 0 || k > 10) throw std::invalid_argument("involution_count: need 1 <= k <= 10");
    std::vector<unsigned> s(k);
    std::iota(s.begin(), s.end(), 0U);
    std::uint64_t n = 0;
    do {
        bool inv = true;
        for (unsigned i = 0; i < k && inv; ++i) inv = s[s[i]] == i;
        n += inv;
    } while (std::next_permutation(s.begin(), s.end()));
    return n;
}

std::vector<SignedPerm> wreath_generators(unsigned m, WreathSubgroup which) {
    if (m < 1 || m > 16) throw std::invalid_argument("wreath_generators: need 1 <= m <= 16");
    std::vector<SignedPerm> gens;
    if (which == WreathSubgroup::full) {
        std::vector<std::uint8_t> f(m, 0);
        f[0] = 1;
        gens.push_back(SignedPerm(f, SignedPerm::identity(m).perm()));
        if (m >= 2) {
            gens.push_back(from_perm(cycle(m, 0, 1)));
            gens.push_back(from_perm(cycle(m, 0, m - 1)));
        }
        return gens;
    }
    if (m == 1) return {SignedPerm::identity(1)};
    std::vector<std::uint8_t> f(m, 0);
    f[0] = f[1] = 1;
    gens.push_back(SignedPerm(f, SignedPerm::identity(m).perm()));
    if (m >= 3) {
        gens.push_back(from_perm(cycle(m, 0, 2)));
        // (1 2 ... m) is even for odd m; otherwise use (2 ... m)
        if (m >= 4) gens.push_back(from_perm(m % 2 ? cycle(m, 0, m - 1) : cycle(m, 1, m - 1)));
    }
    return gens;
}

std::vector<SignedPerm> closure(const std::vector<SignedPerm>& gens, std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("closure: empty generating set");
    std::set<SignedPerm> seen{SignedPerm::identity(gens[0].degree())};
    std::vector<SignedPerm> queue(seen.begin(), seen.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& g : gens) {
            SignedPerm x = g * queue[head];
            if (!seen.insert(x).second) continue;
            if (seen.size() > cap) throw std::length_error("closure: group larger than cap");
            queue.push_back(std::move(x));
        }
    }
    return {seen.begin(), seen.end()};
}

std::uint64_t brute_orbits(unsigned m, unsigned k, WreathSubgroup which) {
    if (m < 1 || m > 6 || k < 1 || k > m) throw std::invalid_argument("brute_orbits: need 1 <= k <= m <= 6");
    const unsigned pts = 2 * m;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) total *= pts;  // <= 12^6

    std::vector<std::vector<std::uint8_t>> moves;
    for (const auto& g : wreath_generators(m, which)) moves.push_back(g.points());

    UnionFind uf(total);
    std::vector<bool> distinct(total, false);
    std::vector<unsigned> digits(k);
    for (std::uint64_t t = 0; t < total; ++t) {
        std::uint64_t r = t;
        unsigned used = 0;
        bool ok = true;
        for (unsigned i = 0; i < k; ++i) {
            digits[i] = static_cast<unsigned>(r % pts);
            r /= pts;
            if (used >> digits[i] & 1U) ok = false;
            used |= 1U << digits[i];
        }
        if (!ok) continue;
        distinct[t] = true;
        for (const auto& mv : moves) {
            std::uint64_t img = 0;
            for (unsigned i = k; i-- > 0;) img = img * pts + mv[digits[i]];
            uf.unite(static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(img));
        }
    }
    std::uint64_t orbits = 0;
    for (std::uint64_t t = 0; t < total; ++t)
        if (distinct[t] && uf.find(static_cast<std::uint32_t>(t)) == t) ++orbits;
    return orbits;
}

DerivedCheck derived_subgroup_check(unsigned m) {
    if (m < 2 || m > 6) throw std::invalid_argument("derived_subgroup_check: need 2 <= m <= 6");
    const auto gens = wreath_generators(m, WreathSubgroup::full);
    DerivedCheck r;
    r.group_order = closure(gens).size();

    // normal closure of the commutators of generators
    std::vector<SignedPerm> ngens;
    for (const auto& a : gens)
        for (const auto& b : gens) ngens.push_back(commutator(a, b));
    std::vector<SignedPerm> h = closure(ngens);
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t i = 0; i < ngens.size() && !grew; ++i)
            for (const auto& g : gens) {
                SignedPerm c = g * ngens[i] * inverse(g);
                if (std::binary_search(h.begin(), h.end(), c)) continue;
                ngens.push_back(std::move(c));
                h = closure(ngens);
                grew = true;
                break;
            }
    }
    r.derived_order = h.size();
    r.index = r.group_order / r.derived_order;
    r.equals_expected = std::all_of(h.begin(), h.end(), [](const SignedPerm& x) { return x.even_flips() && x.even_perm(); }) &&
                        r.derived_order == (std::uint64_t{1} << (m - 1)) * factorial(m) / 2;
    r.pass = r.equals_expected && r.index == 4 && r.group_order % r.derived_order == 0;
    return r;
}

std::uint64_t induced_block_order(const std::vector<SignedPerm>& gens) {
    std::set<std::vector<std::uint8_t>> induced;
    for (const auto& g : closure(gens)) {
        const auto pts = g.points();
        bool stab = true;
        for (unsigned x = 0; x < 4 && stab; ++x) stab = pts[x] < 4;
        if (stab) induced.insert({pts[0], pts[1], pts[2], pts[3]});
    }
    return induced.size();
}

BlockCheck complement_block_check(unsigned m) {
    if (m < 4 || m > 6) throw std::invalid_argument("complement_block_check: need 4 <= m <= 6");
    const std::vector<SignedPerm> k_gens{from_perm(cycle(m, 0, 1)), from_perm(cycle(m, 0, m - 1))};

    std::vector<SignedPerm> twisted;
    for (const auto& g : k_gens)
        twisted.push_back(SignedPerm(std::vector<std::uint8_t>(m, g.even_perm() ? 0 : 1), g.perm()));

    std::vector<SignedPerm> minus_k = k_gens;
    minus_k.push_back(SignedPerm(std::vector<std::uint8_t>(m, 1), SignedPerm::identity(m).perm()));

    BlockCheck r;
    r.k_order = induced_block_order(k_gens);
    r.twisted_order = induced_block_order(twisted);
    r.minus_k_order = induced_block_order(minus_k);
    r.full_order = induced_block_order(wreath_generators(m, WreathSubgroup::full));
    r.pass = r.k_order < 8 && r.twisted_order < 8 && r.minus_k_order < 8 && r.full_order == 8;
    return r;
}

}  // namespace tdlab
