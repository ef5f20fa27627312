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

#include "tdlab/psl2.hpp"

#include <stdexcept>

#include "tdlab/primes.hpp"

namespace tdlab {

namespace {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

u32 mod(std::int64_t v, u32 p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<u32>(r < 0 ? r + p : r);
}

u32 inv_mod(u32 a, u32 p) {
    if (a % p == 0) throw std::domain_error("inverse of zero mod p");
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        const std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return mod(t, p);
}

}  // namespace

SL2Mat SL2Mat::make(u32 p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    if (p < 3) throw std::invalid_argument("SL2Mat: p must be an odd prime");
    SL2Mat m{p, mod(a, p), mod(b, p), mod(c, p), mod(d, p)};
    const u64 det = (static_cast<u64>(m.a) * m.d + static_cast<u64>(p - m.b) * m.c) % p;
    if (det != 1) throw std::invalid_argument("SL2Mat: determinant is not 1");
    return m;
}

SL2Mat operator*(const SL2Mat& x, const SL2Mat& y) {
    const u64 p = x.p;
    return SL2Mat{x.p,
                  static_cast<u32>((static_cast<u64>(x.a) * y.a + static_cast<u64>(x.b) * y.c) % p),
                  static_cast<u32>((static_cast<u64>(x.a) * y.b + static_cast<u64>(x.b) * y.d) % p),
                  static_cast<u32>((static_cast<u64>(x.c) * y.a + static_cast<u64>(x.d) * y.c) % p),
                  static_cast<u32>((static_cast<u64>(x.c) * y.b + static_cast<u64>(x.d) * y.d) % p)};
}

SL2Mat inverse(const SL2Mat& x) {
    const u32 p = x.p;
    return SL2Mat{p, x.d, x.b ? p - x.b : 0, x.c ? p - x.c : 0, x.a};
}

PSL2Elem::PSL2Elem(const SL2Mat& m) : m_(m) {
    const u32 p = m.p;
    const u32 half = (p - 1) / 2;
    const u32 first = m.a ? m.a : (m.b ? m.b : (m.c ? m.c : m.d));
    if (first > half) {
        m_.a = m.a ? p - m.a : 0;
        m_.b = m.b ? p - m.b : 0;
        m_.c = m.c ? p - m.c : 0;
        m_.d = m.d ? p - m.d : 0;
    }
}

PSL2Elem PSL2Elem::identity(u32 p) { return PSL2Elem(SL2Mat{p, 1, 0, 0, 1}); }

u64 PSL2Elem::packed() const noexcept {
    return (static_cast<u64>(m_.a) << 48) | (static_cast<u64>(m_.b) << 32) | (static_cast<u64>(m_.c) << 16) | m_.d;
}

u64 psl2_order(u32 p) noexcept { return static_cast<u64>(p) * (static_cast<u64>(p) * p - 1) / 2; }

ProjPoint act(const PSL2Elem& g, const ProjPoint& pt) {
    const SL2Mat& m = g.rep();
    const u64 p = m.p;
    if (pt.infinite) {
        // [1:0] -> [a:c]
        if (m.c == 0) return ProjPoint::at_infinity();
        return ProjPoint::finite(static_cast<u32>(static_cast<u64>(m.a) * inv_mod(m.c, m.p) % p));
    }
    const u64 num = (static_cast<u64>(m.a) * pt.x + m.b) % p;
    const u64 den = (static_cast<u64>(m.c) * pt.x + m.d) % p;
    if (den == 0) return ProjPoint::at_infinity();
    return ProjPoint::finite(static_cast<u32>(num * inv_mod(static_cast<u32>(den), m.p) % p));
}

PSL2Elem transfer_mat(std::int64_t lambda, std::int64_t v, u32 p) {
    return PSL2Elem(SL2Mat::make(p, lambda - v, -1, 1, 0));
}

PSL2Elem dyson_transfer_mat(std::int64_t lambda, std::int64_t w, u32 p) {
    const u32 wm = mod(w, p);
    if (wm == 0) throw std::invalid_argument("dyson_transfer_mat: w must be nonzero mod p");
    const u64 wi = inv_mod(wm, p);
    const u64 l = mod(lambda, p);
    return PSL2Elem(SL2Mat{p, static_cast<u32>(l * wi % p), p - wm, static_cast<u32>(wi), 0});
}

u64 element_order(const PSL2Elem& g) {
    const PSL2Elem e = PSL2Elem::identity(g.prime());
    PSL2Elem x = g;
    u64 n = 1;
    while (!(x == e)) {
        x = x * g;
        ++n;
    }
    return n;
}

unsigned fixed_point_count(const PSL2Elem& g) {
    unsigned count = act(g, ProjPoint::at_infinity()) == ProjPoint::at_infinity();
    for (u32 x = 0; x < g.prime(); ++x) count += act(g, ProjPoint::finite(x)) == ProjPoint::finite(x);
    return count;
}

PSL2Indexer::PSL2Indexer(u32 p) : p_(p), half_((p - 1) / 2), order_(psl2_order(p)), inv_(p) {
    if (p < 3 || p >= (1U << 16) || !is_prime_u64(p)) throw std::invalid_argument("PSL2Indexer: need an odd prime below 2^16");
    for (u32 a = 1; a < p; ++a) inv_[a] = inv_mod(a, p);
}

u64 PSL2Indexer::index(const PSL2Elem& g) const noexcept {
    const SL2Mat& m = g.rep();
    const u64 p = p_;
    if (m.a) return ((m.a - 1) * p + m.b) * p + m.c;
    return half_ * p * p + (m.b - 1) * p + m.d;
}

PSL2Elem PSL2Indexer::element(u64 index) const {
    if (index >= order_) throw std::out_of_range("PSL2Indexer::element");
    const u64 p = p_;
    SL2Mat m{p_, 0, 0, 0, 0};
    if (index < half_ * p * p) {
        m.a = static_cast<u32>(index / (p * p) + 1);
        m.b = static_cast<u32>(index / p % p);
        m.c = static_cast<u32>(index % p);
        m.d = static_cast<u32>((1 + static_cast<u64>(m.b) * m.c) % p * inv_[m.a] % p);
    } else {
        const u64 r = index - half_ * p * p;
        m.b = static_cast<u32>(r / p + 1);
        m.d = static_cast<u32>(r % p);
        m.c = p_ - inv_[m.b];
    }
    return PSL2Elem(m);
}

}  // namespace tdlab
