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

#include "tdlab/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdlab {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

Modulus::Modulus(u64 p) : p_(p), small_(p < (u64{1} << 32)) {
    if (p < 3 || p % 2 == 0 || p >= (u64{1} << 63)) throw std::invalid_argument("Modulus: need an odd prime below 2^63");
}

u64 Modulus::pow(u64 a, u64 e) const noexcept {
    u64 r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u64 Modulus::inv(u64 a) const {
    a %= p_;
    if (a == 0) throw std::domain_error("Modulus::inv of zero");
    // Extended Euclid on signed 128-bit to avoid overflow for p near 2^63.
    __int128 t = 0, new_t = 1;
    __int128 r = p_, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<u64>(t);
}

u64 Modulus::reduce(const mpz_class& v) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return r.get_ui();
}

u64 Modulus::reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return static_cast<u64>(r);
}

std::int64_t Modulus::lift(u64 a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_) : static_cast<std::int64_t>(a);
}

bool Modulus::lazy_ok(std::size_t terms) const noexcept {
    if (!small_) return false;
    const u128 sq = static_cast<u128>(p_ - 1) * (p_ - 1);
    return sq * (terms + 1) + p_ < (static_cast<u128>(1) << 64);
}

FpPoly::FpPoly(u64 p, std::vector<u64> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 FpPoly::eval(u64 x) const {
    const Modulus m(p_);
    u64 acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = m.add(m.mul(acc, x), *it);
    return acc;
}

namespace fp {

namespace {

void check_same(const FpPoly& a, const FpPoly& b) {
    if (a.prime() != b.prime()) throw std::invalid_argument("FpPoly: mismatched moduli");
}

void trim(std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Raw product of coefficient vectors, reduced.
std::vector<u64> mul_raw(const std::vector<u64>& a, const std::vector<u64>& b, const Modulus& m) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> r(a.size() + b.size() - 1);
    const u64 p = m.value();
    if (m.lazy_ok(std::min(a.size(), b.size()))) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const u64 ai = a[i];
            if (!ai) continue;
            u64* out = r.data() + i;
            for (std::size_t j = 0; j < b.size(); ++j) out[j] += ai * b[j];
        }
        for (auto& v : r) v %= p;
    } else {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = m.add(r[i + j], m.mul(a[i], b[j]));
    }
    return r;
}

// In-place reduction of r modulo monic f (degree d >= 1); result has size <= d.
void reduce_raw(std::vector<u64>& r, const std::vector<u64>& f, const Modulus& m) {
    const std::size_t d = f.size() - 1;
    if (r.size() <= d) {
        trim(r);
        return;
    }
    const u64 p = m.value();
    if (m.lazy_ok(d + 1)) {
        // Each slot receives at most d contributions below (p-1)^2 on top of a value below p.
        std::vector<u64> neg_f(d);
        for (std::size_t j = 0; j < d; ++j) neg_f[j] = f[j] ? p - f[j] : 0;
        for (std::size_t i = r.size(); i-- > d;) {
            const u64 c = r[i] % p;
            r[i] = 0;
            if (!c) continue;
            u64* out = r.data() + (i - d);
            for (std::size_t j = 0; j < d; ++j) out[j] += c * neg_f[j];
        }
        r.resize(d);
        for (auto& v : r) v %= p;
    } else {
        for (std::size_t i = r.size(); i-- > d;) {
            const u64 c = r[i];
            r[i] = 0;
            if (!c) continue;
            for (std::size_t j = 0; j < d; ++j) r[i - d + j] = m.sub(r[i - d + j], m.mul(c, f[j]));
        }
        r.resize(d);
    }
    trim(r);
}

}  // namespace

FpPoly add(const FpPoly& a, const FpPoly& b) {
    check_same(a, b);
    const Modulus m(a.prime());
    std::vector<u64> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = m.add(a[i], b[i]);
    return FpPoly(a.prime(), std::move(r));
}

FpPoly sub(const FpPoly& a, const FpPoly& b) {
    check_same(a, b);
    const Modulus m(a.prime());
    std::vector<u64> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = m.sub(a[i], b[i]);
    return FpPoly(a.prime(), std::move(r));
}

FpPoly mul(const FpPoly& a, const FpPoly& b) {
    check_same(a, b);
    return FpPoly(a.prime(), mul_raw(a.coeffs(), b.coeffs(), Modulus(a.prime())));
}

FpPoly scale(const FpPoly& a, u64 c) {
    const Modulus m(a.prime());
    std::vector<u64> r = a.coeffs();
    for (auto& v : r) v = m.mul(v, c);
    return FpPoly(a.prime(), std::move(r));
}

FpPoly make_monic(const FpPoly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return scale(a, Modulus(a.prime()).inv(a.leading()));
}

FpPoly derivative(const FpPoly& a) {
    if (a.degree() < 1) return FpPoly(a.prime());
    const Modulus m(a.prime());
    std::vector<u64> r(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) r[i - 1] = m.mul(a[i], i % a.prime());
    return FpPoly(a.prime(), std::move(r));
}

void divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    check_same(a, b);
    if (b.is_zero()) throw std::domain_error("FpPoly division by zero");
    const Modulus m(a.prime());
    const int db = b.degree();
    if (a.degree() < db) {
        q = FpPoly(a.prime());
        r = a;
        return;
    }
    const u64 lead_inv = m.inv(b.leading());
    std::vector<u64> rem = a.coeffs();
    std::vector<u64> quo(a.degree() - db + 1);
    for (int i = a.degree(); i >= db; --i) {
        const u64 c = m.mul(rem[i], lead_inv);
        quo[i - db] = c;
        if (!c) continue;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = m.sub(rem[i - db + j], m.mul(c, b[j]));
    }
    rem.resize(db);
    q = FpPoly(a.prime(), std::move(quo));
    r = FpPoly(a.prime(), std::move(rem));
}

FpPoly rem(const FpPoly& a, const FpPoly& b) {
    if (b.is_monic() && b.degree() >= 1) {
        std::vector<u64> r = a.coeffs();
        reduce_raw(r, b.coeffs(), Modulus(a.prime()));
        return FpPoly(a.prime(), std::move(r));
    }
    FpPoly q(a.prime()), r(a.prime());
    divrem(a, b, q, r);
    return r;
}

FpPoly quot(const FpPoly& a, const FpPoly& b) {
    FpPoly q(a.prime()), r(a.prime());
    divrem(a, b, q, r);
    return q;
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    check_same(a, b);
    const Modulus m(a.prime());
    std::vector<u64> x = a.coeffs(), y = b.coeffs();
    auto monic = [&m](std::vector<u64>& v) {
        if (v.empty() || v.back() == 1) return;
        const u64 c = m.inv(v.back());
        for (auto& t : v) t = m.mul(t, c);
    };
    while (!y.empty()) {
        monic(y);
        if (y.size() == 1) return FpPoly(a.prime(), {1});
        reduce_raw(x, y, m);
        std::swap(x, y);
    }
    monic(x);
    return FpPoly(a.prime(), std::move(x));
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f) {
    check_same(a, b);
    if (!f.is_monic()) throw std::invalid_argument("mulmod: modulus polynomial must be monic");
    const Modulus m(a.prime());
    std::vector<u64> r = mul_raw(a.coeffs(), b.coeffs(), m);
    if (f.degree() == 0) return FpPoly(a.prime());
    reduce_raw(r, f.coeffs(), m);
    return FpPoly(a.prime(), std::move(r));
}

FpPoly powmod(const FpPoly& base, u64 e, const FpPoly& f) {
    if (!f.is_monic()) throw std::invalid_argument("powmod: modulus polynomial must be monic");
    const u64 p = base.prime();
    if (f.degree() == 0) return FpPoly(p);
    const Modulus m(p);
    std::vector<u64> b = base.coeffs();
    reduce_raw(b, f.coeffs(), m);
    std::vector<u64> r{1};
    // Left-to-right binary exponentiation.
    int top = 63;
    while (top >= 0 && !((e >> top) & 1)) --top;
    for (int bit = top; bit >= 0; --bit) {
        r = mul_raw(r, r, m);
        reduce_raw(r, f.coeffs(), m);
        if ((e >> bit) & 1) {
            r = mul_raw(r, b, m);
            reduce_raw(r, f.coeffs(), m);
        }
    }
    return FpPoly(p, std::move(r));
}

namespace {

// f(x) = g(x^p) with g^p = f over F_p (coefficients are fixed by Frobenius).
FpPoly pth_root(const FpPoly& f) {
    const u64 p = f.prime();
    std::vector<u64> r(f.degree() / p + 1);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f[i * p];
    return FpPoly(p, std::move(r));
}

}  // namespace

FpPoly radical(const FpPoly& f) {
    if (f.is_zero()) throw std::domain_error("radical of the zero polynomial");
    const u64 p = f.prime();
    if (f.degree() <= 0) return FpPoly(p, {1});
    const FpPoly d = derivative(f);
    if (d.is_zero()) return radical(pth_root(f));
    const FpPoly g = gcd(f, d);
    const FpPoly w = make_monic(quot(f, g));
    // Strip from g every factor already present in w; what is left is a p-th power.
    FpPoly r = g;
    FpPoly y = gcd(r, w);
    while (y.degree() > 0) {
        r = quot(r, y);
        y = gcd(r, y);
    }
    if (r.degree() <= 0) return w;
    return make_monic(mul(w, radical(pth_root(r))));
}

u64 resultant(const FpPoly& a_in, const FpPoly& b_in) {
    check_same(a_in, b_in);
    const Modulus m(a_in.prime());
    if (a_in.is_zero() || b_in.is_zero()) return 0;
    FpPoly a = a_in, b = b_in;
    u64 acc = 1;
    // Res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r), r = a mod b.
    while (true) {
        const int da = a.degree(), db = b.degree();
        if (db == 0) return m.mul(acc, m.pow(b.leading(), static_cast<u64>(da)));
        if (da == 0) return m.mul(acc, m.pow(a.leading(), static_cast<u64>(db)));
        FpPoly r = rem(a, b);
        if (r.is_zero()) return 0;
        if ((static_cast<long>(da) * db) % 2 == 1) acc = m.neg(acc);
        acc = m.mul(acc, m.pow(b.leading(), static_cast<u64>(da - r.degree())));
        a = std::move(b);
        b = std::move(r);
    }
}

}  // namespace fp

FpPoly reduce_mod(const IntPoly& p, u64 q) {
    const Modulus m(q);
    std::vector<u64> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = m.reduce(p.coeffs()[i]);
    return FpPoly(q, std::move(r));
}

unsigned count_distinct_roots(const FpPoly& f, u64 scan_factor) {
    if (f.is_zero()) throw std::invalid_argument("count_distinct_roots: zero polynomial");
    if (f.degree() == 0) return 0;
    const u64 p = f.prime();
    if (p < scan_factor * static_cast<u64>(f.degree())) {
        unsigned count = 0;
        for (u64 x = 0; x < p; ++x)
            if (f.eval(x) == 0) ++count;
        return count;
    }
    const FpPoly g = fp::make_monic(f);
    const FpPoly xp = fp::powmod(FpPoly::x(p), p, g);
    const FpPoly h = fp::sub(xp, fp::rem(FpPoly::x(p), g));
    return static_cast<unsigned>(fp::gcd(h, g).degree());
}

FactorDegrees factor_degree_multiset(const FpPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_degree_multiset: zero polynomial");
    const u64 p = f.prime();
    const Modulus m(p);
    FactorDegrees out;
    const FpPoly g0 = fp::radical(f);
    out.squarefree = g0.degree() == f.degree();
    const FpPoly x = FpPoly::x(p);
    if (g0.degree() < 2) {
        if (g0.degree() == 1) out.degrees.push_back(1);
        return out;
    }

    // Frobenius matrix mod g0: row j holds x^{jp}, so h^p = sum_j h_j x^{jp}.
    const std::size_t d = static_cast<std::size_t>(g0.degree());
    const FpPoly xp = fp::powmod(x, p, g0);
    std::vector<std::vector<u64>> frob(d, std::vector<u64>(d, 0));
    {
        FpPoly row(p, {1});
        for (std::size_t j = 0; j < d; ++j) {
            std::copy(row.coeffs().begin(), row.coeffs().end(), frob[j].begin());
            if (j + 1 < d) row = fp::mulmod(row, xp, g0);
        }
    }
    const bool lazy = m.lazy_ok(d);
    std::vector<u64> acc(d);
    auto frobenius = [&](const FpPoly& h) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t j = 0; j < h.coeffs().size(); ++j) {
            const u64 c = h.coeffs()[j];
            if (!c) continue;
            const auto& r = frob[j];
            if (lazy) {
                for (std::size_t t = 0; t < d; ++t) acc[t] += c * r[t];
            } else {
                for (std::size_t t = 0; t < d; ++t) acc[t] = m.add(acc[t], m.mul(c, r[t]));
            }
        }
        if (lazy)
            for (auto& v : acc) v %= p;
        return FpPoly(p, acc);
    };

    // h = x^{p^i} mod g0; g | g0 is the part with no factor of degree < i
    FpPoly g = g0;
    FpPoly h = xp;
    for (unsigned i = 1; g.degree() >= 2 * static_cast<int>(i); ++i) {
        if (i > 1) h = frobenius(h);
        const FpPoly dd = fp::gcd(fp::sub(h, x), g);
        if (dd.degree() > 0) {
            for (int k = 0; k < dd.degree() / static_cast<int>(i); ++k) out.degrees.push_back(i);
            g = fp::make_monic(fp::quot(g, dd));
        }
    }
    if (g.degree() > 0) out.degrees.push_back(static_cast<unsigned>(g.degree()));
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
}

}  // namespace tdlab
