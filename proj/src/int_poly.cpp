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

#include "tdlab/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tdlab/fp_poly.hpp"
#include "tdlab/primes.hpp"

namespace tdlab {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t k) {
    std::vector<mpz_class> v(k + 1);
    v[k] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const mpz_class& root) { return IntPoly(std::vector<mpz_class>{-root, 1}); }

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }

const mpz_class& IntPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::taylor_shift(const mpz_class& a) const {
    // Horner in the shifted variable: each step multiplies by (x + a).
    std::vector<mpz_class> r(coeffs_.size());
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        for (std::size_t j = coeffs_.size() - 1; j > 0; --j) r[j] = r[j - 1] + a * r[j];
        r[0] = a * r[0] + coeffs_[i];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reflect() const {
    std::vector<mpz_class> r = coeffs_;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<mpz_class> r(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const mpz_class& c) {
    for (auto& v : coeffs_) v *= c;
    normalize();
    return *this;
}

IntPoly operator-(IntPoly p) {
    for (auto& v : p.coeffs_) v = -v;
    return p;
}

std::string IntPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || a != 1) os << a;
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

IntPoly pow(const IntPoly& base, unsigned exponent) {
    IntPoly result = IntPoly::constant(1);
    IntPoly b = base;
    while (exponent) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent) b *= b;
    }
    return result;
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
    if (!b.is_monic()) throw std::invalid_argument("divide_exact: divisor must be monic");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<mpz_class> r = a.coeffs();
    const int db = b.degree();
    std::vector<mpz_class> q(a.degree() - db + 1);
    for (int i = a.degree(); i >= db; --i) {
        const mpz_class c = r[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    for (int i = 0; i < db; ++i)
        if (r[i] != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

mpz_class height(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("height: zero polynomial");
    mpz_class h = 0;
    for (const auto& c : p.coeffs())
        if (mpz_cmpabs(c.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(c);
    return h;
}

namespace {

// Monic q of degree deg(p)/m with q^m agreeing with p in the top deg(q)+1 coefficients.
std::optional<IntPoly> formal_root(const IntPoly& p, unsigned m) {
    const int n = p.degree();
    const int d = n / static_cast<int>(m);
    std::vector<mpz_class> q(d + 1);
    q[d] = 1;
    for (int j = 1; j <= d; ++j) {
        // Coefficient of x^{n-j} in (q with q_{d-j} = 0)^m.
        const mpz_class c = pow(IntPoly(q), m)[n - j];
        mpz_class diff = p[n - j] - c;
        if (!mpz_divisible_ui_p(diff.get_mpz_t(), m)) return std::nullopt;
        mpz_divexact_ui(q[d - j].get_mpz_t(), diff.get_mpz_t(), m);
    }
    return IntPoly(std::move(q));
}

}  // namespace

std::optional<PerfectPower> is_perfect_power(const IntPoly& p) {
    if (!p.is_monic() || p.degree() < 1) throw std::invalid_argument("is_perfect_power: need monic of degree >= 1");
    const auto n = static_cast<std::uint64_t>(p.degree());
    auto divisors = prime_divisors(n);
    std::reverse(divisors.begin(), divisors.end());
    for (std::uint64_t ell : divisors) {
        auto q = formal_root(p, static_cast<unsigned>(ell));
        if (!q || pow(*q, static_cast<unsigned>(ell)) != p) continue;
        if (q->degree() >= 1) {
            if (auto deeper = is_perfect_power(*q))
                return PerfectPower{static_cast<unsigned>(ell) * deeper->exponent, std::move(deeper->root)};
        }
        return PerfectPower{static_cast<unsigned>(ell), std::move(*q)};
    }
    return std::nullopt;
}

IntPoly chebyshev_U(unsigned n) {
    IntPoly prev = IntPoly::constant(1);
    if (n == 0) return prev;
    IntPoly cur{0, 2};
    const IntPoly two_y{0, 2};
    for (unsigned k = 1; k < n; ++k) {
        IntPoly next = two_y * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

mpz_class discriminant(const IntPoly& p) {
    if (!p.is_monic() || p.degree() < 1) throw std::invalid_argument("discriminant: need monic of degree >= 1");
    const unsigned long n = static_cast<unsigned long>(p.degree());
    if (n == 1) return 1;
    const IntPoly dp = p.derivative();

    // |disc| <= 2 n^n H^{2n-1}; the factor 2 also covers the symmetric lift.
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), n, n);
    mpz_class hpow;
    mpz_pow_ui(hpow.get_mpz_t(), height(p).get_mpz_t(), 2 * n - 1);
    bound *= 2 * hpow;

    mpz_class modulus = 1;
    mpz_class value = 0;
    std::uint64_t q = std::uint64_t{1} << 62;
    auto residue_at = [&](std::uint64_t prime) {
        return fp::resultant(reduce_mod(p, prime), reduce_mod(dp, prime));
    };
    while (modulus <= 2 * bound) {
        q = prev_prime(q);
        // Leading coefficient of p' is n; skip the (impossible for n < 2^62) primes dividing it.
        if (n % q == 0) continue;
        const mpz_class r = static_cast<unsigned long>(residue_at(q));
        const mpz_class qz = static_cast<unsigned long>(q);
        // value += modulus * ((r - value) * modulus^{-1} mod q)
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), mpz_class(modulus % qz).get_mpz_t(), qz.get_mpz_t());
        mpz_class t = ((r - value) * inv) % qz;
        if (t < 0) t += qz;
        value += modulus * t;
        modulus *= qz;
    }
    if (2 * value > modulus) value -= modulus;

    // One extra prime beyond the bound.
    q = prev_prime(q);
    const Modulus check(q);
    if (check.reduce(value) != residue_at(q)) throw std::logic_error("discriminant: CRT verification prime disagrees");

    // Res(p, p') for monic p; apply the sign (-1)^{n(n-1)/2}.
    if ((n * (n - 1) / 2) % 2 == 1) value = -value;
    return value;
}

}  // namespace tdlab
