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

#ifndef TDLAB_FP_POLY_HPP
#define TDLAB_FP_POLY_HPP

#include <cstdint>
#include <vector>

#include "tdlab/int_poly.hpp"

namespace tdlab {

// Arithmetic modulo an odd prime p < 2^63.
class Modulus {
   public:
    explicit Modulus(std::uint64_t p);

    std::uint64_t value() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        if (small_) return (a * b) % p_;
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    // Throws std::domain_error on zero.
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t reduce(const mpz_class& v) const;
    std::uint64_t reduce(std::int64_t v) const noexcept;
    // Symmetric lift into (-p/2, p/2].
    std::int64_t lift(std::uint64_t a) const noexcept;

    // Products of residues can be accumulated `terms` times in 64 bits without overflow.
    bool lazy_ok(std::size_t terms) const noexcept;

   private:
    std::uint64_t p_;
    bool small_;  // p < 2^32
};

/**
 * Polynomial over F_p with coefficients in [0, p), ascending order, top
 * coefficient nonzero. The zero polynomial has no coefficients.
 */
class FpPoly {
   public:
    explicit FpPoly(std::uint64_t p) : p_(p) {}
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    std::uint64_t prime() const noexcept { return p_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
    std::uint64_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

    std::uint64_t eval(std::uint64_t x) const;

    friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

   private:
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

namespace fp {
FpPoly add(const FpPoly& a, const FpPoly& b);
FpPoly sub(const FpPoly& a, const FpPoly& b);
FpPoly mul(const FpPoly& a, const FpPoly& b);
FpPoly scale(const FpPoly& a, std::uint64_t c);
FpPoly make_monic(const FpPoly& a);
FpPoly derivative(const FpPoly& a);
// a = q*b + r with deg r < deg b; b nonzero.
void divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly rem(const FpPoly& a, const FpPoly& b);
FpPoly quot(const FpPoly& a, const FpPoly& b);
// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(const FpPoly& a, const FpPoly& b);
// a*b mod f, f monic.
FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f);
// base^e mod f, f monic.
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& f);
// Product of the distinct irreducible factors, monic.
FpPoly radical(const FpPoly& f);
// Res(a, b) over F_p.
std::uint64_t resultant(const FpPoly& a, const FpPoly& b);
}  // namespace fp

// Coefficientwise reduction; q must be an odd prime.
FpPoly reduce_mod(const IntPoly& p, std::uint64_t q);

// Number of distinct roots in F_p. Below scan_factor * deg(f) a full residue scan is used.
unsigned count_distinct_roots(const FpPoly& f, std::uint64_t scan_factor = 64);

struct FactorDegrees {
    std::vector<unsigned> degrees;  // ascending, of the square-free part
    bool squarefree = true;
};

// Distinct-degree factorization of the square-free part of f.
FactorDegrees factor_degree_multiset(const FpPoly& f);

}  // namespace tdlab

#endif  // TDLAB_FP_POLY_HPP
