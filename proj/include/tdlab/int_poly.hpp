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

#ifndef TDLAB_INT_POLY_HPP
#define TDLAB_INT_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tdlab {

/**
 * Dense univariate polynomial with arbitrary-precision integer coefficients.
 *
 * Coefficients are stored in ascending order of degree and the top coefficient
 * is always nonzero. The zero polynomial has no coefficients and reports
 * degree kZeroDegree.
 */
class IntPoly {
   public:
    static constexpr int kZeroDegree = -1;

    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const mpz_class& c);
    // c * x^k
    static IntPoly monomial(const mpz_class& c, std::size_t k);
    // x - root
    static IntPoly linear(const mpz_class& root);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    // Coefficient of x^i; zero beyond the degree.
    const mpz_class& operator[](std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    const mpz_class& leading() const;

    mpz_class eval(const mpz_class& x) const;
    IntPoly derivative() const;
    // P(x + a)
    IntPoly taylor_shift(const mpz_class& a) const;
    // P(-x)
    IntPoly reflect() const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const mpz_class& c);

    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator*(IntPoly lhs, const mpz_class& c) { return lhs *= c; }
    friend IntPoly operator-(IntPoly p);
    friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) = default;

    std::string to_string(char var = 'x') const;

   private:
    void normalize();
    std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

IntPoly pow(const IntPoly& base, unsigned exponent);

// Quotient of a by b when b is monic and divides a exactly.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

// Maximal absolute value of the coefficients. Throws on the zero polynomial.
mpz_class height(const IntPoly& p);

struct PerfectPower {
    unsigned exponent;
    IntPoly root;
};

// Largest m >= 2 with p = q^m for a monic integer q, if any. p must be monic of degree >= 1.
std::optional<PerfectPower> is_perfect_power(const IntPoly& p);

// Chebyshev polynomial of the second kind, U_0 = 1, U_1 = 2y, U_{n+1} = 2y U_n - U_{n-1}.
IntPoly chebyshev_U(unsigned n);

// (-1)^{n(n-1)/2} Res(p, p') for monic p of degree n >= 1, via modular resultants and CRT.
mpz_class discriminant(const IntPoly& p);

}  // namespace tdlab

#endif  // TDLAB_INT_POLY_HPP
