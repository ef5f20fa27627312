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

#include "tdlab/tridiag.hpp"

#include <stdexcept>

namespace tdlab {

TridiagMatrix::TridiagMatrix(std::vector<std::int64_t> diag, std::vector<std::int64_t> offdiag)
    : diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
    const std::size_t want = diag_.empty() ? 0 : diag_.size() - 1;
    if (offdiag_.size() != want) throw std::invalid_argument("TridiagMatrix: off-diagonal must have length n - 1");
}

TridiagMatrix TridiagMatrix::constant(std::size_t n, std::int64_t v) {
    return TridiagMatrix(std::vector<std::int64_t>(n, v), std::vector<std::int64_t>(n ? n - 1 : 0, 1));
}

IntPoly char_poly(const TridiagMatrix& m) {
    const std::size_t n = m.size();
    // Work on raw coefficient vectors; P_j has degree j.
    std::vector<mpz_class> older;       // P_{j-2}
    std::vector<mpz_class> prev{1};     // P_{j-1}
    for (std::size_t j = 1; j <= n; ++j) {
        std::vector<mpz_class> cur(j + 1);
        const mpz_class v = static_cast<long>(m.diag()[j - 1]);
        // (x - V_j) P_{j-1}
        for (std::size_t i = 0; i < prev.size(); ++i) {
            cur[i + 1] += prev[i];
            mpz_submul(cur[i].get_mpz_t(), v.get_mpz_t(), prev[i].get_mpz_t());
        }
        if (j >= 2) {
            const mpz_class w = static_cast<long>(m.offdiag()[j - 2]);
            const mpz_class w2 = w * w;
            for (std::size_t i = 0; i < older.size(); ++i)
                mpz_submul(cur[i].get_mpz_t(), w2.get_mpz_t(), older[i].get_mpz_t());
        }
        older = std::move(prev);
        prev = std::move(cur);
    }
    return IntPoly(std::move(prev));
}

namespace {

// Bareiss fraction-free determinant; a is consumed.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    mpz_class sign = 1;
    mpz_class prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
            }
        }
        prev_pivot = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace

IntPoly char_poly_oracle(const TridiagMatrix& m) {
    const std::size_t n = m.size();
    // Sample points 0..n, then Newton divided differences over the rationals.
    std::vector<mpq_class> xs(n + 1), dd(n + 1);
    for (std::size_t t = 0; t <= n; ++t) {
        std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
        for (std::size_t i = 0; i < n; ++i) {
            a[i][i] = static_cast<long>(t) - static_cast<long>(m.diag()[i]);
            if (i + 1 < n) {
                a[i][i + 1] = -static_cast<long>(m.offdiag()[i]);
                a[i + 1][i] = -static_cast<long>(m.offdiag()[i]);
            }
        }
        xs[t] = static_cast<long>(t);
        dd[t] = bareiss_det(std::move(a));
    }
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t i = n; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);

    // Expand the Newton form with rational coefficients.
    std::vector<mpq_class> poly{dd[n]};
    for (std::size_t i = n; i-- > 0;) {
        std::vector<mpq_class> next(poly.size() + 1);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * xs[i];
        }
        next[0] += dd[i];
        poly = std::move(next);
    }
    std::vector<mpz_class> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        poly[i].canonicalize();
        if (poly[i].get_den() != 1) throw std::logic_error("char_poly_oracle: non-integral interpolant");
        out[i] = poly[i].get_num();
    }
    return IntPoly(std::move(out));
}

mpz_class height_bound(const TridiagMatrix& m) {
    mpz_class vmax = 0, wmax = 0;
    for (auto v : m.diag()) vmax = std::max(vmax, mpz_class(abs(mpz_class(static_cast<long>(v)))));
    for (auto w : m.offdiag()) wmax = std::max(wmax, mpz_class(abs(mpz_class(static_cast<long>(w)))));
    mpz_class base = 2 + vmax + wmax * wmax;
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), m.size());
    return out;
}

}  // namespace tdlab
