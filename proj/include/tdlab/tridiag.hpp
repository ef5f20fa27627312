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

#ifndef TDLAB_TRIDIAG_HPP
#define TDLAB_TRIDIAG_HPP

#include <cstdint>
#include <vector>

#include "tdlab/int_poly.hpp"

namespace tdlab {

// Symmetric tridiagonal integer matrix: diagonal V_1..V_n, off-diagonal W_1..W_{n-1}.
class TridiagMatrix {
   public:
    TridiagMatrix() = default;
    TridiagMatrix(std::vector<std::int64_t> diag, std::vector<std::int64_t> offdiag);

    // Constant diagonal v with unit off-diagonal.
    static TridiagMatrix constant(std::size_t n, std::int64_t v);

    std::size_t size() const noexcept { return diag_.size(); }
    const std::vector<std::int64_t>& diag() const noexcept { return diag_; }
    const std::vector<std::int64_t>& offdiag() const noexcept { return offdiag_; }

   private:
    std::vector<std::int64_t> diag_;
    std::vector<std::int64_t> offdiag_;
};

// det(x Id - m) by the three-term recurrence P_j = (x - V_j) P_{j-1} - W_{j-1}^2 P_{j-2}.
IntPoly char_poly(const TridiagMatrix& m);

// det(x Id - m) by fraction-free elimination at n+1 integer points and interpolation.
// Independent of char_poly; meant for cross-checking.
IntPoly char_poly_oracle(const TridiagMatrix& m);

// (2 + max|V| + max W^2)^n, an upper bound for the height of char_poly(m).
mpz_class height_bound(const TridiagMatrix& m);

}  // namespace tdlab

#endif  // TDLAB_TRIDIAG_HPP
