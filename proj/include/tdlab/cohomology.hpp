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

#ifndef TDLAB_COHOMOLOGY_HPP
#define TDLAB_COHOMOLOGY_HPP

#include <cstdint>
#include <vector>

namespace tdlab {

enum class PermGroup { symmetric, alternating };

// full: F_2^n; full_mod_const: F_2^n / <1>; perp_mod_const: (sum-zero vectors) / <1> for even n,
// (sum-zero vectors) alone for odd n where the constant vector is not in it.
enum class CohomModule { full, full_mod_const, perp_mod_const };

const char* to_string(PermGroup g);
const char* to_string(CohomModule m);

/**
 * S_n or A_n acting on a quotient of a subspace of F_2^n by permuting coordinates.
 * Module vectors are bitmasks in the coordinates of a fixed basis, dimension <= 6.
 */
class CocycleSystem {
   public:
    CocycleSystem(PermGroup group, unsigned n, CohomModule module);

    std::size_t group_order() const noexcept { return perms_.size(); }
    unsigned module_dim() const noexcept { return dim_; }
    const std::vector<std::vector<unsigned>>& elements() const noexcept { return perms_; }
    std::size_t index_of(const std::vector<unsigned>& perm) const;

    // g . v for v given in module coordinates
    std::uint32_t act(std::size_t g, std::uint32_t v) const noexcept { return action_[g][v]; }
    // reduce a vector of F_2^n (bitmask; must lie in the ambient subspace) to module coordinates
    std::uint32_t reduce(std::uint32_t ambient) const;

    // f: one module vector per group element
    bool is_cocycle(const std::vector<std::uint32_t>& f) const;
    bool is_coboundary(const std::vector<std::uint32_t>& f) const;

    unsigned dim_z1() const;
    unsigned dim_b1() const;

   private:
    unsigned n_, dim_;
    std::vector<std::vector<unsigned>> perms_;
    std::vector<std::uint32_t> reduce_;               // ambient bitmask -> coords, or ~0 if outside
    std::vector<std::vector<std::uint32_t>> action_;  // [g][coords]
    std::vector<std::size_t> mul_;                    // [g * order + h] -> index of g h
};

struct H1Result {
    unsigned dim_z1 = 0, dim_b1 = 0, h1 = 0;
    std::size_t group_order = 0;
    unsigned module_dim = 0;
};

// dim Z^1 - dim B^1 over all pairs (g, h); 3 <= n <= 6.
H1Result h1_dimension(PermGroup group, unsigned n, CohomModule module);

struct WitnessCheck {
    bool cocycle = false;
    bool coboundary = true;
};

// f(tau) = e_n + e_tau(n) in (sum-zero)/<1> over A_n; even n in {4, 6}.
WitnessCheck witness_cocycle_check(unsigned n);

}  // namespace tdlab

#endif  // TDLAB_COHOMOLOGY_HPP
