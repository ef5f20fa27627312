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

#ifndef TDLAB_WREATH_HPP
#define TDLAB_WREATH_HPP

#include <cstdint>
#include <vector>

namespace tdlab {

/**
 * Element (a; sigma) of C_2^m x| S_m acting on the 2m points (i, s) -> 2i + s by
 * (i, s) -> (sigma(i), s + a_{sigma(i)}). Blocks are {2i, 2i+1}. m <= 16.
 */
class SignedPerm {
   public:
    SignedPerm(std::vector<std::uint8_t> flips, std::vector<unsigned> perm);
    static SignedPerm identity(unsigned m);

    unsigned degree() const noexcept { return static_cast<unsigned>(perm_.size()); }
    const std::vector<std::uint8_t>& flips() const noexcept { return flips_; }
    const std::vector<unsigned>& perm() const noexcept { return perm_; }

    unsigned apply(unsigned point) const noexcept;
    bool even_flips() const noexcept;
    bool even_perm() const noexcept;
    // images of the 2m points
    std::vector<std::uint8_t> points() const;

    friend SignedPerm operator*(const SignedPerm& x, const SignedPerm& y);  // apply y first
    friend SignedPerm inverse(const SignedPerm& x);
    friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
    friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

   private:
    std::vector<std::uint8_t> flips_;
    std::vector<unsigned> perm_;
};

enum class WreathSubgroup { full, derived };

// Number of involutions of S_k (identity included), by the closed sum over k_1 + 2 k_2 = k.
std::uint64_t orbit_count_formula(unsigned k);

// Same count by running over all of S_k; k <= 10.
std::uint64_t involution_count(unsigned k);

// Generators: full wreath product, or U[m] x| A_m (even flips, even permutation).
std::vector<SignedPerm> wreath_generators(unsigned m, WreathSubgroup which);

// All elements of <gens>, sorted. Throws std::length_error past `cap`.
std::vector<SignedPerm> closure(const std::vector<SignedPerm>& gens, std::size_t cap = 1 << 20);

// Orbits on ordered k-tuples of distinct points, by union-find over generator moves.
// Requires k <= m <= 6.
std::uint64_t brute_orbits(unsigned m, unsigned k, WreathSubgroup which);

struct DerivedCheck {
    bool pass = false;
    std::uint64_t group_order = 0;
    std::uint64_t derived_order = 0;
    std::uint64_t index = 0;
    bool equals_expected = false;  // every element has even flips and even permutation
};

// Derived subgroup as the normal closure of generator commutators; 2 <= m <= 6.
DerivedCheck derived_subgroup_check(unsigned m);

struct BlockCheck {
    bool pass = false;
    std::uint64_t k_order = 0;        // induced by the block-permuting complement K
    std::uint64_t twisted_order = 0;  // induced by sigma -> (sgn(sigma) (1..1); sigma)
    std::uint64_t minus_k_order = 0;  // induced by <-1, K>
    std::uint64_t full_order = 0;     // induced by the full wreath product (control)
};

// Order of the group induced on the four points of blocks 1 and 2 by their set
// stabilizer, for each candidate; pass iff the three candidates give < 8 and the
// full wreath product gives 8. 4 <= m <= 6.
BlockCheck complement_block_check(unsigned m);

// Order of the group induced on blocks 1, 2 by the set stabilizer inside <gens>.
std::uint64_t induced_block_order(const std::vector<SignedPerm>& gens);

}  // namespace tdlab

#endif  // TDLAB_WREATH_HPP
