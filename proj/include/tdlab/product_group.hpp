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

#ifndef TDLAB_PRODUCT_GROUP_HPP
#define TDLAB_PRODUCT_GROUP_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "tdlab/psl2.hpp"

namespace tdlab {

// An element of PSL_2(p_1) x ... x PSL_2(p_k), k <= 3.
using ElemTuple = std::vector<PSL2Elem>;

ElemTuple operator*(const ElemTuple& x, const ElemTuple& y);
ElemTuple inverse(const ElemTuple& x);
ElemTuple tuple_identity(const std::vector<std::uint32_t>& primes);

struct ClosureResult {
    std::uint64_t size = 0;
    bool complete = false;
};

/**
 * The group generated by a set of tuples sharing one prime vector. Elements are
 * packed as 16-bit residues, so every p_i must be below 2^16.
 */
class ProductGroup {
   public:
    using Packed = std::array<std::uint64_t, 3>;

    explicit ProductGroup(std::vector<std::uint32_t> primes);

    const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }
    std::size_t rank() const noexcept { return primes_.size(); }
    std::uint64_t order() const noexcept { return order_; }

    Packed pack(const ElemTuple& g) const;
    ElemTuple unpack(const Packed& g) const;
    Packed mul(const Packed& x, const Packed& y) const noexcept;
    Packed identity() const noexcept;
    std::uint64_t index(const Packed& g) const noexcept;
    Packed element(std::uint64_t index) const;
    Packed inverse(const Packed& g) const noexcept;

   private:
    std::vector<std::uint32_t> primes_;
    std::vector<PSL2Indexer> indexers_;
    std::uint64_t order_ = 1;
};

/**
 * Size of <gens>, by Dimino's coset enumeration. Stops with complete = false as soon
 * as more than `cap` elements would be needed. Throws std::invalid_argument on an
 * empty or inconsistent generating set, or cap = 0.
 */
ClosureResult closure_size(const std::vector<ElemTuple>& gens, std::uint64_t cap);

// Plain breadth-first orbit of the identity; slower, kept as a cross-check.
ClosureResult bfs_closure_size(const std::vector<ElemTuple>& gens, std::uint64_t cap);

/**
 * Diameter of the Cayley graph of <gens> with respect to gens. The set must be closed
 * under inversion and generate the full product; otherwise std::invalid_argument.
 */
unsigned cayley_diameter(const std::vector<ElemTuple>& gens);

// All products x_1 ... x_a y_1^{-1} ... y_b^{-1} with x_i, y_j in S, deduplicated and
// sorted. With inverses_first the word is y_1^{-1} ... y_a^{-1} x_1 ... x_b instead.
std::vector<ElemTuple> word_set(const std::vector<ElemTuple>& S, unsigned a, unsigned b, bool inverses_first);

}  // namespace tdlab

#endif  // TDLAB_PRODUCT_GROUP_HPP
