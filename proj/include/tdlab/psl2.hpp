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

#ifndef TDLAB_PSL2_HPP
#define TDLAB_PSL2_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace tdlab {

// 2x2 matrix over F_p with determinant 1.
struct SL2Mat {
    std::uint32_t p;
    std::uint32_t a, b, c, d;

    // Throws std::invalid_argument unless ad - bc = 1 mod p.
    static SL2Mat make(std::uint32_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    friend bool operator==(const SL2Mat&, const SL2Mat&) = default;
};

SL2Mat operator*(const SL2Mat& x, const SL2Mat& y);
SL2Mat inverse(const SL2Mat& x);

/**
 * An element of PSL_2(p), stored as the canonical representative of {M, -M}:
 * the one whose first nonzero entry, in (a, b, c, d) order, lies in [1, (p-1)/2].
 */
class PSL2Elem {
   public:
    PSL2Elem() = default;
    explicit PSL2Elem(const SL2Mat& m);

    static PSL2Elem identity(std::uint32_t p);

    std::uint32_t prime() const noexcept { return m_.p; }
    const SL2Mat& rep() const noexcept { return m_; }

    // Four 16-bit residues; requires p < 2^16.
    std::uint64_t packed() const noexcept;

    friend PSL2Elem operator*(const PSL2Elem& x, const PSL2Elem& y) { return PSL2Elem(x.m_ * y.m_); }
    friend PSL2Elem inverse(const PSL2Elem& x) { return PSL2Elem(inverse(x.m_)); }
    friend bool operator==(const PSL2Elem& x, const PSL2Elem& y) = default;
    friend auto operator<=>(const PSL2Elem& x, const PSL2Elem& y) noexcept {
        return x.packed() <=> y.packed();
    }

   private:
    SL2Mat m_{};
};

// Order of PSL_2(p): p (p^2 - 1) / 2.
std::uint64_t psl2_order(std::uint32_t p) noexcept;

// A point of the projective line over F_p.
struct ProjPoint {
    bool infinite = false;
    std::uint32_t x = 0;

    static ProjPoint at_infinity() { return {true, 0}; }
    static ProjPoint finite(std::uint32_t v) { return {false, v}; }
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

// Moebius action [x:1] -> [(ax + b):(cx + d)].
ProjPoint act(const PSL2Elem& g, const ProjPoint& pt);

// Canonical image of [[lambda - v, -1], [1, 0]].
PSL2Elem transfer_mat(std::int64_t lambda, std::int64_t v, std::uint32_t p);

// Canonical image of [[lambda/w, -w], [1/w, 0]]; rejects w = 0 mod p.
PSL2Elem dyson_transfer_mat(std::int64_t lambda, std::int64_t w, std::uint32_t p);

// Multiplicative order of g.
std::uint64_t element_order(const PSL2Elem& g);

// Number of points of the projective line fixed by g.
unsigned fixed_point_count(const PSL2Elem& g);

/**
 * Dense enumeration of PSL_2(p) for p < 2^16: a bijection between canonical
 * representatives and [0, N_p). With a != 0 the entries (a, b, c) determine d;
 * with a = 0 the entries (b, d) determine c.
 */
class PSL2Indexer {
   public:
    explicit PSL2Indexer(std::uint32_t p);

    std::uint32_t prime() const noexcept { return p_; }
    std::uint64_t order() const noexcept { return order_; }
    std::uint64_t index(const PSL2Elem& g) const noexcept;
    PSL2Elem element(std::uint64_t index) const;

   private:
    std::uint32_t p_;
    std::uint64_t half_;
    std::uint64_t order_;
    std::vector<std::uint32_t> inv_;
};

}  // namespace tdlab

#endif  // TDLAB_PSL2_HPP
