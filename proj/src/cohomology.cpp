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

#include "tdlab/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace tdlab {

namespace {

constexpr std::uint32_t kOutside = ~std::uint32_t{0};

bool odd_perm(const std::vector<unsigned>& p) {
    unsigned inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    return inv & 1U;
}

std::uint32_t permute(const std::vector<unsigned>& g, std::uint32_t v) {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (v >> i & 1U) r |= 1U << g[i];
    return r;
}

// Row-reduced echelon form over GF(2), rows added one at a time.
class Rref {
   public:
    explicit Rref(std::size_t cols) : words_((cols + 63) / 64), pivot_row_(cols, -1) {}

    // true if the row was independent
    bool add(std::vector<std::uint64_t> row) {
        reduce(row);
        std::size_t w0 = 0;
        while (w0 < words_ && row[w0] == 0) ++w0;
        if (w0 == words_) return false;
        const std::size_t c = 64 * w0 + static_cast<std::size_t>(std::countr_zero(row[w0]));
        const std::size_t cw = c / 64;
        const std::uint64_t cm = std::uint64_t{1} << (c % 64);
        for (auto& r : rows_)
            if (r[cw] & cm)
                for (std::size_t w = 0; w < words_; ++w) r[w] ^= row[w];
        pivot_row_[c] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t words() const noexcept { return words_; }

   private:
    // Pivot rows are fully reduced, so xoring one in never creates another pivot column.
    void reduce(std::vector<std::uint64_t>& row) const {
        std::vector<std::size_t> hits;
        for (std::size_t w = 0; w < words_; ++w)
            for (std::uint64_t x = row[w]; x; x &= x - 1) {
                const std::size_t c = 64 * w + static_cast<std::size_t>(std::countr_zero(x));
                if (pivot_row_[c] >= 0) hits.push_back(c);
            }
        for (std::size_t c : hits) {
            const auto& r = rows_[static_cast<std::size_t>(pivot_row_[c])];
            for (std::size_t w = 0; w < words_; ++w) row[w] ^= r[w];
        }
    }

    std::size_t words_;
    std::vector<long> pivot_row_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

void flip(std::vector<std::uint64_t>& row, std::size_t bit) { row[bit / 64] ^= std::uint64_t{1} << (bit % 64); }

}  // namespace

const char* to_string(PermGroup g) { return g == PermGroup::symmetric ? "S" : "A"; }

const char* to_string(CohomModule m) {
    switch (m) {
        case CohomModule::full:
            return "full";
        case CohomModule::full_mod_const:
            return "full/const";
        case CohomModule::perp_mod_const:
            return "perp/const";
    }
    return "?";
}

CocycleSystem::CocycleSystem(PermGroup group, unsigned n, CohomModule module) : n_(n) {
    if (n < 2 || n > 6) throw std::invalid_argument("CocycleSystem: need 2 <= n <= 6");

    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0U);
    do {
        if (group == PermGroup::symmetric || !odd_perm(p)) perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    // ambient subspace: constant part (killed) then the basis of the quotient
    const std::uint32_t ones = (1U << n) - 1;
    std::vector<std::uint32_t> killed, basis;
    switch (module) {
        case CohomModule::full:
            for (unsigned i = 0; i < n; ++i) basis.push_back(1U << i);
            break;
        case CohomModule::full_mod_const:
            killed.push_back(ones);
            for (unsigned i = 0; i + 1 < n; ++i) basis.push_back(1U << i);
            break;
        case CohomModule::perp_mod_const: {
            const std::uint32_t last = 1U << (n - 1);
            if (n % 2 == 0) {
                killed.push_back(ones);
                for (unsigned i = 0; i + 2 < n; ++i) basis.push_back((1U << i) | last);
            } else {
                for (unsigned i = 0; i + 1 < n; ++i) basis.push_back((1U << i) | last);
            }
            break;
        }
    }
    dim_ = static_cast<unsigned>(basis.size());

    reduce_.assign(std::size_t{1} << n, kOutside);
    const unsigned kd = static_cast<unsigned>(killed.size());
    for (std::uint32_t combo = 0; combo < (1U << (kd + dim_)); ++combo) {
        std::uint32_t v = 0;
        for (unsigned i = 0; i < kd; ++i)
            if (combo >> i & 1U) v ^= killed[i];
        for (unsigned j = 0; j < dim_; ++j)
            if (combo >> (kd + j) & 1U) v ^= basis[j];
        reduce_[v] = combo >> kd;
    }

    action_.assign(perms_.size(), std::vector<std::uint32_t>(std::size_t{1} << dim_));
    for (std::size_t g = 0; g < perms_.size(); ++g)
        for (std::uint32_t c = 0; c < (1U << dim_); ++c) {
            std::uint32_t v = 0;
            for (unsigned j = 0; j < dim_; ++j)
                if (c >> j & 1U) v ^= basis[j];
            action_[g][c] = reduce(permute(perms_[g], v));
        }

    const std::size_t order = perms_.size();
    mul_.resize(order * order);
    std::vector<unsigned> gh(n);
    for (std::size_t g = 0; g < order; ++g)
        for (std::size_t h = 0; h < order; ++h) {
            for (unsigned i = 0; i < n; ++i) gh[i] = perms_[g][perms_[h][i]];
            mul_[g * order + h] = index_of(gh);
        }
}

std::size_t CocycleSystem::index_of(const std::vector<unsigned>& perm) const {
    const auto it = std::lower_bound(perms_.begin(), perms_.end(), perm);
    if (it == perms_.end() || *it != perm) throw std::invalid_argument("CocycleSystem: not a group element");
    return static_cast<std::size_t>(it - perms_.begin());
}

std::uint32_t CocycleSystem::reduce(std::uint32_t ambient) const {
    if (ambient >= reduce_.size() || reduce_[ambient] == kOutside)
        throw std::invalid_argument("CocycleSystem: vector outside the module");
    return reduce_[ambient];
}

bool CocycleSystem::is_cocycle(const std::vector<std::uint32_t>& f) const {
    const std::size_t order = perms_.size();
    if (f.size() != order) throw std::invalid_argument("is_cocycle: one value per element");
    for (std::size_t g = 0; g < order; ++g)
        for (std::size_t h = 0; h < order; ++h)
            if (f[mul_[g * order + h]] != (f[g] ^ act(g, f[h]))) return false;
    return true;
}

bool CocycleSystem::is_coboundary(const std::vector<std::uint32_t>& f) const {
    const std::size_t order = perms_.size();
    if (f.size() != order) throw std::invalid_argument("is_coboundary: one value per element");
    // brute force over v: the module has at most 64 vectors
    for (std::uint32_t v = 0; v < (1U << dim_); ++v) {
        bool ok = true;
        for (std::size_t g = 0; g < order && ok; ++g) ok = f[g] == (v ^ act(g, v));
        if (ok) return true;
    }
    return false;
}

unsigned CocycleSystem::dim_z1() const {
    const std::size_t order = perms_.size();
    const std::size_t vars = order * dim_;
    if (vars == 0) return 0;
    Rref rref(vars);
    std::vector<std::uint64_t> row(rref.words());
    for (std::size_t g = 0; g < order; ++g)
        for (std::size_t h = 0; h < order; ++h) {
            const std::size_t gh = mul_[g * order + h];
            for (unsigned c = 0; c < dim_; ++c) {
                std::fill(row.begin(), row.end(), 0);
                flip(row, gh * dim_ + c);
                flip(row, g * dim_ + c);
                for (unsigned j = 0; j < dim_; ++j)
                    if (act(g, 1U << j) >> c & 1U) flip(row, h * dim_ + j);
                rref.add(row);
                if (rref.rank() == vars) return 0;
            }
        }
    return static_cast<unsigned>(vars - rref.rank());
}

unsigned CocycleSystem::dim_b1() const {
    const std::size_t order = perms_.size();
    Rref rref(order * dim_);
    for (unsigned j = 0; j < dim_; ++j) {
        std::vector<std::uint64_t> row(rref.words(), 0);
        for (std::size_t g = 0; g < order; ++g) {
            const std::uint32_t val = (1U << j) ^ act(g, 1U << j);
            for (unsigned c = 0; c < dim_; ++c)
                if (val >> c & 1U) flip(row, g * dim_ + c);
        }
        rref.add(std::move(row));
    }
    return static_cast<unsigned>(rref.rank());
}

H1Result h1_dimension(PermGroup group, unsigned n, CohomModule module) {
    if (n < 3 || n > 6) throw std::invalid_argument("h1_dimension: need 3 <= n <= 6");
    const CocycleSystem sys(group, n, module);
    H1Result r;
    r.group_order = sys.group_order();
    r.module_dim = sys.module_dim();
    r.dim_z1 = sys.dim_z1();
    r.dim_b1 = sys.dim_b1();
    r.h1 = r.dim_z1 - r.dim_b1;
    return r;
}

WitnessCheck witness_cocycle_check(unsigned n) {
    if (n != 4 && n != 6) throw std::invalid_argument("witness_cocycle_check: n must be 4 or 6");
    const CocycleSystem sys(PermGroup::alternating, n, CohomModule::perp_mod_const);
    std::vector<std::uint32_t> f;
    for (const auto& tau : sys.elements()) f.push_back(sys.reduce((1U << (n - 1)) ^ (1U << tau[n - 1])));
    return {sys.is_cocycle(f), sys.is_coboundary(f)};
}

}  // namespace tdlab
