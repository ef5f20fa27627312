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

#include "tdlab/product_group.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace tdlab {

namespace {

using u64 = std::uint64_t;
using Packed = ProductGroup::Packed;

constexpr u64 kBitsetLimit = u64{1} << 32;

SL2Mat unpack_one(u64 w, std::uint32_t p) {
    return SL2Mat{p, static_cast<std::uint32_t>(w >> 48), static_cast<std::uint32_t>((w >> 32) & 0xFFFF),
                  static_cast<std::uint32_t>((w >> 16) & 0xFFFF), static_cast<std::uint32_t>(w & 0xFFFF)};
}

// Flat bitset for small groups, hash set otherwise.
class Visited {
   public:
    explicit Visited(u64 order) {
        if (order <= kBitsetLimit) bits_.assign((order + 63) / 64, 0);
    }
    // true if newly inserted
    bool insert(u64 i) {
        if (!bits_.empty()) {
            u64& w = bits_[i >> 6];
            const u64 m = u64{1} << (i & 63);
            if (w & m) return false;
            w |= m;
            return true;
        }
        return set_.insert(i).second;
    }
    bool contains(u64 i) const {
        if (!bits_.empty()) return (bits_[i >> 6] >> (i & 63)) & 1;
        return set_.count(i) != 0;
    }

   private:
    std::vector<u64> bits_;
    std::unordered_set<u64> set_;
};

std::vector<std::uint32_t> primes_of(const std::vector<ElemTuple>& gens) {
    if (gens.empty()) throw std::invalid_argument("empty generating set");
    std::vector<std::uint32_t> primes;
    for (const auto& g : gens[0]) primes.push_back(g.prime());
    for (const auto& t : gens) {
        if (t.size() != primes.size()) throw std::invalid_argument("generators of different rank");
        for (std::size_t i = 0; i < t.size(); ++i)
            if (t[i].prime() != primes[i]) throw std::invalid_argument("generators over different primes");
    }
    return primes;
}

}  // namespace

ElemTuple operator*(const ElemTuple& x, const ElemTuple& y) {
    if (x.size() != y.size()) throw std::invalid_argument("tuple rank mismatch");
    ElemTuple r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * y[i];
    return r;
}

ElemTuple inverse(const ElemTuple& x) {
    ElemTuple r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = inverse(x[i]);
    return r;
}

ElemTuple tuple_identity(const std::vector<std::uint32_t>& primes) {
    ElemTuple r;
    for (auto p : primes) r.push_back(PSL2Elem::identity(p));
    return r;
}

ProductGroup::ProductGroup(std::vector<std::uint32_t> primes) : primes_(std::move(primes)) {
    if (primes_.empty() || primes_.size() > 3) throw std::invalid_argument("ProductGroup: need 1 to 3 factors");
    unsigned __int128 order = 1;
    for (auto p : primes_) {
        indexers_.emplace_back(p);
        order *= indexers_.back().order();
        if (order >> 63) throw std::invalid_argument("ProductGroup: order does not fit in 63 bits");
    }
    order_ = static_cast<u64>(order);
}

Packed ProductGroup::pack(const ElemTuple& g) const {
    if (g.size() != primes_.size()) throw std::invalid_argument("ProductGroup::pack: rank mismatch");
    Packed r{};
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].prime() != primes_[i]) throw std::invalid_argument("ProductGroup::pack: prime mismatch");
        r[i] = g[i].packed();
    }
    return r;
}

ElemTuple ProductGroup::unpack(const Packed& g) const {
    ElemTuple r;
    for (std::size_t i = 0; i < primes_.size(); ++i) r.emplace_back(unpack_one(g[i], primes_[i]));
    return r;
}

Packed ProductGroup::mul(const Packed& x, const Packed& y) const noexcept {
    Packed r{};
    for (std::size_t i = 0; i < primes_.size(); ++i)
        r[i] = PSL2Elem(unpack_one(x[i], primes_[i]) * unpack_one(y[i], primes_[i])).packed();
    return r;
}

Packed ProductGroup::identity() const noexcept {
    Packed r{};
    for (std::size_t i = 0; i < primes_.size(); ++i) r[i] = PSL2Elem::identity(primes_[i]).packed();
    return r;
}

u64 ProductGroup::index(const Packed& g) const noexcept {
    u64 idx = 0;
    for (std::size_t i = 0; i < primes_.size(); ++i)
        idx = idx * indexers_[i].order() + indexers_[i].index(PSL2Elem(unpack_one(g[i], primes_[i])));
    return idx;
}

Packed ProductGroup::element(u64 index) const {
    if (index >= order_) throw std::out_of_range("ProductGroup::element");
    Packed r{};
    for (std::size_t i = primes_.size(); i-- > 0;) {
        const u64 n = indexers_[i].order();
        r[i] = indexers_[i].element(index % n).packed();
        index /= n;
    }
    return r;
}

Packed ProductGroup::inverse(const Packed& g) const noexcept {
    Packed r{};
    for (std::size_t i = 0; i < primes_.size(); ++i) r[i] = PSL2Elem(tdlab::inverse(unpack_one(g[i], primes_[i]))).packed();
    return r;
}

ClosureResult closure_size(const std::vector<ElemTuple>& gens, u64 cap) {
    if (cap == 0) throw std::invalid_argument("closure_size: cap must be positive");
    const ProductGroup G(primes_of(gens));
    std::vector<Packed> s;
    for (const auto& g : gens) s.push_back(G.pack(g));

    Visited seen(G.order());
    std::vector<Packed> elems{G.identity()};
    seen.insert(G.index(elems[0]));

    for (std::size_t i = 0; i < s.size(); ++i) {
        if (seen.contains(G.index(s[i]))) continue;
        // elems holds H = <s_0..s_{i-1}>; extend to <H, s_i> coset by coset.
        const std::size_t h = elems.size();
        auto add_coset = [&](const Packed& rep) {
            if (elems.size() + h > cap) return false;
            for (std::size_t j = 0; j < h; ++j) {
                const Packed x = G.mul(elems[j], rep);
                seen.insert(G.index(x));
                elems.push_back(x);
            }
            return true;
        };
        if (!add_coset(s[i])) return {elems.size(), false};
        for (std::size_t rep = h; rep < elems.size(); rep += h) {
            for (std::size_t j = 0; j <= i; ++j) {
                const Packed x = G.mul(elems[rep], s[j]);
                if (seen.contains(G.index(x))) continue;
                if (!add_coset(x)) return {elems.size(), false};
            }
        }
    }
    return {elems.size(), true};
}

ClosureResult bfs_closure_size(const std::vector<ElemTuple>& gens, u64 cap) {
    if (cap == 0) throw std::invalid_argument("bfs_closure_size: cap must be positive");
    const ProductGroup G(primes_of(gens));
    std::vector<Packed> s;
    for (const auto& g : gens) s.push_back(G.pack(g));
    Visited seen(G.order());
    std::vector<Packed> queue{G.identity()};
    seen.insert(G.index(queue[0]));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& g : s) {
            const Packed x = G.mul(g, queue[head]);
            if (!seen.insert(G.index(x))) continue;
            if (queue.size() == cap) return {queue.size(), false};
            queue.push_back(x);
        }
    }
    return {queue.size(), true};
}

unsigned cayley_diameter(const std::vector<ElemTuple>& gens) {
    const ProductGroup G(primes_of(gens));
    std::vector<Packed> s;
    std::unordered_set<u64> gen_idx;
    for (const auto& g : gens) {
        s.push_back(G.pack(g));
        gen_idx.insert(G.index(s.back()));
    }
    for (const auto& g : gens)
        if (!gen_idx.count(G.index(G.pack(inverse(g))))) throw std::invalid_argument("cayley_diameter: set is not symmetric");

    Visited seen(G.order());
    std::vector<Packed> frontier{G.identity()};
    seen.insert(G.index(frontier[0]));
    u64 reached = 1;
    unsigned depth = 0;
    for (;;) {
        std::vector<Packed> next;
        for (const auto& x : frontier)
            for (const auto& g : s) {
                const Packed y = G.mul(x, g);
                if (seen.insert(G.index(y))) next.push_back(y);
            }
        if (next.empty()) break;
        reached += next.size();
        ++depth;
        frontier = std::move(next);
    }
    if (reached != G.order()) throw std::invalid_argument("cayley_diameter: set does not generate the group");
    return depth;
}

std::vector<ElemTuple> word_set(const std::vector<ElemTuple>& S, unsigned a, unsigned b, bool inverses_first) {
    if (S.empty()) throw std::invalid_argument("word_set: empty alphabet");
    const ProductGroup G(primes_of(S));
    std::vector<ElemTuple> inv;
    for (const auto& g : S) inv.push_back(inverse(g));

    std::vector<ElemTuple> words{tuple_identity(G.primes())};
    auto extend = [&](const std::vector<ElemTuple>& letters, unsigned count) {
        for (unsigned r = 0; r < count; ++r) {
            std::vector<ElemTuple> next;
            for (const auto& w : words)
                for (const auto& l : letters) next.push_back(w * l);
            words = std::move(next);
        }
    };
    if (inverses_first) {
        extend(inv, a);
        extend(S, b);
    } else {
        extend(S, a);
        extend(inv, b);
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

}  // namespace tdlab
