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

#include "tdlab/generation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "tdlab/primes.hpp"
#include "tdlab/product_group.hpp"

namespace tdlab {

namespace {

using u64 = std::uint64_t;

// Generous: the products in these checks are at most a few million elements.
constexpr u64 kClosureCap = u64{1} << 31;

std::int64_t residue(std::int64_t x, std::uint32_t p) {
    const std::int64_t r = x % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
}

void validate_prime(std::uint32_t p) {
    if (p < 3 || p >= (1U << 16) || !is_prime_u64(p)) throw std::invalid_argument("need an odd prime below 2^16");
}

CheckOutcome skipped(std::string why) {
    CheckOutcome o;
    o.status = CheckStatus::skipped;
    o.reason = std::move(why);
    return o;
}

// Closure of S^a S^-a and S^-a S^a compared against the full product.
CheckOutcome run(const std::vector<ElemTuple>& S, unsigned a, const std::vector<std::uint32_t>& primes) {
    CheckOutcome o;
    o.expected = ProductGroup(primes).order();
    const auto r1 = closure_size(word_set(S, a, a, false), kClosureCap);
    const auto r2 = closure_size(word_set(S, a, a, true), kClosureCap);
    if (!r1.complete || !r2.complete) throw std::runtime_error("generation check: closure exceeded the memory cap");
    o.size_forward = r1.size;
    o.size_backward = r2.size;
    o.status = (r1.size == o.expected && r2.size == o.expected) ? CheckStatus::pass : CheckStatus::fail;
    return o;
}

bool below(const std::vector<std::uint32_t>& primes, std::int64_t c) {
    return std::any_of(primes.begin(), primes.end(), [&](std::uint32_t p) { return p < c; });
}

}  // namespace

const char* to_string(CheckStatus s) noexcept {
    switch (s) {
        case CheckStatus::pass:
            return "pass";
        case CheckStatus::fail:
            return "fail";
        case CheckStatus::skipped:
            return "skipped";
    }
    return "?";
}

std::int64_t gen_threshold(std::int64_t v, std::int64_t vp) { return std::max<std::int64_t>(5, std::llabs(v - vp) + 1); }

CheckOutcome lemma_gen_check(std::int64_t v, std::int64_t vp, std::uint32_t p, std::int64_t lambda, bool exploratory) {
    return lemma_genprod_check(v, vp, {p}, {lambda}, exploratory);
}

CheckOutcome lemma_genprod_check(std::int64_t v, std::int64_t vp, const std::vector<std::uint32_t>& primes,
                                 const std::vector<std::int64_t>& lambdas, bool exploratory) {
    for (auto p : primes) validate_prime(p);
    if (primes.size() != lambdas.size()) throw std::invalid_argument("lemma_genprod_check: one lambda per prime");
    if (primes.empty() || primes.size() > 3) return skipped("need 1 to 3 primes");
    if (v == vp) return skipped("v and v' must differ");
    if (!std::is_sorted(primes.begin(), primes.end(), std::greater<>())) return skipped("primes must be non-increasing");
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j] && residue(lambdas[i], primes[i]) == residue(lambdas[j], primes[j]))
                return skipped("equal lambdas at a repeated prime");
    const bool low = below(primes, gen_threshold(v, vp));
    if (low && !exploratory) return skipped("prime below max(5, |v - v'| + 1)");

    ElemTuple t1, t2;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        t1.push_back(transfer_mat(lambdas[i], v, primes[i]));
        t2.push_back(transfer_mat(lambdas[i], vp, primes[i]));
    }
    CheckOutcome o = run({t1, t2}, primes.size() == 1 ? 2 : 3, primes);
    o.below_threshold = low;
    return o;
}

CheckOutcome dyson_gen_check(std::int64_t w, std::int64_t wp, std::uint32_t p, std::int64_t lambda, bool exploratory) {
    return dyson_genprod_check(w, wp, {p}, {lambda}, exploratory);
}

CheckOutcome dyson_genprod_check(std::int64_t w, std::int64_t wp, const std::vector<std::uint32_t>& primes,
                                 const std::vector<std::int64_t>& lambdas, bool exploratory) {
    for (auto p : primes) validate_prime(p);
    if (primes.size() != lambdas.size()) throw std::invalid_argument("dyson_genprod_check: one lambda per prime");
    if (primes.empty() || primes.size() > 2) return skipped("need 1 or 2 primes");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint32_t p = primes[i];
        if (residue(w, p) == 0 || residue(wp, p) == 0) return skipped("weight vanishes mod p");
        if (residue(w - wp, p) == 0 || residue(w + wp, p) == 0) return skipped("w = +-w' mod p");
        if (residue(lambdas[i], p) == 0) return skipped("lambda must be nonzero");
    }
    if (primes.size() == 2 && primes[0] == primes[1]) {
        const std::uint32_t p = primes[0];
        if (residue(lambdas[0] - lambdas[1], p) == 0 || residue(lambdas[0] + lambdas[1], p) == 0)
            return skipped("lambda_1 = +-lambda_2 at a repeated prime");
    }
    const bool low = below(primes, gen_threshold(w, wp));
    if (low && !exploratory) return skipped("prime below max(5, |w - w'| + 1)");

    ElemTuple t1, t2;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        t1.push_back(dyson_transfer_mat(lambdas[i], w, primes[i]));
        t2.push_back(dyson_transfer_mat(lambdas[i], wp, primes[i]));
    }
    CheckOutcome o = run({t1, t2}, 3, primes);
    o.below_threshold = low;
    return o;
}

}  // namespace tdlab
