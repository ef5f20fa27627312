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

#ifndef TDLAB_GENERATION_HPP
#define TDLAB_GENERATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tdlab {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s) noexcept;

struct CheckOutcome {
    CheckStatus status = CheckStatus::skipped;
    std::string reason;              // set when skipped
    std::uint64_t expected = 0;      // order of the full (product) group
    std::uint64_t size_forward = 0;  // |<S^a S^-a>|
    std::uint64_t size_backward = 0; // |<S^-a S^a>|
    bool below_threshold = false;    // ran in exploratory mode under p < C
};

// max(5, |v - v'| + 1)
std::int64_t gen_threshold(std::int64_t v, std::int64_t vp);

/**
 * Generation checks for words in S = {T(lambda - v), T(lambda - v')} and the
 * weighted analogue S = {T~(lambda, w), T~(lambda, w')}. A violated precondition
 * gives `skipped` with a reason. With `exploratory` set, primes below the
 * threshold are run anyway and flagged. Primes must be odd and below 2^16
 * (std::invalid_argument otherwise).
 */
CheckOutcome lemma_gen_check(std::int64_t v, std::int64_t vp, std::uint32_t p, std::int64_t lambda,
                             bool exploratory = false);

CheckOutcome lemma_genprod_check(std::int64_t v, std::int64_t vp, const std::vector<std::uint32_t>& primes,
                                 const std::vector<std::int64_t>& lambdas, bool exploratory = false);

CheckOutcome dyson_gen_check(std::int64_t w, std::int64_t wp, std::uint32_t p, std::int64_t lambda,
                             bool exploratory = false);

CheckOutcome dyson_genprod_check(std::int64_t w, std::int64_t wp, const std::vector<std::uint32_t>& primes,
                                 const std::vector<std::int64_t>& lambdas, bool exploratory = false);

}  // namespace tdlab

#endif  // TDLAB_GENERATION_HPP
