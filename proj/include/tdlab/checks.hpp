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

#ifndef TDLAB_CHECKS_HPP
#define TDLAB_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tdlab/harness.hpp"

namespace tdlab {

// Outcome of a batch of scientific checks. Failed requirements are listed in `notes`.
struct CheckReport {
    bool pass = true;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what);
    void note(const std::string& what) { notes.push_back(what); }
};

// char_poly against the determinant oracle, Chebyshev, zero-diagonal and splitting identities.
CheckReport identity_suite(unsigned count = 500, unsigned n_max = 30, std::uint64_t seed = 0);

// Height bound on draws from several models.
CheckReport height_bound_suite(unsigned draws_per_model = 500, std::uint64_t seed = 0);

// Orbit counts: formula, involutions and brute force.
CheckReport orbit_suite();

// lemma_gen_check / dyson_gen_check over all residues and primes in range, plus product pairs.
CheckReport generation_sweep(std::uint32_t p_min_lemma = 5, std::uint32_t p_min_dyson = 7, std::uint32_t p_max = 101,
                             unsigned threads = 1);

// Chains 1 to 4 on PSL2(p), Bernoulli{0,1}, lambda = 0.
CheckReport mixing_suite(const std::vector<std::uint32_t>& primes, unsigned threads = 1);

CheckReport chebotarev_goldens();

struct ExperimentRun {
    CheckReport check;
    std::string summary;  // serialized summary JSON of the 50-sample run
};

// iid-diag Bernoulli: A_k at n = 40, then populations at n = 40 and n = 30.
ExperimentRun iid_experiment(unsigned threads, std::uint64_t seed = 0);
// Only the 50-sample A_k run; its summary JSON must not depend on `threads`.
std::string iid_summary(unsigned threads, std::uint64_t seed = 0);

// dyson, a = 0, |W| uniform on {1, 2}.
CheckReport dyson_experiment(unsigned threads, std::uint64_t seed = 0);

// Checks on a dyson population report (used by the cli as well).
CheckReport dyson_report_check(const PopulationReport& rep);

// H^1 dimensions against the expected table.
CheckReport cohomology_suite();

CheckReport wreath_suite();

}  // namespace tdlab

#endif  // TDLAB_CHECKS_HPP
