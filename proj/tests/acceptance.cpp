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

// Acceptance run: one PASS/FAIL line per criterion, details indented below it.
// Usage: acceptance [criterion ...]   (default: all)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <thread>

#include "tdlab/checks.hpp"
#include "tdlab/parallel.hpp"

using namespace tdlab;

namespace {

unsigned threads() {
    if (const char* env = std::getenv("TDLAB_THREADS")) return resolve_threads(static_cast<unsigned>(std::atoi(env)));
    return resolve_threads(0);
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    const unsigned t = threads();
    std::string iid_summary_first;

    struct Criterion {
        int id;
        const char* title;
        std::function<CheckReport()> run;
    };
    const std::vector<Criterion> all{
        {1, "identity suite", [] { return identity_suite(500, 30, 0); }},
        {2, "height bound on sampled polynomials", [] { return height_bound_suite(500, 0); }},
        {3, "orbit counts", [] { return orbit_suite(); }},
        {4, "generation sweeps", [t] { return generation_sweep(5, 7, 101, t); }},
        {5, "mixing on PSL2(p), p = 5, 7, 11, 13", [t] { return mixing_suite({5, 7, 11, 13}, t); }},
        {6, "Chebotarev goldens at x = 10^4", [] { return chebotarev_goldens(); }},
        {7, "iid-diag Bernoulli experiment",
         [&] {
             ExperimentRun e = iid_experiment(t, 0);
             iid_summary_first = e.summary;
             return e.check;
         }},
        {8, "dyson experiment", [t] { return dyson_experiment(t, 0); }},
        {9, "H^1 dimensions", [] { return cohomology_suite(); }},
        {10, "wreath structure", [] { return wreath_suite(); }},
        {11, "summary JSON independent of thread count",
         [&] {
             CheckReport r;
             const std::string a = iid_summary_first.empty() ? iid_summary(t, 0) : iid_summary_first;
             const unsigned other = t == 1 ? 3 : 1;
             const std::string b = iid_summary(other, 0);
             r.require(a == b, "summaries differ between " + std::to_string(t) + " and " + std::to_string(other) + " threads");
             r.note(std::to_string(a.size()) + " bytes, threads " + std::to_string(t) + " vs " + std::to_string(other));
             return r;
         }},
    };

    int failed = 0;
    for (const auto& c : all) {
        if (!only.empty() && !only.count(c.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        CheckReport r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.require(false, std::string("exception: ") + e.what());
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d: %s  %s (%.1f s)\n", c.id, r.pass ? "PASS" : "FAIL", c.title, dt);
        for (const auto& n : r.notes) std::printf("    %s\n", n.c_str());
        std::fflush(stdout);
        failed += !r.pass;
    }
    std::printf("%d criteria failed\n", failed);
    return failed ? 1 : 0;
}
