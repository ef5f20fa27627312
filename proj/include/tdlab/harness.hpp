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

#ifndef TDLAB_HARNESS_HPP
#define TDLAB_HARNESS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdlab/int_poly.hpp"
#include "tdlab/model.hpp"
#include "tdlab/tridiag.hpp"

namespace tdlab {

struct SampleDraw {
    std::uint64_t master_seed = 0;
    std::uint64_t index = 0;
    std::vector<std::int64_t> diag;     // iid-diag: n values; dyson: empty
    std::vector<std::int64_t> offdiag;  // dyson: n - 1 values; iid-diag: empty
};

// Validates `cfg`, then draws diagonal values followed by off-diagonal values by
// inversion of the exact cumulative weights on a 53-bit uniform.
SampleDraw sample(const ModelConfig& cfg, std::uint64_t master_seed, std::uint64_t index);

// Matrix of a draw: iid-diag gets unit off-diagonal, dyson the constant diagonal `shift`.
TridiagMatrix draw_matrix(const ModelConfig& cfg, const SampleDraw& draw);

// ln p rounded to nearest double (MPFR), identical on every platform.
double log_prime(std::uint64_t p);

struct ChebotarevRecord {
    std::uint64_t p = 0;
    double log_p = 0;
    unsigned r_all = 0;                 // distinct roots mod p
    unsigned r_nonzero = 0;             // distinct nonzero roots mod p
    std::vector<unsigned> degrees;      // factor degrees of the square-free part; empty in roots-only mode
    bool squarefree = true;
    friend bool operator==(const ChebotarevRecord&, const ChebotarevRecord&) = default;
};

struct ChebotarevOptions {
    std::uint64_t x = 10000;
    unsigned k_max = 3;
    bool exclude_zero = false;
    // primes p <= skip_through are left out of the averages
    std::uint64_t skip_through = 5;
    // primes dividing any of these are left out (dyson off-diagonal values)
    std::vector<std::int64_t> skip_divisors_of;
    bool factor_degrees = true;
    unsigned threads = 1;
};

struct ChebotarevResult {
    std::uint64_t x = 0;
    std::vector<ChebotarevRecord> records;  // ascending p
    std::vector<double> a;                  // a[k-1] = A_k
    std::vector<double> se;                 // standard error of A_k
    std::map<std::string, std::uint64_t> skipped;
};

/**
 * A_k = (1/x) sum_{x < p <= 2x} log p (r_p)_k over non-skipped primes, with r_p the number
 * of distinct roots mod p (nonzero roots only when exclude_zero). The standard error treats
 * the per-prime terms as an i.i.d. sample: sqrt(M var(t)) / x over M primes.
 */
ChebotarevResult run_chebotarev(const IntPoly& poly, const ChebotarevOptions& opt);

enum class GaloisVerdict { contains_an, sn, an, undetermined, reducible };
const char* to_string(GaloisVerdict v) noexcept;

struct GaloisCertificate {
    GaloisVerdict verdict = GaloisVerdict::undetermined;
    std::uint64_t irreducible_prime = 0;  // reduction irreducible: transitive with an n-cycle
    std::uint64_t jordan_prime = 0;       // reduction with a lone prime-degree factor q in (n/2, n-3]
    unsigned jordan_q = 0;
    bool irreducible = false;             // by an irreducible reduction or incompatible degree patterns
    std::optional<bool> disc_square;
    std::uint64_t primes_tried = 0;
    std::string reducible_reason;
};

// Tries the first `prime_budget` odd primes at which the reduction is square-free. Degree >= 8, monic.
GaloisCertificate certify_galois(const IntPoly& poly, std::uint64_t prime_budget, bool test_disc = true);

// Exact square test of the discriminant. Throws std::domain_error when it is zero.
bool disc_square_test(const IntPoly& poly);

// C k n^k log(H n) log^2 x / sqrt x.
double bv_error_bound(unsigned k, unsigned n, const mpz_class& height, double x, double c = 1.0);

// Skip threshold of a model: max(5, C) with C the generation threshold of its two heaviest atoms.
std::uint64_t skip_threshold(const ModelConfig& cfg);

struct PopulationOptions {
    unsigned samples = 50;
    std::uint64_t master_seed = 0;
    std::uint64_t x = 0;  // 0 skips the Chebotarev averages
    unsigned k_max = 3;
    std::uint64_t prime_budget = 10000;
    bool certify = true;
    unsigned threads = 1;
};

struct SampleReport {
    std::uint64_t index = 0;
    unsigned degree = 0;           // degree of the analyzed polynomial
    bool zero_root_removed = false;
    mpz_class height;              // of the analyzed polynomial
    bool height_bound_ok = true;   // height of the characteristic polynomial within height_bound
    bool perfect_power = false;
    bool irreducible_evidence = false;  // some reduction is irreducible
    bool r_nonzero_even = true;         // over all records
    GaloisCertificate cert;
    std::vector<double> a, se;
    std::uint64_t primes_used = 0;
    std::uint64_t primes_skipped = 0;
};

struct PopulationReport {
    ModelConfig config;
    PopulationOptions options;
    std::vector<SampleReport> samples;
    std::vector<double> targets;             // targets[k-1]
    std::vector<double> frac_within_half;    // fraction of samples with |A_k - target| < 1/2
    double frac_reducibility_evidence = 0;   // no irreducible reduction found, or a perfect power
    double frac_perfect_power = 0;
    double frac_irreducible_evidence = 0;
    double frac_zero_root_removed = 0;
    bool all_r_nonzero_even = true;
    bool all_height_bound_ok = true;
    std::map<std::string, std::uint64_t> verdicts;
};

/**
 * Polynomial analyzed for a draw: char_poly for iid-diag; for dyson, P(x + a) and, for odd n,
 * the quotient by x. Sets `zero_root_removed` accordingly.
 */
IntPoly analyzed_poly(const ModelConfig& cfg, const SampleDraw& draw, bool& zero_root_removed);

// Samples are independent; the report does not depend on the thread count.
PopulationReport run_population(const ModelConfig& cfg, const PopulationOptions& opt);

}  // namespace tdlab

#endif  // TDLAB_HARNESS_HPP
