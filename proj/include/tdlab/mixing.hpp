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

#ifndef TDLAB_MIXING_HPP
#define TDLAB_MIXING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "tdlab/model.hpp"
#include "tdlab/product_group.hpp"

namespace tdlab {

constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 25;

struct Increment {
    ElemTuple g;
    mpq_class prob;
};

/**
 * Random walk h -> g h on PSL_2(p_1) x ... x PSL_2(p_k) (k <= 2), g drawn from
 * `increments`. Chains:
 *   1: g = (T(lambda_i - V))_i
 *   2: g = g1 g2 g3, g_j as in chain 1
 *   3: g = g1^-1 g2^-1 g3^-1 g4 g5 g6, g_j as in chain 1
 *   4: as chain 3 with g_j uniform on the two heaviest atoms v, v'
 */
struct ChainSpec {
    std::vector<std::uint32_t> primes;
    std::vector<std::int64_t> lambdas;
    int chain_id = 1;
    std::vector<Increment> increments;  // sorted by group index, exact probabilities
    mpq_class alpha;                    // min(P(V = v), P(V = v'))
    std::int64_t v = 0, vp = 0;
};

// Throws std::invalid_argument for dyson models, bad chain ids, or k > 2.
ChainSpec build_chain(const ModelConfig& model, int chain_id, const std::vector<std::uint32_t>& primes,
                      const std::vector<std::int64_t>& lambdas);

// Sparse law keyed by group index.
using SparseLaw = std::map<std::uint64_t, mpq_class>;

// Increment law of `spec` as a SparseLaw.
SparseLaw increment_law(const ChainSpec& spec);

/**
 * The transition operator stored as its increment list. Column convention:
 * (Pi x)[t] = sum_g mu(g) x[g^-1 t], so Pi applied to the law of the walk gives
 * the law one step later. The transpose moves mass at s to g^-1 s.
 */
class ChainOperator {
   public:
    explicit ChainOperator(const ChainSpec& spec, std::uint64_t cap = kDefaultStateCap);

    std::uint64_t states() const noexcept { return group_.order(); }
    std::uint64_t identity_index() const noexcept { return group_.index(group_.identity()); }
    const ProductGroup& group() const noexcept { return group_; }

    void apply(const std::vector<double>& in, std::vector<double>& out, bool transpose = false,
               unsigned threads = 1) const;
    SparseLaw apply_exact(const SparseLaw& in, bool transpose = false) const;

   private:
    std::uint64_t source(std::size_t inc, std::uint64_t t, bool transpose) const;

    ProductGroup group_;
    std::vector<ProductGroup::Packed> g_, ginv_;
    std::vector<double> prob_;
    std::vector<mpq_class> prob_exact_;
    // source tables for small instances, indexed [inc][t]; empty when too large
    std::vector<std::vector<std::uint32_t>> fwd_, bwd_;
};

struct DistVector {
    std::vector<double> values;
    double error_bound = 0;  // n * states * 2^-53
};

DistVector evolve(const ChainSpec& spec, unsigned n, unsigned threads = 1, std::uint64_t cap = kDefaultStateCap);

// Exact law after n steps; only sensible for small groups.
SparseLaw evolve_exact(const ChainSpec& spec, unsigned n, std::uint64_t cap = kDefaultStateCap);

// l1 distance to uniform after n steps.
double d_k(const ChainSpec& spec, unsigned n, unsigned threads = 1, std::uint64_t cap = kDefaultStateCap);

// d_k(0), ..., d_k(n_max); stops early once the value drops below stop_below.
std::vector<double> decay_curve(const ChainSpec& spec, unsigned n_max, double stop_below = 0, unsigned threads = 1,
                                std::uint64_t cap = kDefaultStateCap);

struct TailFit {
    bool valid = false;
    unsigned first = 0, last = 0;  // fitted window, inclusive
    double slope = 0, intercept = 0, r2 = 0;
};

// Least-squares fit of log d(n) against n from the first n with d <= hi to the first with d <= lo.
TailFit tail_fit(const std::vector<double>& curve, double hi = 1e-2, double lo = 1e-10);

struct SpectralResult {
    double lambda2 = 0;     // largest eigenvalue on the complement of constants (second singular value for chains 1, 2)
    double lambda_min = 0;  // smallest eigenvalue (equals lambda2 in singular-value mode)
    double max_abs = 0;
    bool converged = false;
    bool singular_values = false;
    double residual = 0;
    unsigned iterations = 0;
};

SpectralResult second_eigenvalue(const ChainSpec& spec, unsigned threads = 1, double tol = 1e-10,
                                 unsigned max_iter = 100000, std::uint64_t cap = kDefaultStateCap);

struct DecompositionResult {
    bool pass = false;
    mpq_class alpha;
    mpq_class min_slack;  // min over g of mu3(g) - alpha mu4(g)
    bool row_sums_one = false;
    bool symmetric = false;  // residual law invariant under g -> g^-1
    std::size_t support = 0;
};

// Pi' = (Pi_3 - alpha Pi_4) / (1 - alpha) in exact rationals.
DecompositionResult decomposition_check(const ChainSpec& spec3, const ChainSpec& spec4);

// Cayley diameter with respect to the support of the increments (must be symmetric).
unsigned support_diameter(const ChainSpec& spec);

}  // namespace tdlab

#endif  // TDLAB_MIXING_HPP
