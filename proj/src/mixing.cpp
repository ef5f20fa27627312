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

#include "tdlab/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "tdlab/parallel.hpp"

namespace tdlab {

namespace {

using u64 = std::uint64_t;
using Packed = ProductGroup::Packed;

constexpr u64 kTableEntries = u64{1} << 26;
constexpr std::size_t kChunk = 4096;

using PackedLaw = std::map<Packed, mpq_class>;

// Law of x_1^{e_1} ... x_r^{e_r} with x_j iid from base.
PackedLaw word_law(const ProductGroup& G, const PackedLaw& base, const std::vector<int>& signs) {
    PackedLaw inv;
    for (const auto& [g, q] : base) inv[G.inverse(g)] += q;
    PackedLaw law{{G.identity(), mpq_class(1)}};
    for (int s : signs) {
        const PackedLaw& step = s > 0 ? base : inv;
        PackedLaw next;
        for (const auto& [h, w] : law)
            for (const auto& [g, q] : step) next[G.mul(h, g)] += w * q;
        law = std::move(next);
    }
    return law;
}

}  // namespace

ChainSpec build_chain(const ModelConfig& model, int chain_id, const std::vector<std::uint32_t>& primes,
                      const std::vector<std::int64_t>& lambdas) {
    if (model.kind != ModelKind::iid_diag) throw std::invalid_argument("build_chain: needs an iid-diag model");
    if (chain_id < 1 || chain_id > 4) throw std::invalid_argument("build_chain: chain id must be 1..4");
    if (primes.empty() || primes.size() > 2) throw std::invalid_argument("build_chain: need 1 or 2 primes");
    if (primes.size() != lambdas.size()) throw std::invalid_argument("build_chain: one lambda per prime");
    if (model.diag.size() < 2) throw std::invalid_argument("build_chain: the diagonal law needs two atoms");

    const ProductGroup G(primes);
    auto element = [&](std::int64_t v) {
        ElemTuple t;
        for (std::size_t i = 0; i < primes.size(); ++i) t.push_back(transfer_mat(lambdas[i], v, primes[i]));
        return G.pack(t);
    };

    ChainSpec spec;
    spec.primes = primes;
    spec.lambdas = lambdas;
    spec.chain_id = chain_id;
    const auto [a1, a2] = ModelConfig::top_two(model.diag);
    spec.v = a1.value;
    spec.vp = a2.value;
    spec.alpha = std::min(a1.weight, a2.weight);

    PackedLaw base;
    if (chain_id == 4) {
        base[element(a1.value)] += mpq_class(1, 2);
        base[element(a2.value)] += mpq_class(1, 2);
    } else {
        for (const auto& atom : model.diag) base[element(atom.value)] += atom.weight;
    }
    std::vector<int> signs;
    switch (chain_id) {
        case 1:
            signs = {1};
            break;
        case 2:
            signs = {1, 1, 1};
            break;
        default:
            signs = {-1, -1, -1, 1, 1, 1};
    }
    const PackedLaw law = word_law(G, base, signs);

    std::vector<std::pair<u64, Increment>> sorted;
    for (const auto& [g, q] : law)
        if (q != 0) sorted.push_back({G.index(g), Increment{G.unpack(g), q}});
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [idx, inc] : sorted) spec.increments.push_back(std::move(inc));
    return spec;
}

SparseLaw increment_law(const ChainSpec& spec) {
    const ProductGroup G(spec.primes);
    SparseLaw law;
    for (const auto& inc : spec.increments) law[G.index(G.pack(inc.g))] += inc.prob;
    return law;
}

ChainOperator::ChainOperator(const ChainSpec& spec, u64 cap) : group_(spec.primes) {
    if (group_.order() > cap) throw std::length_error("ChainOperator: group exceeds the state cap");
    mpq_class total = 0;
    for (const auto& inc : spec.increments) {
        g_.push_back(group_.pack(inc.g));
        ginv_.push_back(group_.inverse(g_.back()));
        prob_.push_back(inc.prob.get_d());
        prob_exact_.push_back(inc.prob);
        total += inc.prob;
    }
    if (total != 1) throw std::invalid_argument("ChainOperator: increment probabilities must sum to 1");

    const u64 n = group_.order();
    if (g_.size() * n <= kTableEntries && n < (u64{1} << 32)) {
        fwd_.assign(g_.size(), std::vector<std::uint32_t>(n));
        bwd_.assign(g_.size(), std::vector<std::uint32_t>(n));
        for (u64 t = 0; t < n; ++t) {
            const Packed x = group_.element(t);
            for (std::size_t i = 0; i < g_.size(); ++i) {
                fwd_[i][t] = static_cast<std::uint32_t>(group_.index(group_.mul(ginv_[i], x)));
                bwd_[i][t] = static_cast<std::uint32_t>(group_.index(group_.mul(g_[i], x)));
            }
        }
    }
}

u64 ChainOperator::source(std::size_t inc, u64 t, bool transpose) const {
    if (!fwd_.empty()) return transpose ? bwd_[inc][t] : fwd_[inc][t];
    return group_.index(group_.mul(transpose ? g_[inc] : ginv_[inc], group_.element(t)));
}

void ChainOperator::apply(const std::vector<double>& in, std::vector<double>& out, bool transpose,
                          unsigned threads) const {
    const u64 n = states();
    if (in.size() != n) throw std::invalid_argument("ChainOperator::apply: size mismatch");
    out.assign(n, 0.0);
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    parallel_for(chunks, threads, [&](std::size_t c) {
        const u64 lo = c * kChunk, hi = std::min<u64>(n, lo + kChunk);
        for (u64 t = lo; t < hi; ++t) {
            double acc = 0;
            for (std::size_t i = 0; i < g_.size(); ++i) acc += prob_[i] * in[source(i, t, transpose)];
            out[t] = acc;
        }
    });
}

SparseLaw ChainOperator::apply_exact(const SparseLaw& in, bool transpose) const {
    SparseLaw out;
    for (const auto& [s, w] : in) {
        const Packed x = group_.element(s);
        for (std::size_t i = 0; i < g_.size(); ++i)
            out[group_.index(group_.mul(transpose ? ginv_[i] : g_[i], x))] += prob_exact_[i] * w;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

DistVector evolve(const ChainSpec& spec, unsigned n, unsigned threads, u64 cap) {
    const ChainOperator op(spec, cap);
    DistVector d;
    d.values.assign(op.states(), 0.0);
    d.values[op.identity_index()] = 1.0;
    std::vector<double> tmp;
    for (unsigned s = 0; s < n; ++s) {
        op.apply(d.values, tmp, false, threads);
        d.values.swap(tmp);
    }
    d.error_bound = static_cast<double>(n) * static_cast<double>(op.states()) * std::ldexp(1.0, -53);
    return d;
}

SparseLaw evolve_exact(const ChainSpec& spec, unsigned n, u64 cap) {
    const ChainOperator op(spec, cap);
    SparseLaw law{{op.identity_index(), mpq_class(1)}};
    for (unsigned s = 0; s < n; ++s) law = op.apply_exact(law);
    return law;
}

namespace {

double l1_to_uniform(const std::vector<double>& v) {
    const double u = 1.0 / static_cast<double>(v.size());
    double acc = 0;
    for (double x : v) acc += std::fabs(x - u);
    return acc;
}

}  // namespace

double d_k(const ChainSpec& spec, unsigned n, unsigned threads, u64 cap) {
    return l1_to_uniform(evolve(spec, n, threads, cap).values);
}

std::vector<double> decay_curve(const ChainSpec& spec, unsigned n_max, double stop_below, unsigned threads, u64 cap) {
    const ChainOperator op(spec, cap);
    std::vector<double> cur(op.states(), 0.0), tmp;
    cur[op.identity_index()] = 1.0;
    std::vector<double> curve{l1_to_uniform(cur)};
    for (unsigned s = 1; s <= n_max && curve.back() >= stop_below; ++s) {
        op.apply(cur, tmp, false, threads);
        cur.swap(tmp);
        curve.push_back(l1_to_uniform(cur));
    }
    return curve;
}

TailFit tail_fit(const std::vector<double>& curve, double hi, double lo) {
    TailFit f;
    std::size_t a = 0;
    while (a < curve.size() && curve[a] > hi) ++a;
    std::size_t b = a;
    while (b < curve.size() && curve[b] > lo) ++b;
    if (b >= curve.size() || b < a + 2) return f;
    f.first = static_cast<unsigned>(a);
    f.last = static_cast<unsigned>(b);
    const double m = static_cast<double>(b - a + 1);
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t n = a; n <= b; ++n) {
        const double x = static_cast<double>(n), y = std::log(curve[n]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double vx = sxx - sx * sx / m, vy = syy - sy * sy / m, cxy = sxy - sx * sy / m;
    f.slope = cxy / vx;
    f.intercept = (sy - f.slope * sx) / m;
    f.r2 = vy > 0 ? cxy * cxy / (vx * vy) : 1.0;
    f.valid = true;
    return f;
}

namespace {

void remove_mean(std::vector<double>& x) {
    double m = 0;
    for (double v : x) m += v;
    m /= static_cast<double>(x.size());
    for (double& v : x) v -= m;
}

double norm(const std::vector<double>& x) {
    double s = 0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

struct PowerResult {
    double value = 0;
    double residual = 0;
    unsigned iterations = 0;
    bool converged = false;
};

// Dominant eigenvalue of a symmetric PSD operator restricted to the complement of constants.
template <class Op>
PowerResult power_iteration(std::size_t n, const Op& op, double tol, unsigned max_iter) {
    PowerResult best;
    for (unsigned attempt = 0; attempt < 3; ++attempt) {
        std::mt19937_64 rng(0x5eed + attempt);
        std::normal_distribution<double> gauss;
        std::vector<double> x(n), y;
        for (double& v : x) v = gauss(rng);
        remove_mean(x);
        double nx = norm(x);
        for (double& v : x) v /= nx;
        PowerResult r;
        for (unsigned it = 1; it <= max_iter; ++it) {
            op(x, y);
            remove_mean(y);
            double theta = 0;
            for (std::size_t i = 0; i < n; ++i) theta += x[i] * y[i];
            double res = 0;
            for (std::size_t i = 0; i < n; ++i) res += (y[i] - theta * x[i]) * (y[i] - theta * x[i]);
            r.value = theta;
            r.residual = std::sqrt(res);
            r.iterations = it;
            // residual bounds the distance from theta to the spectrum
            if (r.residual < tol) {
                r.converged = true;
                break;
            }
            const double ny = norm(y);
            if (ny == 0) {
                r.value = 0;
                r.residual = 0;
                r.converged = true;
                break;
            }
            for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
        }
        if (r.converged) return r;
        best = r;
    }
    return best;
}

struct LanczosResult {
    double lo = 0, hi = 0;
    double res_lo = 0, res_hi = 0;
    unsigned iterations = 0;
    bool converged = false;
};

// Extreme eigenvalues of a symmetric operator on the complement of constants. The basis
// is grown Lanczos-style with full reorthogonalization; Ritz values come from the
// projected matrix Q^t A Q and residuals ||A y - theta y|| are computed explicitly.
template <class Op>
LanczosResult lanczos(std::size_t n, const Op& op, double tol, unsigned max_steps) {
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> gauss;
    std::vector<std::vector<double>> Q, AQ;
    std::vector<double> q(n), w;
    for (double& v : q) v = gauss(rng);
    remove_mean(q);
    const double nq = norm(q);
    for (double& v : q) v /= nq;
    Q.push_back(q);
    LanczosResult r;
    const unsigned steps = static_cast<unsigned>(std::min<std::size_t>(max_steps, n - 1));
    for (unsigned j = 0; j < steps; ++j) {
        op(Q[j], w);
        remove_mean(w);
        AQ.push_back(w);
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& qk : Q) {
                double c = 0;
                for (std::size_t i = 0; i < n; ++i) c += qk[i] * w[i];
                for (std::size_t i = 0; i < n; ++i) w[i] -= c * qk[i];
            }
            remove_mean(w);
        }
        const double b = norm(w);
        r.iterations = j + 1;
        // a tiny remainder means an invariant subspace; normalizing it would break orthogonality
        const bool last = b < 1e-8 || j + 1 == steps;
        if ((j + 1) % 10 == 0 || last) {
            const auto m = static_cast<Eigen::Index>(Q.size());
            Eigen::MatrixXd H(m, m);
            for (Eigen::Index a = 0; a < m; ++a)
                for (Eigen::Index c = 0; c < m; ++c) {
                    double dot = 0;
                    for (std::size_t i = 0; i < n; ++i) dot += Q[a][i] * AQ[c][i];
                    H(a, c) = dot;
                }
            const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (H + H.transpose()));
            auto residual = [&](Eigen::Index col) {
                const double theta = es.eigenvalues()(col);
                double acc = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    double v = 0;
                    for (Eigen::Index k = 0; k < m; ++k) v += es.eigenvectors()(k, col) * (AQ[k][i] - theta * Q[k][i]);
                    acc += v * v;
                }
                return std::sqrt(acc);
            };
            r.lo = es.eigenvalues()(0);
            r.hi = es.eigenvalues()(m - 1);
            r.res_lo = residual(0);
            r.res_hi = residual(m - 1);
            if (std::max(r.res_lo, r.res_hi) < tol) {
                r.converged = true;
                return r;
            }
        }
        if (last) break;
        for (double& v : w) v /= b;
        Q.push_back(w);
    }
    return r;
}

constexpr u64 kLanczosDoubles = u64{1} << 25;

}  // namespace

SpectralResult second_eigenvalue(const ChainSpec& spec, unsigned threads, double tol, unsigned max_iter, u64 cap) {
    const ChainOperator op(spec, cap);
    const std::size_t n = op.states();
    SpectralResult out;
    if (n == 1) {
        out.converged = true;
        return out;
    }
    std::vector<double> tmp;
    auto gram = [&](const std::vector<double>& x, std::vector<double>& y) {
        op.apply(x, tmp, false, threads);
        op.apply(tmp, y, true, threads);
    };
    auto plain = [&](const std::vector<double>& x, std::vector<double>& y) { op.apply(x, y, false, threads); };
    const unsigned krylov = std::min<unsigned>(max_iter, 2000);
    out.singular_values = spec.chain_id <= 2;

    if (static_cast<u64>(n) * krylov <= kLanczosDoubles) {
        const auto r = out.singular_values ? lanczos(n, gram, tol, krylov) : lanczos(n, plain, tol, krylov);
        out.converged = r.converged;
        out.residual = std::max(r.res_lo, r.res_hi);
        out.iterations = r.iterations;
        if (out.singular_values) {
            out.lambda2 = out.lambda_min = out.max_abs = std::sqrt(std::max(0.0, r.hi));
        } else {
            out.lambda2 = r.hi;
            out.lambda_min = r.lo;
            out.max_abs = std::max(std::fabs(r.hi), std::fabs(r.lo));
        }
        return out;
    }

    // Large state spaces: power iteration on PSD operators.
    if (out.singular_values) {
        const auto r = power_iteration(n, gram, tol, max_iter);
        out.lambda2 = out.lambda_min = out.max_abs = std::sqrt(std::max(0.0, r.value));
        out.converged = r.converged;
        out.residual = r.residual;
        out.iterations = r.iterations;
        return out;
    }
    // I + Pi and I - Pi are PSD when Pi is symmetric stochastic.
    const auto top = power_iteration(n, [&](const std::vector<double>& x, std::vector<double>& y) {
        op.apply(x, y, false, threads);
        for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
    }, tol, max_iter);
    const auto bottom = power_iteration(n, [&](const std::vector<double>& x, std::vector<double>& y) {
        op.apply(x, y, false, threads);
        for (std::size_t i = 0; i < n; ++i) y[i] = x[i] - y[i];
    }, tol, max_iter);
    out.lambda2 = top.value - 1;
    out.lambda_min = 1 - bottom.value;
    out.max_abs = std::max(std::fabs(out.lambda2), std::fabs(out.lambda_min));
    out.converged = top.converged && bottom.converged;
    out.residual = std::max(top.residual, bottom.residual);
    out.iterations = top.iterations + bottom.iterations;
    return out;
}

DecompositionResult decomposition_check(const ChainSpec& spec3, const ChainSpec& spec4) {
    if (spec3.chain_id != 3 || spec4.chain_id != 4) throw std::invalid_argument("decomposition_check: need chains 3 and 4");
    if (spec3.primes != spec4.primes || spec3.lambdas != spec4.lambdas || spec3.alpha != spec4.alpha)
        throw std::invalid_argument("decomposition_check: chains come from different models");
    DecompositionResult r;
    r.alpha = spec4.alpha;
    if (r.alpha >= 1) throw std::invalid_argument("decomposition_check: alpha must be below 1");
    const ProductGroup G(spec3.primes);
    SparseLaw rest = increment_law(spec3);
    for (const auto& [g, q] : increment_law(spec4)) rest[g] -= r.alpha * q;
    mpq_class total = 0;
    bool first = true;
    for (const auto& [g, q] : rest) {
        if (first || q < r.min_slack) r.min_slack = q;
        first = false;
        total += q;
    }
    r.support = rest.size();
    r.row_sums_one = total / (1 - r.alpha) == 1;
    r.symmetric = true;
    for (const auto& [g, q] : rest) {
        const auto it = rest.find(G.index(G.inverse(G.element(g))));
        if (it == rest.end() || it->second != q) r.symmetric = false;
    }
    r.pass = r.min_slack >= 0 && r.row_sums_one;
    return r;
}

unsigned support_diameter(const ChainSpec& spec) {
    std::vector<ElemTuple> gens;
    for (const auto& inc : spec.increments) gens.push_back(inc.g);
    return cayley_diameter(gens);
}

}  // namespace tdlab
