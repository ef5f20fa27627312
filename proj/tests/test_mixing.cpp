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

#include <Eigen/Dense>
#include <cmath>
#include <map>

#include "doctest.h"
#include "tdlab/mixing.hpp"

using namespace tdlab;

namespace {

// Law of the increment by enumerating all 2^r words with their weights (no convolution).
std::map<std::uint64_t, mpq_class> brute_law(const ModelConfig& m, std::uint32_t p, std::int64_t l,
                                             const std::vector<int>& signs, bool uniform_top) {
    std::vector<Atom> atoms = m.diag;
    if (uniform_top) {
        const auto [a, b] = ModelConfig::top_two(m.diag);
        atoms = {{a.value, mpq_class(1, 2)}, {b.value, mpq_class(1, 2)}};
    }
    const PSL2Indexer ix(p);
    std::map<std::uint64_t, mpq_class> law;
    std::vector<std::size_t> pick(signs.size(), 0);
    for (;;) {
        PSL2Elem g = PSL2Elem::identity(p);
        mpq_class w = 1;
        for (std::size_t j = 0; j < signs.size(); ++j) {
            const PSL2Elem t = transfer_mat(l, atoms[pick[j]].value, p);
            g = g * (signs[j] > 0 ? t : inverse(t));
            w *= atoms[pick[j]].weight;
        }
        law[ix.index(g)] += w;
        std::size_t j = 0;
        while (j < pick.size() && ++pick[j] == atoms.size()) pick[j++] = 0;
        if (j == pick.size()) break;
    }
    return law;
}

Eigen::MatrixXd dense(const ChainSpec& spec) {
    const PSL2Indexer ix(spec.primes[0]);
    const auto n = static_cast<Eigen::Index>(ix.order());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index s = 0; s < n; ++s)
        for (const auto& inc : spec.increments)
            m(static_cast<Eigen::Index>(ix.index(inc.g[0] * ix.element(s))), s) += inc.prob.get_d();
    return m;
}

SparseLaw delta(std::uint64_t i) { return SparseLaw{{i, mpq_class(1)}}; }

}  // namespace

TEST_CASE("increment laws match brute-force word enumeration") {
    const ModelConfig bern = ModelConfig::bernoulli(10);
    ModelConfig skew = bern;
    skew.diag = {{0, mpq_class(2, 5)}, {1, mpq_class(3, 5)}};
    ModelConfig three = bern;
    three.diag = {{-1, mpq_class(1, 6)}, {0, mpq_class(1, 3)}, {2, mpq_class(1, 2)}};
    for (const ModelConfig* m : std::vector<const ModelConfig*>{&bern, &skew, &three}) {
        for (std::uint32_t p : {5U, 7U}) {
            for (std::int64_t l : {0, 2}) {
                CHECK(increment_law(build_chain(*m, 1, {p}, {l})) == brute_law(*m, p, l, {1}, false));
                CHECK(increment_law(build_chain(*m, 2, {p}, {l})) == brute_law(*m, p, l, {1, 1, 1}, false));
                CHECK(increment_law(build_chain(*m, 3, {p}, {l})) == brute_law(*m, p, l, {-1, -1, -1, 1, 1, 1}, false));
                CHECK(increment_law(build_chain(*m, 4, {p}, {l})) == brute_law(*m, p, l, {-1, -1, -1, 1, 1, 1}, true));
            }
        }
    }
}

TEST_CASE("build_chain basics") {
    const ModelConfig bern = ModelConfig::bernoulli(10);
    const auto c1 = build_chain(bern, 1, {5}, {0});
    REQUIRE(c1.increments.size() == 2);
    CHECK(c1.increments[0].prob == mpq_class(1, 2));
    CHECK(c1.alpha == mpq_class(1, 2));
    CHECK_THROWS(build_chain(bern, 5, {5}, {0}));
    CHECK_THROWS(build_chain(bern, 1, {5, 5, 5}, {0, 1, 2}));
    ModelConfig dys;
    dys.kind = ModelKind::dyson;
    dys.offdiag = bern.diag;
    CHECK_THROWS(build_chain(dys, 1, {5}, {0}));
}

TEST_CASE("Pi_2 = Pi_1^3 and Pi_3 = (Pi_1^3)^t Pi_1^3 on basis vectors") {
    const ModelConfig bern = ModelConfig::bernoulli(10);
    for (std::uint32_t p : {5U, 7U}) {
        const ChainOperator o1(build_chain(bern, 1, {p}, {0}));
        const ChainOperator o2(build_chain(bern, 2, {p}, {0}));
        const ChainOperator o3(build_chain(bern, 3, {p}, {0}));
        for (std::uint64_t s = 0; s < o1.states(); s += 7) {
            const SparseLaw a = o1.apply_exact(o1.apply_exact(o1.apply_exact(delta(s))));
            CHECK(a == o2.apply_exact(delta(s)));
            const SparseLaw b = o1.apply_exact(o1.apply_exact(o1.apply_exact(a, true), true), true);
            CHECK(b == o3.apply_exact(delta(s)));
        }
    }
}

TEST_CASE("chains 3 and 4 are symmetric; uniform is stationary") {
    const ModelConfig bern = ModelConfig::bernoulli(10);
    for (int id = 1; id <= 4; ++id) {
        const auto spec = build_chain(bern, id, {7}, {3});
        const Eigen::MatrixXd m = dense(spec);
        const Eigen::VectorXd u = Eigen::VectorXd::Constant(m.rows(), 1.0 / static_cast<double>(m.rows()));
        CHECK((m * u - u).cwiseAbs().maxCoeff() < 1e-15);
        CHECK((Eigen::RowVectorXd::Ones(m.rows()) * m - Eigen::RowVectorXd::Ones(m.rows())).cwiseAbs().maxCoeff() < 1e-12);
        if (id >= 3) CHECK((m - m.transpose()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("evolve and d_k") {
    const ModelConfig bern = ModelConfig::bernoulli(10);
    const auto c1 = build_chain(bern, 1, {5}, {0});
    const auto d0 = evolve(c1, 0);
    CHECK(d0.values[ChainOperator(c1).identity_index()] == 1.0);
    CHECK(d_k(c1, 0) == doctest::Approx(59.0 / 30.0).epsilon(1e-13));
    const auto law1 = evolve_exact(c1, 1);
    CHECK(law1 == increment_law(c1));

    // float evolution tracks the exact one
    const auto exact = evolve_exact(c1, 200);
    const auto fl = evolve(c1, 200);
    double worst = 0;
    for (std::uint64_t i = 0; i < fl.values.size(); ++i) {
        const auto it = exact.find(i);
        const double e = it == exact.end() ? 0.0 : it->second.get_d();
        worst = std::max(worst, std::fabs(e - fl.values[i]));
    }
    CHECK(worst < 1e-9);
    double sum = 0;
    for (double x : fl.values) sum += x;
    CHECK(std::fabs(sum - 1) < 1e-12);

    // chain 3: monotone
    const auto curve = decay_curve(build_chain(bern, 3, {7}, {0}), 60);
    for (std::size_t i = 1; i < curve.size(); ++i) CHECK(curve[i] <= curve[i - 1] + 1e-12);

    // threaded application is identical
    const auto a = evolve(build_chain(bern, 3, {13}, {1}), 10, 1), b = evolve(build_chain(bern, 3, {13}, {1}), 10, 4);
    CHECK(a.values == b.values);
}

TEST_CASE("chain 1 reaches 1e-3 at the oracle step counts") {
    const ModelConfig bern = ModelConfig::bernoulli(10);
    const std::vector<std::pair<std::uint32_t, std::size_t>> golden{{5, 117}, {7, 159}, {11, 245}, {13, 289}};
    for (auto [p, n] : golden) {
        const auto curve = decay_curve(build_chain(bern, 1, {p}, {0}), 1000, 1e-3);
        CHECK(curve.size() - 1 == n);
        CHECK(curve.back() < 1e-3);
    }
}

TEST_CASE("tail fit") {
    std::vector<double> c;
    for (int n = 0; n < 200; ++n) c.push_back(2 * std::exp(-0.2 * n));
    const auto f = tail_fit(c);
    REQUIRE(f.valid);
    CHECK(f.slope == doctest::Approx(-0.2));
    CHECK(f.r2 == doctest::Approx(1.0));
    CHECK_FALSE(tail_fit({1.0, 0.5}).valid);
}

TEST_CASE("second eigenvalue agrees with a dense symmetric solver") {
    const ModelConfig bern = ModelConfig::bernoulli(10);
    for (std::uint32_t p : {5U, 7U, 11U}) {
        for (int id : {3, 4}) {
            const auto spec = build_chain(bern, id, {p}, {0});
            const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense(spec));
            const auto& ev = es.eigenvalues();  // ascending; top one is 1
            const auto r = second_eigenvalue(spec);
            CHECK(r.converged);
            CHECK(ev(ev.size() - 1) == doctest::Approx(1.0));
            CHECK(r.lambda2 == doctest::Approx(ev(ev.size() - 2)).epsilon(1e-8));
            CHECK(r.lambda_min == doctest::Approx(ev(0)).epsilon(1e-8));
        }
        const auto c1 = build_chain(bern, 1, {p}, {0});
        const Eigen::MatrixXd m = dense(c1);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
        const auto r = second_eigenvalue(c1);
        CHECK(r.singular_values);
        CHECK(r.lambda2 == doctest::Approx(svd.singularValues()(1)).epsilon(1e-7));
    }
}

TEST_CASE("uniform increments on the whole group: second eigenvalue 0") {
    ChainSpec spec;
    spec.primes = {5};
    spec.lambdas = {0};
    spec.chain_id = 4;
    const PSL2Indexer ix(5);
    for (std::uint64_t i = 0; i < ix.order(); ++i) spec.increments.push_back({{ix.element(i)}, mpq_class(1, 60)});
    const auto r = second_eigenvalue(spec);
    CHECK(r.converged);
    CHECK(std::fabs(r.max_abs) < 1e-12);
}

TEST_CASE("decomposition_check matches the rational oracle") {
    const ModelConfig bern = ModelConfig::bernoulli(10);
    auto r = decomposition_check(build_chain(bern, 3, {5}, {0}), build_chain(bern, 4, {5}, {0}));
    CHECK(r.pass);
    CHECK(r.alpha == mpq_class(1, 2));
    CHECK(r.min_slack == mpq_class(1, 128));
    CHECK(r.row_sums_one);
    CHECK(r.symmetric);

    ModelConfig skew = bern;
    skew.diag = {{0, mpq_class(2, 5)}, {1, mpq_class(3, 5)}};
    r = decomposition_check(build_chain(skew, 3, {5}, {0}), build_chain(skew, 4, {5}, {0}));
    CHECK(r.pass);
    CHECK(r.alpha == mpq_class(2, 5));
    CHECK(r.min_slack == mpq_class(1483, 500000));
}

TEST_CASE("DSC bound on chain 4") {
    const ModelConfig bern = ModelConfig::bernoulli(10);
    const auto c4 = build_chain(bern, 4, {5}, {0});
    const unsigned delta = support_diameter(c4);
    CHECK(delta >= 1);
    const auto r = second_eigenvalue(c4);
    CHECK(r.max_abs <= 1 - 1.0 / (64.0 * delta * delta) + 1e-9);
}
