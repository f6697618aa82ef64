#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "glauber/ising.hpp"
#include "glauber/dobrushin.hpp"
#include "glauber/measure.hpp"
#include "oracles.hpp"

using namespace glauber;

namespace {

GibbsMeasure single_edge(double beta, double J = 1.0) {
    return build_ising(IsingModel::homogeneous(InteractionGraph::path(2), J, beta));
}

}  // namespace

TEST_CASE("beta = 0 gives the uniform measure with b = 1") {
    auto mu = build_ising(IsingModel::homogeneous(InteractionGraph::path(3), 1.0, 0.0));
    CHECK(mu.probs().isApproxToConstant(1.0 / 8.0, 1e-14));
    CHECK(mu.pinned_ratio_bound() == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("single-edge Ising at beta = 0.2 has b = e^{0.4}") {
    // flipping one endpoint changes the energy term by 2 beta J
    auto mu = single_edge(0.2);
    CHECK(mu.pinned_ratio_bound() == Catch::Approx(std::exp(0.4)).epsilon(1e-12));
}

TEST_CASE("3-cycle Ising probabilities match the partition-function oracle") {
    auto mu = build_ising(IsingModel::homogeneous(InteractionGraph::cycle(3), 1.0, 0.1));
    const auto ref = oracle::ising_probs(3, {{{0, 1, 1.0}}, {{1, 2, 1.0}}, {{2, 0, 1.0}}},
                                         {0.0, 0.0, 0.0}, 0.1);
    REQUIRE(mu.probs().size() == ref.size());
    for (std::int64_t x = 0; x < ref.size(); ++x)
        CHECK(mu.prob(x) == Catch::Approx(ref[x]).epsilon(1e-12));
}

TEST_CASE("probabilities are positive and sum to one") {
    for (double beta : {0.0, 0.3, 1.0, 2.0}) {
        auto mu = build_ising(IsingModel::homogeneous(InteractionGraph::cycle(4), 1.0, beta));
        CHECK(mu.probs().minCoeff() > 0.0);
        CHECK(std::abs(mu.probs().sum() - 1.0) <= 1e-12);
    }
}

TEST_CASE("log-weight spread beyond 500 is rejected") {
    CHECK_THROWS_AS(build_ising(IsingModel::homogeneous(InteractionGraph::path(2), 1.0, 300.0)),
                    SpecError);
    CHECK_NOTHROW(build_ising(IsingModel::homogeneous(InteractionGraph::path(2), 1.0, 100.0)));
}

TEST_CASE("field and couplings are validated") {
    CHECK_THROWS_AS(IsingModel(InteractionGraph::path(3), {{{0, 2}, 1.0}}, {}, 1.0), SpecError);
    CHECK_THROWS_AS(IsingModel(InteractionGraph::path(3), {}, {0.0, 0.0}, 1.0), SpecError);
}

TEST_CASE("markov property: uniform measure passes any graph with violation 0") {
    StateSpace space(3, Alphabet::spins());
    const Eigen::VectorXd u = Eigen::VectorXd::Constant(8, 1.0 / 8.0);
    for (const auto& g : {InteractionGraph::edgeless(3), InteractionGraph::path(3), InteractionGraph::cycle(3)}) {
        const auto res = verify_markov_property(space, u, g);
        CHECK(res.holds);
        CHECK(res.worst_tv <= 1e-15);
    }
}

TEST_CASE("markov property: path Ising is Markov for the path, not edgeless") {
    auto mu = build_ising(IsingModel::homogeneous(InteractionGraph::path(3), 1.0, 0.4));
    CHECK(verify_markov_property(mu, InteractionGraph::path(3)).holds);
    const auto bad = verify_markov_property(mu, InteractionGraph::edgeless(3));
    CHECK_FALSE(bad.holds);
    CHECK(bad.worst_tv > 1e-3);
}

TEST_CASE("markov property: X_1 independent of X_3 given X_2 on the path") {
    auto mu = build_ising(IsingModel::homogeneous(InteractionGraph::path(3), 1.0, 0.4));
    // conditional law of X_0 must agree across the two values of X_2 once X_1 is fixed
    const auto& sp = mu.space();
    for (int x1 : {0, 1}) {
        const auto a = mu.conditional(sp.index_of({0, x1, 0}), 0);
        const auto b = mu.conditional(sp.index_of({0, x1, 1}), 0);
        CHECK(a[0] == Catch::Approx(b[0]).margin(1e-14));
    }
}

TEST_CASE("three-way interaction is not Markov for a graph missing an edge") {
    StateSpace space(3, Alphabet::spins());
    Eigen::VectorXd w(8);
    for (std::int64_t v = 0; v < 8; ++v) {
        const auto x = oracle::config_of(v, 3, 2);
        const int s0 = 2 * x[0] - 1, s1 = 2 * x[1] - 1, s2 = 2 * x[2] - 1;
        w[v] = std::exp(0.5 * s0 * s1 * s2);
    }
    std::vector<std::pair<int, int>> missing_one = {{0, 1}, {0, 2}};
    const auto res = verify_markov_property(space, w / w.sum(), InteractionGraph(3, missing_one));
    CHECK_FALSE(res.holds);

    CHECK_THROWS_AS(build_mrf_from_table(space, w, InteractionGraph(3, missing_one)), SpecError);
    CHECK_NOTHROW(build_mrf_from_table(space, w, InteractionGraph::cycle(3)));
}

TEST_CASE("build_mrf_from_table accepts product weights with an empty graph") {
    StateSpace space(3, Alphabet::spins());
    Eigen::VectorXd w(8);
    const double px[2] = {0.3, 0.7}, py[2] = {0.5, 0.5}, pz[2] = {0.1, 0.9};
    for (std::int64_t v = 0; v < 8; ++v) {
        const auto x = oracle::config_of(v, 3, 2);
        w[v] = px[x[0]] * py[x[1]] * pz[x[2]];
    }
    auto mu = build_mrf_from_table(space, w, InteractionGraph::edgeless(3));
    CHECK(mu.prob(0) == Catch::Approx(0.3 * 0.5 * 0.1).epsilon(1e-12));
}

TEST_CASE("build_mrf_from_table rejects a perturbed Ising table on the path graph") {
    auto mu = build_ising(IsingModel::homogeneous(InteractionGraph::path(3), 1.0, 0.4));
    Eigen::VectorXd w = mu.probs();
    CHECK_NOTHROW(build_mrf_from_table(mu.space(), w, InteractionGraph::path(3)));
    w[3] *= 1.1;
    CHECK_THROWS_AS(build_mrf_from_table(mu.space(), w, InteractionGraph::path(3)), SpecError);
}

TEST_CASE("build_mrf_from_table rejects nonpositive weights") {
    StateSpace space(2, Alphabet::spins());
    Eigen::VectorXd w = Eigen::VectorXd::Ones(4);
    w[2] = 0.0;
    CHECK_THROWS_AS(build_mrf_from_table(space, w, InteractionGraph::edgeless(2)), SpecError);
}

TEST_CASE("pinned ratio bound: uniform is exactly 1, monotone in beta") {
    auto uni = GibbsMeasure::uniform(StateSpace(3, Alphabet::spins()));
    CHECK(uni.pinned_ratio_bound() == 1.0);

    double prev = 1.0;
    for (double beta : {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3}) {
        auto mu = build_ising(IsingModel::homogeneous(InteractionGraph::path(3), 1.0, beta));
        CHECK(mu.pinned_ratio_bound() >= prev - 1e-12);
        prev = mu.pinned_ratio_bound();
    }
}

TEST_CASE("pinned ratio bound of a raw vector rejects zero-probability states") {
    StateSpace space(2, Alphabet::spins());
    Eigen::VectorXd p = Eigen::VectorXd::Constant(4, 0.25);
    p[1] = 0.0;
    CHECK_THROWS_AS(pinned_ratio_bound(space, p), SpecError);
}

TEST_CASE("conditional law: uniform resamples uniformly") {
    auto uni = GibbsMeasure::uniform(StateSpace(2, Alphabet::labeled(3)));
    const auto law = uni.conditional(4, 1);
    for (double p : law) CHECK(p == Catch::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("conditional law: single-edge Ising with the neighbor at +1") {
    auto mu = single_edge(0.3);
    // neighbor x_1 = +1 -> law of X_0 proportional to (e^{-0.3}, e^{+0.3})
    const auto law = mu.conditional(mu.space().index_of({0, 1}), 0);
    const double z = std::exp(0.3) + std::exp(-0.3);
    CHECK(law[0] == Catch::Approx(std::exp(-0.3) / z).epsilon(1e-12));
    CHECK(law[1] == Catch::Approx(std::exp(0.3) / z).epsilon(1e-12));
}

TEST_CASE("conditional laws match the scan oracle and obey the 1/(qb) floor") {
    auto mu = build_ising(IsingModel::homogeneous(InteractionGraph::cycle(3), 1.0, 0.35));
    const double floor = 1.0 / (mu.q() * mu.pinned_ratio_bound());
    for (std::int64_t x = 0; x < mu.size(); ++x) {
        for (int i = 0; i < mu.n(); ++i) {
            const auto law = mu.conditional(x, i);
            const auto ref = oracle::conditional(mu.probs(), mu.n(), mu.q(), x, i);
            double sum = 0.0;
            for (int s = 0; s < mu.q(); ++s) {
                CHECK(law[s] == Catch::Approx(ref[s]).margin(1e-13));
                CHECK(law[s] >= floor - 1e-12);
                sum += law[s];
            }
            CHECK(sum == Catch::Approx(1.0).margin(1e-13));
        }
    }
}

TEST_CASE("lattice helper builds the free-boundary grid") {
    const auto g = InteractionGraph::grid(2, 1);  // 2x2 box
    CHECK(g.n() == 4);
    CHECK(g.edges().size() == 4);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK(g.max_degree() == 2);

    const auto g3 = InteractionGraph::grid(1, 3);  // path on 4 vertices
    CHECK(g3.n() == 4);
    CHECK(g3.edges().size() == 3);
}

TEST_CASE("dobrushin matrix: product measure gives the zero matrix") {
    auto uni = GibbsMeasure::uniform(StateSpace(3, Alphabet::spins()));
    const auto dob = glauber::dobrushin_matrix(uni);
    CHECK(dob.entries.cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(dob.op_norm <= 1e-13);
}

TEST_CASE("dobrushin matrix: single edge gives tanh(beta |J|) off-diagonal") {
    for (double beta : {0.15, 0.4}) {
        auto mu = single_edge(beta);
        const auto dob = glauber::dobrushin_matrix(mu);
        CHECK(dob.entries(0, 0) == 0.0);
        CHECK(dob.entries(1, 1) == 0.0);
        CHECK(dob.entries(0, 1) == Catch::Approx(std::tanh(beta)).epsilon(1e-12));
        CHECK(dob.entries(1, 0) == Catch::Approx(std::tanh(beta)).epsilon(1e-12));
    }
}

TEST_CASE("dobrushin matrix: entries match a direct TV oracle") {
    auto mu = build_ising(IsingModel::homogeneous(InteractionGraph::path(3), 1.0, 0.3));
    const auto dob = glauber::dobrushin_matrix(mu);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            double worst = 0.0;
            for (std::int64_t y = 0; y < mu.size(); ++y)
                for (int z = 0; z < 2; ++z) {
                    const auto a = oracle::conditional(mu.probs(), 3, 2, y, i);
                    const auto b = oracle::conditional(mu.probs(), 3, 2,
                                                       mu.space().with_digit(y, j, z), i);
                    const double tv = 0.5 * (std::abs(a[0] - b[0]) + std::abs(a[1] - b[1]));
                    worst = std::max(worst, tv);
                }
            CHECK(dob.entries(i, j) == Catch::Approx(worst).margin(1e-13));
        }
}

TEST_CASE("dobrushin matrix: weak couplings stay below operator norm 1") {
    // sum_j |J_ij| <= 0.6 < 1 at beta = 1
    auto mu = build_ising(IsingModel::homogeneous(InteractionGraph::path(3), 0.3, 1.0));
    const auto dob = glauber::dobrushin_matrix(mu);
    CHECK(dob.op_norm < 1.0);
    CHECK(dob.op_norm > 0.0);
}

TEST_CASE("dobrushin entries vanish for non-adjacent pairs of a verified MRF") {
    auto mu = build_ising(IsingModel::homogeneous(InteractionGraph::path(3), 1.0, 0.5));
    REQUIRE(verify_markov_property(mu, mu.graph()).holds);
    const auto dob = glauber::dobrushin_matrix(mu);
    CHECK(std::abs(dob.entries(0, 2)) <= 1e-12);
    CHECK(std::abs(dob.entries(2, 0)) <= 1e-12);
}
