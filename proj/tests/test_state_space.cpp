#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "glauber/state_space.hpp"
#include "oracles.hpp"

using glauber::Alphabet;
using glauber::SpinConfig;
using glauber::StateSpace;

TEST_CASE("mixed-radix indexing, coordinate 0 least significant") {
    StateSpace s2(2, Alphabet::spins());
    CHECK(s2.index_of({0, 0}) == 0);
    CHECK(s2.index_of({1, 0}) == 1);

    StateSpace s3(3, Alphabet::labeled(3));
    CHECK(s3.index_of({2, 1, 0}) == 5);  // 2 + 1*3 + 0*9
}

TEST_CASE("index round-trips over the whole space") {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{16, 2}, {10, 3}, {5, 4}}) {
        StateSpace space(n, Alphabet::labeled(q));
        for (std::int64_t v = 0; v < space.size(); ++v) {
            REQUIRE(space.index_of(space.config_of(v)) == v);
        }
    }
}

TEST_CASE("indexing matches the hand mixed-radix oracle") {
    StateSpace space(4, Alphabet::labeled(3));
    for (std::int64_t v = 0; v < space.size(); ++v) {
        const auto x = space.config_of(v);
        CHECK(oracle::index_of(x, 3) == v);
        CHECK(oracle::config_of(v, 4, 3) == x);
    }
}

TEST_CASE("indexing rejects bad input") {
    StateSpace space(3, Alphabet::spins());
    CHECK_THROWS_AS(space.index_of({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(space.index_of({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("state-space cap refuses oversized enumerations") {
    CHECK_THROWS_AS(StateSpace(25, Alphabet::spins()), glauber::CapError);
    CHECK_NOTHROW(StateSpace(25, Alphabet::spins(), std::int64_t{1} << 26));
    CHECK_THROWS_AS(StateSpace(4, Alphabet::spins(), 8), glauber::CapError);
}

TEST_CASE("hamming distance") {
    CHECK(glauber::hamming_distance({0, 1, 1}, {0, 1, 1}) == 0);
    CHECK(glauber::hamming_distance({0, 0, 0}, {1, 0, 1}) == 2);
    CHECK_THROWS_AS(glauber::hamming_distance({0}, {0, 1}), std::invalid_argument);

    std::mt19937_64 rng(42);
    StateSpace space(5, Alphabet::labeled(3));
    std::uniform_int_distribution<std::int64_t> pick(0, space.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = space.config_of(pick(rng));
        const auto y = space.config_of(pick(rng));
        CHECK(glauber::hamming_distance(x, y) == oracle::hamming(x, y));
        CHECK(glauber::hamming_distance(x, y) == glauber::hamming_distance(y, x));
        CHECK((glauber::hamming_distance(x, y) == 0) == (x == y));
    }
}

TEST_CASE("hamming distance triangle inequality") {
    std::mt19937_64 rng(3);
    StateSpace space(6, Alphabet::spins());
    std::uniform_int_distribution<std::int64_t> pick(0, space.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = space.config_of(pick(rng));
        const auto y = space.config_of(pick(rng));
        const auto z = space.config_of(pick(rng));
        CHECK(glauber::hamming_distance(x, z) <=
              glauber::hamming_distance(x, y) + glauber::hamming_distance(y, z));
    }
}

TEST_CASE("single-site neighborhoods") {
    StateSpace bin(3, Alphabet::spins());
    const SpinConfig x{1, 0, 1};
    const auto nb = glauber::hamming_neighbors(bin, x, 1);
    REQUIRE(nb.size() == 2);
    CHECK(nb[0] == SpinConfig{1, 0, 1});
    CHECK(nb[1] == SpinConfig{1, 1, 1});

    StateSpace tern(2, Alphabet::labeled(3));
    CHECK(glauber::hamming_neighbors(tern, {0, 2}, 0).size() == 3);
    CHECK_THROWS_AS(glauber::hamming_neighbors(tern, {0, 2}, 2), std::invalid_argument);
}

TEST_CASE("union of punctured neighborhoods has size n(q-1)") {
    StateSpace space(4, Alphabet::labeled(3));
    const SpinConfig x{0, 1, 2, 0};
    std::set<std::int64_t> seen;
    for (int i = 0; i < space.n(); ++i)
        for (const auto& y : glauber::hamming_neighbors(space, x, i))
            if (y != x) seen.insert(space.index_of(y));
    CHECK(seen.size() == static_cast<std::size_t>(space.n() * (space.q() - 1)));
}

TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet({"a"}), glauber::SpecError);
    CHECK_THROWS_AS(Alphabet({"a", "a"}), glauber::SpecError);
    CHECK(Alphabet::spins().q() == 2);
    CHECK(Alphabet::spins().symbol(1) == "+1");
}
