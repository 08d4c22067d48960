#include <doctest.h>

#include <random>

#include "ae/densities.hpp"

using namespace ae;

TEST_CASE("density values on K_3, S_3 and K_2") {
    SmallGraph k3{3, {{0, 1}, {0, 2}, {1, 2}}};
    auto d = densities(k3);
    CHECK(d.m == Rational(1));
    CHECK(d.mPrime == Rational(2, 3));
    REQUIRE(d.mDoublePrime.has_value());
    CHECK(*d.mDoublePrime == Rational(4));

    SmallGraph s3{4, {{0, 1}, {0, 2}, {0, 3}}};
    d = densities(s3);
    CHECK(d.m == Rational(3, 4));
    CHECK(d.mPrime == Rational(1, 2));
    REQUIRE(d.mDoublePrime.has_value());
    CHECK(*d.mDoublePrime == Rational(3));  // P_3 subgraph: (2+1)/(3-2)

    SmallGraph k2{2, {{0, 1}}};
    d = densities(k2);
    CHECK(d.m == Rational(1, 2));
    CHECK(d.mPrime == Rational(0));
    CHECK(!d.mDoublePrime.has_value());
}

TEST_CASE("densities input validation") {
    CHECK_THROWS(densities(SmallGraph{0, {}}));
    CHECK_THROWS(densities(SmallGraph{13, {}}));
    CHECK_THROWS(densities(SmallGraph{3, {{0, 3}}}));  // endpoint out of range
}

TEST_CASE("m' <= m and edge removal never increases m") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::uint32_t> nd(2, 8);
        std::uint32_t n = nd(rng);
        SmallGraph g{n, {}};
        std::bernoulli_distribution coin(0.5);
        for (std::uint32_t v = 1; v < n; ++v)
            for (std::uint32_t u = 0; u < v; ++u)
                if (coin(rng)) g.edges.push_back({u, v});
        if (g.edges.empty()) continue;
        auto d = densities(g);
        CHECK(d.mPrime <= d.m);
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            SmallGraph h = g;
            h.edges.erase(h.edges.begin() + static_cast<std::ptrdiff_t>(i));
            if (h.edges.empty()) continue;
            CHECK(densities(h).m <= d.m);
        }
    }
}
