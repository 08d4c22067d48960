#include <doctest.h>

#include "ae/oracle.hpp"
#include "ae/strategies.hpp"

using namespace ae;
using namespace ae::oracle;

TEST_CASE("caps refuse instead of truncating") {
    CHECK(within_cap(6, RuleSet::Strict));    // 15 edges
    CHECK(!within_cap(7, RuleSet::Strict));   // 21 edges
    CHECK(within_cap(5, RuleSet::Monotone));  // 10 edges
    CHECK(!within_cap(6, RuleSet::Monotone));
    GameConfig config{7, 1, RuleSet::Strict, TargetFamily::star(2), 0};
    CHECK_THROWS_AS(solve(config), CapExceeded);
    config = {6, 1, RuleSet::Monotone, TargetFamily::star(2), 0};
    CHECK_THROWS_AS(solve(config), CapExceeded);
}

TEST_CASE("n=3 strict star(2) is an Enforcer win at b=1") {
    // Avoider ends with 2 of K_3's 3 edges, which always share a vertex
    GameConfig config{3, 1, RuleSet::Strict, TargetFamily::star(2), 0};
    CHECK(solve(config) == Player::Enforcer);
}

TEST_CASE("P_3 winner tables at n=4 and n=5") {
    // monotone n=4: threshold 3 = C(4,2) - floor(4/2) - 1
    auto table = winner_table(4, RuleSet::Monotone, TargetFamily::star(2), 1, 6);
    std::vector<Player> want = {Player::Enforcer, Player::Enforcer, Player::Enforcer,
                                Player::Avoider, Player::Avoider, Player::Avoider};
    REQUIRE(table.rows.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(table.rows[i].winner == want[i]);
    REQUIRE(table.threshold.has_value());
    CHECK(*table.threshold == 3);

    // the b=4 Avoider win hinges on opening with a perfect matching
    // strict n=4: f+ = 4 = C(4,2) - 2
    table = winner_table(4, RuleSet::Strict, TargetFamily::star(2), 1, 6);
    REQUIRE(table.threshold.has_value());
    CHECK(*table.threshold == 4);
    CHECK(table.rows[3].winner == Player::Enforcer);  // b=4
    CHECK(table.rows[4].winner == Player::Avoider);   // b=5

    // monotone n=5: threshold 7 = C(5,2) - floor(5/2) - 1
    table = winner_table(5, RuleSet::Monotone, TargetFamily::star(2), 6, 9);
    REQUIRE(table.threshold.has_value());
    CHECK(*table.threshold == 7);
}

TEST_CASE("memo and early-cutoff toggles do not change winners") {
    for (std::uint32_t n : {3u, 4u}) {
        for (auto rules : {RuleSet::Strict, RuleSet::Monotone}) {
            std::uint64_t bHi = n == 3 ? 3 : 6;
            for (std::uint64_t b = 1; b <= bHi; ++b) {
                GameConfig config{n, b, rules, TargetFamily::star(2), 0};
                SolveOptions plain, noMemo, noCut;
                noMemo.useMemo = false;
                noCut.earlyCutoff = false;
                Player w = solve(config, plain);
                CHECK(solve(config, noMemo) == w);
                CHECK(solve(config, noCut) == w);
            }
        }
    }
}

TEST_CASE("clamped positions produce exactly one move") {
    // freeCount < bias: the only legal Enforcer move claims everything
    auto sizes = legal_move_sizes(RuleSet::Strict, Player::Enforcer, 100, 4);
    CHECK(sizes.lo == sizes.hi);
    CHECK(sizes.lo == 4);
    sizes = legal_move_sizes(RuleSet::Monotone, Player::Enforcer, 100, 4);
    CHECK(sizes.lo == 4);
    CHECK(sizes.hi == 4);
}

TEST_CASE("strict nonmonotonicity scan at n=5") {
    auto scan = strict_nonmonotonicity_scan(5, TargetFamily::star(2), 1, 10);
    REQUIRE(scan.rows.size() == 10);
    for (const auto& row : scan.rows) {
        CHECK(row.bias >= 1);
        CHECK(row.bias <= 10);
    }
    // alternations, if any, are re-verified A->E steps inside the range
    for (std::uint64_t b : scan.alternations) {
        CHECK(b >= 1);
        CHECK(b < 10);
        GameConfig lo{5, b, RuleSet::Strict, TargetFamily::star(2), 0};
        GameConfig hi{5, b + 1, RuleSet::Strict, TargetFamily::star(2), 0};
        CHECK(solve(lo) == Player::Avoider);
        CHECK(solve(hi) == Player::Enforcer);
    }
}

TEST_CASE("doomed-regime strategy matches the oracle verdict") {
    // tiny strict games where the bias is small enough that Avoider's final
    // graph is too dense to avoid S_2: the strategy must win like the oracle
    for (std::uint64_t b : {1ull, 2ull}) {
        GameConfig config{5, b, RuleSet::Strict, TargetFamily::star(2), 0};
        Player predicted = solve(config);
        if (predicted != Player::Enforcer) continue;
        auto avoider = make_strategy("min-dmax", Player::Avoider, config);
        auto enforcer = make_strategy("strict-star", Player::Enforcer, config);
        auto result = play_match(config, *avoider, *enforcer);
        CHECK(result.winner == Player::Enforcer);
    }
}
