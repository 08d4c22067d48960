#include <doctest.h>

#include <random>

#include "ae/strategies.hpp"

using namespace ae;

namespace {

Board random_partial_board(std::uint32_t n, std::mt19937_64& rng) {
    Board b(n);
    std::uniform_int_distribution<int> coin(0, 3);
    for (EdgeRank r = 0; r < b.edge_count(); ++r) {
        int c = coin(rng);
        if (c == 0) b.claim_rank(r, Player::Avoider);
        else if (c == 1) b.claim_rank(r, Player::Enforcer);
    }
    if (b.free_count() == 0) b.unclaim(edge_from_rank(0));
    return b;
}

}  // namespace

TEST_CASE("min-dmax picks the exhaustive argmin with lowest-rank ties") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        Board b = random_partial_board(9, rng);
        EdgeId got = avoider_min_dmax_edge(b);
        bool found = false;
        EdgeId best{};
        std::uint32_t bestVal = 0;
        for (EdgeRank r = 0; r < b.edge_count(); ++r) {
            if (b.owner_at(r) != Ownership::Free) continue;
            EdgeId e = edge_from_rank(r);
            std::uint32_t val =
                std::max(b.degree(e.u, Player::Avoider), b.degree(e.v, Player::Avoider));
            if (!found || val < bestVal) {
                best = e;
                bestVal = val;
                found = true;
            }
        }
        CHECK(got == best);
    }
}

TEST_CASE("extra-edge allocation follows Hermite's identity") {
    auto alloc = extra_edge_allocation(7, 12);
    REQUIRE(alloc.size() == 12);
    std::uint64_t sum = 0;
    for (std::uint64_t h = 1; h <= 12; ++h) {
        CHECK(alloc[h - 1] == (7 + h - 1) / 12);
        sum += alloc[h - 1];
    }
    CHECK(sum == 7);
    // the sum always collapses to l
    for (std::uint64_t l : {0ull, 1ull, 11ull, 12ull, 13ull, 100ull}) {
        std::uint64_t s = 0;
        for (auto x : extra_edge_allocation(l, 12)) s += x;
        CHECK(s == l);
    }
}

TEST_CASE("factory ids and role validation") {
    GameConfig config{10, 2, RuleSet::Monotone, TargetFamily::star(3), 1};
    for (const auto& id : strategy_ids(Player::Avoider))
        CHECK(make_strategy(id, Player::Avoider, config)->name() == id);
    for (const auto& id : strategy_ids(Player::Enforcer))
        CHECK(make_strategy(id, Player::Enforcer, config)->name() == id);
    CHECK_THROWS_AS(make_strategy("strict-star", Player::Avoider, config), std::invalid_argument);
    CHECK_THROWS_AS(make_strategy("min-dmax", Player::Enforcer, config), std::invalid_argument);
    CHECK_THROWS_AS(make_strategy("bogus", Player::Avoider, config), std::invalid_argument);
}

TEST_CASE("partition invariants hold as hard assertions in star matches") {
    struct Case {
        std::uint32_t n;
        std::uint64_t b;
        RuleSet rules;
        const char* enforcer;
        TargetFamily family;
    };
    std::vector<Case> cases = {
        {60, 180, RuleSet::Monotone, "monotone-star", TargetFamily::star(3)},
        {100, 400, RuleSet::Monotone, "monotone-star", TargetFamily::star(3)},
        {100, 100, RuleSet::Strict, "strict-star", TargetFamily::star(3)},
        {100, 232, RuleSet::Strict, "strict-star", TargetFamily::star(3)},
        {80, 5, RuleSet::Monotone, "monotone-double-star", TargetFamily::double_star(3)},
        {80, 2, RuleSet::Monotone, "monotone-ps", TargetFamily::path_double_star(3)},
    };
    for (const auto& c : cases) {
        for (const char* av : {"min-dmax", "greedy-spreader"}) {
            GameConfig config{c.n, c.b, c.rules, c.family, 0};
            auto avoider = make_strategy(av, Player::Avoider, config);
            auto enforcer = make_strategy(c.enforcer, Player::Enforcer, config);
            auto result = run_instrumented(config, *avoider, *enforcer, {"partition"});
            for (const auto& d : result.diagnostics) {
                INFO("n=", c.n, " b=", c.b, " ", c.enforcer, " round=", d.round, " ", d.detail);
                REQUIRE(d.pass);
            }
            CHECK(!result.forfeit);
        }
    }
}

TEST_CASE("strict-star extra-edge receipts stay at most k per vertex") {
    for (std::uint64_t b : {50ull, 150ull, 232ull}) {
        GameConfig config{100, b, RuleSet::Strict, TargetFamily::star(3), 0};
        auto avoider = make_strategy("min-dmax", Player::Avoider, config);
        auto enforcer = make_strategy("strict-star", Player::Enforcer, config);
        play_match(config, *avoider, *enforcer);
        const PartitionState* ps = enforcer->partition();
        REQUIRE(ps != nullptr);
        for (std::uint32_t c : ps->extraCount) CHECK(c <= config.family.k);
    }
}

TEST_CASE("path-double-star d* bookkeeping equals scratch recomputation") {
    // wrap the strategy; after each Enforcer move, recompute A*-degrees from
    // the board and the exposed roles
    GameConfig config{60, 2, RuleSet::Monotone, TargetFamily::path_double_star(3), 0};
    auto avoider = make_strategy("min-dmax", Player::Avoider, config);
    auto inner = make_strategy("monotone-ps", Player::Enforcer, config);

    class Checker final : public Strategy {
    public:
        Checker(Strategy& inner) : inner_(inner) {}
        StrategyMove next(const Board& board, const GameConfig& config) override {
            auto mv = inner_.next(board, config);
            const PartitionState* ps = inner_.partition();
            REQUIRE(ps != nullptr);
            REQUIRE(ps->hasDStar);
            for (VertexId v = 0; v < board.n(); ++v) {
                std::uint32_t scratch = 0;
                for (VertexId u : board.neighbours(v, Player::Avoider)) {
                    auto role = ps->role[u];
                    if (role != PartitionState::Role::N && role != PartitionState::Role::X)
                        ++scratch;
                }
                CHECK(ps->dStar[v] == scratch);
            }
            return mv;
        }
        std::string name() const override { return inner_.name(); }
        const PartitionState* partition() const override { return inner_.partition(); }

    private:
        Strategy& inner_;
    };

    Checker enforcer(*inner);
    auto result = play_match(config, *avoider, enforcer);
    CHECK(!result.forfeit);
    CHECK(result.winner == Player::Enforcer);
}

TEST_CASE("threat-greedy claims non-threats while any exist") {
    Board b(6);
    b.claim(make_edge(0, 1), Player::Avoider);
    b.claim(make_edge(0, 2), Player::Avoider);  // vertex 0 has A-degree 2 = k-1
    GameConfig config{6, 3, RuleSet::Strict, TargetFamily::star(3), 0};
    auto enforcer = make_strategy("threat-greedy", Player::Enforcer, config);
    auto mv = enforcer->next(b, config);
    REQUIRE(mv.edges.size() == 3);
    for (EdgeId e : mv.edges) {
        CHECK(e.u != 0);  // every threat touches vertex 0
    }
}

TEST_CASE("monotone enforcer moves are at least b, strict exactly min(b, free)") {
    for (auto rules : {RuleSet::Strict, RuleSet::Monotone}) {
        const char* id = rules == RuleSet::Strict ? "strict-star" : "monotone-star";
        GameConfig config{40, 30, rules, TargetFamily::star(3), 0};
        auto avoider = make_strategy("min-dmax", Player::Avoider, config);
        auto enforcer = make_strategy(id, Player::Enforcer, config);
        MatchOptions options;
        options.earlyCutoff = false;
        auto result = play_match(config, *avoider, *enforcer, options);
        std::uint64_t free = edge_count_of(40);
        for (const Move& m : result.trace) {
            auto sizes = legal_move_sizes(rules, m.player, config.bias, free);
            CHECK(m.edges.size() >= sizes.lo);
            CHECK(m.edges.size() <= sizes.hi);
            free -= m.edges.size();
        }
        CHECK(free == 0);
    }
}
