#include <doctest.h>

#include <random>

#include "ae/patterns.hpp"

using namespace ae;

namespace {

// naive injective-homomorphism search: does Avoider's graph host the pattern?
struct Pattern {
    std::uint32_t vertices;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

Pattern star_pattern(std::uint32_t k) {
    Pattern p{k + 1, {}};
    for (std::uint32_t i = 1; i <= k; ++i) p.edges.push_back({0, i});
    return p;
}

Pattern double_star_pattern(std::uint32_t k) {
    // centres 0 and 1 joined by an edge, k-1 private leaves each
    Pattern p{2 * k, {{0, 1}}};
    for (std::uint32_t i = 0; i < k - 1; ++i) {
        p.edges.push_back({0, 2 + i});
        p.edges.push_back({1, k + 1 + i});
    }
    return p;
}

Pattern path_double_star_pattern(std::uint32_t k) {
    // centres 0 and 1 joined through midpoint 2, k-1 private leaves each
    Pattern p{2 * k + 1, {{0, 2}, {1, 2}}};
    for (std::uint32_t i = 0; i < k - 1; ++i) {
        p.edges.push_back({0, 3 + i});
        p.edges.push_back({1, k + 2 + i});
    }
    return p;
}

bool brute_contains(const Board& board, const Pattern& p) {
    if (p.vertices > board.n()) return false;
    std::vector<VertexId> map(p.vertices);
    std::vector<std::uint8_t> used(board.n(), 0);
    auto place = [&](auto&& self, std::uint32_t i) -> bool {
        if (i == p.vertices) return true;
        for (VertexId host = 0; host < board.n(); ++host) {
            if (used[host]) continue;
            map[i] = host;
            bool ok = true;
            for (auto [a, b] : p.edges) {
                if (a >= i + 1 || b >= i + 1) continue;  // both ends mapped?
                if (std::max(a, b) != i) continue;       // only edges closed by i
                if (board.owner(make_edge(map[a], map[b])) != Ownership::Avoider) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[host] = 1;
            if (self(self, i + 1)) return true;
            used[host] = 0;
        }
        return false;
    };
    return place(place, 0);
}

Board random_board(std::uint32_t n, std::mt19937_64& rng, int avoiderWeight = 2) {
    Board b(n);
    std::uniform_int_distribution<int> coin(0, avoiderWeight + 1);
    for (EdgeRank r = 0; r < b.edge_count(); ++r) {
        int c = coin(rng);
        if (c <= avoiderWeight - 1) b.claim_rank(r, Player::Avoider);
        else if (c == avoiderWeight) b.claim_rank(r, Player::Enforcer);
    }
    return b;
}

}  // namespace

TEST_CASE("family constructors validate k") {
    CHECK_THROWS_AS(TargetFamily::star(1), std::invalid_argument);
    CHECK_THROWS_AS(TargetFamily::double_star(2), std::invalid_argument);
    CHECK_THROWS_AS(TargetFamily::path_double_star(2), std::invalid_argument);
    CHECK(TargetFamily::star(2).k == 2);
    CHECK(parse_family("double-star", 3).kind == FamilyKind::DoubleStar);
    CHECK_THROWS_AS(parse_family("clique", 3), std::invalid_argument);
}

TEST_CASE("detectors match brute force on sampled 7-vertex graphs") {
    std::mt19937_64 rng(12345);
    int hitsStar = 0, hitsDouble = 0, hitsPs = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        Board b = random_board(7, rng);
        for (std::uint32_t k : {2u, 3u, 4u}) {
            bool det = contains_star(b, Player::Avoider, k).has_value();
            CHECK(det == brute_contains(b, star_pattern(k)));
            hitsStar += det;
        }
        bool det2 = contains_double_star(b, 3).has_value();
        CHECK(det2 == brute_contains(b, double_star_pattern(3)));
        hitsDouble += det2;
        bool det3 = contains_path_double_star(b, 3).has_value();
        CHECK(det3 == brute_contains(b, path_double_star_pattern(3)));
        hitsPs += det3;
    }
    // the sample must exercise both answers
    CHECK(hitsStar > 0);
    CHECK(hitsDouble > 0);
    CHECK(hitsPs > 0);
    CHECK(hitsDouble < 10000);
    CHECK(hitsPs < 10000);
}

TEST_CASE("detectors on enumerated sparse 5-vertex Avoider graphs") {
    // every Avoider graph on 5 vertices (all 2^10 edge subsets)
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        Board b(5);
        for (EdgeRank r = 0; r < 10; ++r)
            if (mask & (1u << r)) b.claim_rank(r, Player::Avoider);
        CHECK(contains_star(b, Player::Avoider, 3).has_value() ==
              brute_contains(b, star_pattern(3)));
        CHECK(contains_star(b, Player::Avoider, 2).has_value() ==
              brute_contains(b, star_pattern(2)));
    }
}

TEST_CASE("completion_edges equals add-and-test over free edges") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 300; ++trial) {
        Board b = random_board(8, rng, 3);
        for (auto family : {TargetFamily::star(3), TargetFamily::double_star(3),
                            TargetFamily::path_double_star(3)}) {
            Board work = b;
            auto fast = completion_edges(work, family);
            std::vector<EdgeId> slow;
            for (EdgeRank r = 0; r < b.edge_count(); ++r) {
                if (b.owner_at(r) != Ownership::Free) continue;
                Board probe = b;
                probe.claim_rank(r, Player::Avoider);
                if (contains_target(probe, family)) slow.push_back(edge_from_rank(r));
            }
            if (contains_target(b, family)) slow = b.free_edges();  // already lost
            CHECK(fast == slow);
        }
    }
}

TEST_CASE("star completion edges are exactly the threats") {
    Board b(5);
    b.claim(make_edge(0, 1), Player::Avoider);
    b.claim(make_edge(0, 2), Player::Avoider);
    auto threats = threat_edges(b, 3);
    Board work = b;
    CHECK(completion_edges(work, TargetFamily::star(3)) == threats);
    // exactly the free edges at vertex 0
    REQUIRE(threats.size() == 2);
    CHECK(threats[0] == make_edge(0, 3));
    CHECK(threats[1] == make_edge(0, 4));
    CHECK(count_threats(b, 3) == 2);

    Board empty(5);
    Board work2 = empty;
    CHECK(completion_edges(work2, TargetFamily::star(3)).empty());
}

TEST_CASE("double-star completion includes the missing centre edge") {
    // S_{3,3} minus the centre edge (0,1): centres 0,1 with leaves 2,3 and 4,5
    Board b(6);
    for (VertexId leaf : {2u, 3u}) b.claim(make_edge(0, leaf), Player::Avoider);
    for (VertexId leaf : {4u, 5u}) b.claim(make_edge(1, leaf), Player::Avoider);
    CHECK(!contains_double_star(b, 3).has_value());
    Board work = b;
    auto comp = completion_edges(work, TargetFamily::double_star(3));
    CHECK(std::find(comp.begin(), comp.end(), make_edge(0, 1)) != comp.end());
}
