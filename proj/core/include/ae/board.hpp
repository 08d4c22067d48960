#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ae {

using VertexId = std::uint32_t;
using EdgeRank = std::uint32_t;

enum class Player : std::uint8_t { Avoider, Enforcer };

inline Player opponent(Player p) {
    return p == Player::Avoider ? Player::Enforcer : Player::Avoider;
}

enum class Ownership : std::uint8_t { Free, Avoider, Enforcer };

inline Ownership to_ownership(Player p) {
    return p == Player::Avoider ? Ownership::Avoider : Ownership::Enforcer;
}

/// Canonical unordered pair (u < v) with a colex rank over all pairs.
struct EdgeId {
    VertexId u = 0;
    VertexId v = 0;

    bool operator==(const EdgeId&) const = default;
};

inline EdgeId make_edge(VertexId a, VertexId b) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
    return a < b ? EdgeId{a, b} : EdgeId{b, a};
}

// colex rank: (u,v) with u<v maps to v(v-1)/2 + u
inline EdgeRank edge_rank(EdgeId e) {
    return static_cast<EdgeRank>(static_cast<std::uint64_t>(e.v) * (e.v - 1) / 2 + e.u);
}

EdgeId edge_from_rank(EdgeRank rank);

inline std::uint64_t edge_count_of(std::uint32_t n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

/// Edge-ownership state of K_n with incremental per-player degree counters.
/// Claims are Free -> Avoider/Enforcer only; unclaim exists for search rollback.
class Board {
public:
    explicit Board(std::uint32_t n);

    std::uint32_t n() const { return n_; }
    std::uint32_t edge_count() const { return static_cast<std::uint32_t>(owner_.size()); }
    std::uint32_t free_count() const { return freeCount_; }

    Ownership owner(EdgeId e) const { return owner_[edge_rank(e)]; }
    Ownership owner_at(EdgeRank r) const { return owner_[r]; }

    std::uint32_t degree(VertexId v, Player p) const {
        return p == Player::Avoider ? degA_[v] : degF_[v];
    }

    void claim(EdgeId e, Player who);
    void claim_rank(EdgeRank r, Player who) { claim(edge_from_rank(r), who); }

    // rollback for exhaustive search; restores the edge to Free
    void unclaim(EdgeId e);

    std::uint32_t avoider_edge_count() const { return claimedA_; }
    std::uint32_t enforcer_edge_count() const { return claimedF_; }

    std::vector<EdgeId> edges_of(Player p) const;
    std::vector<EdgeId> free_edges() const;

    /// A-neighbourhood of v (vertices joined to v by Avoider edges).
    std::vector<VertexId> neighbours(VertexId v, Player p) const;

private:
    std::uint32_t n_;
    std::vector<Ownership> owner_;
    std::vector<std::uint32_t> degA_, degF_;
    std::uint32_t freeCount_;
    std::uint32_t claimedA_ = 0, claimedF_ = 0;
};

}  // namespace ae
