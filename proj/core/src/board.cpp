#include "ae/board.hpp"

#include <cmath>

namespace ae {

EdgeId edge_from_rank(EdgeRank rank) {
    // v is the unique integer with v(v-1)/2 <= rank < v(v+1)/2
    auto v = static_cast<VertexId>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(rank))) / 2.0);
    while (static_cast<std::uint64_t>(v) * (v - 1) / 2 > rank) --v;
    while (static_cast<std::uint64_t>(v) * (v + 1) / 2 <= rank) ++v;
    auto u = static_cast<VertexId>(rank - static_cast<std::uint64_t>(v) * (v - 1) / 2);
    return EdgeId{u, v};
}

Board::Board(std::uint32_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("board needs at least one vertex");
    owner_.assign(static_cast<std::size_t>(edge_count_of(n)), Ownership::Free);
    degA_.assign(n, 0);
    degF_.assign(n, 0);
    freeCount_ = static_cast<std::uint32_t>(owner_.size());
}

void Board::claim(EdgeId e, Player who) {
    if (e.v >= n_) throw std::out_of_range("edge endpoint outside board");
    EdgeRank r = edge_rank(e);
    if (owner_[r] != Ownership::Free)
        throw std::logic_error("claiming a non-free edge");
    owner_[r] = to_ownership(who);
    auto& deg = who == Player::Avoider ? degA_ : degF_;
    ++deg[e.u];
    ++deg[e.v];
    (who == Player::Avoider ? claimedA_ : claimedF_)++;
    --freeCount_;
}

void Board::unclaim(EdgeId e) {
    EdgeRank r = edge_rank(e);
    Ownership o = owner_[r];
    if (o == Ownership::Free) throw std::logic_error("unclaiming a free edge");
    auto& deg = o == Ownership::Avoider ? degA_ : degF_;
    --deg[e.u];
    --deg[e.v];
    (o == Ownership::Avoider ? claimedA_ : claimedF_)--;
    owner_[r] = Ownership::Free;
    ++freeCount_;
}

std::vector<EdgeId> Board::edges_of(Player p) const {
    std::vector<EdgeId> out;
    Ownership want = to_ownership(p);
    for (EdgeRank r = 0; r < owner_.size(); ++r)
        if (owner_[r] == want) out.push_back(edge_from_rank(r));
    return out;
}

std::vector<EdgeId> Board::free_edges() const {
    std::vector<EdgeId> out;
    out.reserve(freeCount_);
    for (EdgeRank r = 0; r < owner_.size(); ++r)
        if (owner_[r] == Ownership::Free) out.push_back(edge_from_rank(r));
    return out;
}

std::vector<VertexId> Board::neighbours(VertexId v, Player p) const {
    std::vector<VertexId> out;
    Ownership want = to_ownership(p);
    for (VertexId u = 0; u < n_; ++u) {
        if (u == v) continue;
        if (owner_[edge_rank(make_edge(u, v))] == want) out.push_back(u);
    }
    return out;
}

}  // namespace ae
