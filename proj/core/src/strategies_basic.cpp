#include <algorithm>

#include "strategies_impl.hpp"

namespace ae {

EdgeId avoider_min_dmax_edge(const Board& board) {
    bool found = false;
    EdgeId best{};
    std::uint32_t bestVal = 0;
    for (EdgeRank r = 0; r < board.edge_count(); ++r) {
        if (board.owner_at(r) != Ownership::Free) continue;
        EdgeId e = edge_from_rank(r);
        std::uint32_t val =
            std::max(board.degree(e.u, Player::Avoider), board.degree(e.v, Player::Avoider));
        if (!found || val < bestVal) {
            best = e;
            bestVal = val;
            found = true;
            if (val == 0) break;  // cannot improve; lowest rank wins ties
        }
    }
    if (!found) throw std::logic_error("min-dmax asked to move on exhausted board");
    return best;
}

std::vector<std::uint64_t> extra_edge_allocation(std::uint64_t l, std::uint64_t m) {
    std::vector<std::uint64_t> out(m, 0);
    for (std::uint64_t h = 1; h <= m; ++h) out[h - 1] = (l + h - 1) / m;
    return out;
}

namespace detail {

StrategyMove MinDmaxAvoider::next(const Board& board, const GameConfig&) {
    return {{avoider_min_dmax_edge(board)}};
}

StrategyMove GreedySpreaderAvoider::next(const Board& board, const GameConfig&) {
    bool found = false;
    EdgeId best{};
    std::pair<std::uint32_t, std::uint32_t> bestKey{0, 0};
    for (EdgeRank r = 0; r < board.edge_count(); ++r) {
        if (board.owner_at(r) != Ownership::Free) continue;
        EdgeId e = edge_from_rank(r);
        std::uint32_t du = board.degree(e.u, Player::Avoider);
        std::uint32_t dv = board.degree(e.v, Player::Avoider);
        std::pair<std::uint32_t, std::uint32_t> key{std::max(du, dv), du + dv};
        if (!found || key < bestKey) {
            best = e;
            bestKey = key;
            found = true;
        }
    }
    if (!found) throw std::logic_error("greedy-spreader asked to move on exhausted board");
    return {{best}};
}

StrategyMove RandomAvoider::next(const Board& board, const GameConfig&) {
    auto free = board.free_edges();
    std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
    return {{free[pick(rng_)]}};
}

StrategyMove RandomEnforcer::next(const Board& board, const GameConfig& config) {
    auto free = board.free_edges();
    std::size_t take = std::min<std::size_t>(config.bias, free.size());
    for (std::size_t i = 0; i < take; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, free.size() - 1);
        std::swap(free[i], free[pick(rng_)]);
    }
    free.resize(take);
    return {std::move(free)};
}

StrategyMove ThreatGreedyEnforcer::next(const Board& board, const GameConfig& config) {
    std::uint32_t k = config.family.k;
    std::uint64_t take = std::min<std::uint64_t>(config.bias, board.free_count());
    std::vector<EdgeId> out;
    out.reserve(take);
    for (EdgeRank r = 0; r < board.edge_count() && out.size() < take; ++r) {
        if (board.owner_at(r) != Ownership::Free) continue;
        EdgeId e = edge_from_rank(r);
        if (board.degree(e.u, Player::Avoider) == k - 1 ||
            board.degree(e.v, Player::Avoider) == k - 1)
            continue;
        out.push_back(e);
    }
    // only threats remain
    for (EdgeRank r = 0; r < board.edge_count() && out.size() < take; ++r) {
        if (board.owner_at(r) != Ownership::Free) continue;
        EdgeId e = edge_from_rank(r);
        if (board.degree(e.u, Player::Avoider) == k - 1 ||
            board.degree(e.v, Player::Avoider) == k - 1)
            out.push_back(e);
    }
    return {std::move(out)};
}

std::vector<EdgeId> monotone_prefix_move(const Board& board, PartitionState& ps,
                                         std::uint64_t need) {
    using Role = PartitionState::Role;
    std::vector<VertexId> order;
    std::vector<std::uint8_t> inSet(board.n(), 0);
    for (VertexId v = 0; v < board.n(); ++v) {
        if (ps.role[v] == Role::I) order.push_back(v);
        else if (ps.role[v] == Role::C) inSet[v] = 1;
    }
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return board.degree(a, Player::Avoider) < board.degree(b, Player::Avoider);
    });

    // no free edge lies inside C (the maintained invariant), so the free
    // edges inside C u prefix are exactly those collected while growing
    std::vector<EdgeId> claims;
    std::size_t prefix = 0;
    while (claims.size() < need && prefix < order.size()) {
        VertexId v = order[prefix++];
        for (VertexId u = 0; u < board.n(); ++u)
            if (inSet[u] && board.owner(make_edge(u, v)) == Ownership::Free)
                claims.push_back(make_edge(u, v));
        inSet[v] = 1;
    }
    if (claims.size() < need) return {};  // caller forfeits or tops up
    for (std::size_t i = 0; i < prefix; ++i) ps.role[order[i]] = Role::C;
    return claims;
}

StrategyMove MonotoneStarEnforcer::next(const Board& board, const GameConfig& config) {
    if (!ps_) ps_.emplace(board.n());
    std::uint32_t k = config.family.k;
    std::uint64_t free = board.free_count();

    if (free <= config.bias) {  // clamp: claim everything
        ps_->maintaining = false;
        return {board.free_edges()};
    }

    // endgame: a vertex of A-degree k-1 with a free edge left at it
    for (VertexId v = 0; v < board.n(); ++v) {
        if (board.degree(v, Player::Avoider) < k - 1) continue;
        std::optional<EdgeId> leave;
        for (VertexId u = 0; u < board.n() && !leave; ++u)
            if (u != v && board.owner(make_edge(u, v)) == Ownership::Free)
                leave = make_edge(u, v);
        if (!leave) continue;
        std::vector<EdgeId> claims;
        claims.reserve(free - 1);
        for (EdgeRank r = 0; r < board.edge_count(); ++r)
            if (board.owner_at(r) == Ownership::Free) {
                EdgeId e = edge_from_rank(r);
                if (!(e == *leave)) claims.push_back(e);
            }
        ps_->maintaining = false;
        return {std::move(claims)};
    }

    auto claims = monotone_prefix_move(board, *ps_, config.bias);
    if (claims.empty())
        return {{}, true, "monotone-star: prefix move cannot reach b free edges"};
    return {std::move(claims)};
}

}  // namespace detail
}  // namespace ae
