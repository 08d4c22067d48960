#include <algorithm>
#include <cmath>

#include "ae/arith.hpp"
#include "strategies_impl.hpp"

namespace ae::detail {

using Role = PartitionState::Role;

namespace {

std::vector<EdgeId> all_free_except(const Board& board, std::optional<EdgeId> leave) {
    std::vector<EdgeId> out;
    out.reserve(board.free_count());
    for (EdgeRank r = 0; r < board.edge_count(); ++r) {
        if (board.owner_at(r) != Ownership::Free) continue;
        EdgeId e = edge_from_rank(r);
        if (leave && e == *leave) continue;
        out.push_back(e);
    }
    return out;
}

std::optional<EdgeId> lowest_free_at(const Board& board, VertexId v) {
    // colex order of edges at v is by the other endpoint's contribution;
    // scan ranks of (u,v) pairs directly
    std::optional<EdgeId> best;
    EdgeRank bestRank = 0;
    for (VertexId u = 0; u < board.n(); ++u) {
        if (u == v) continue;
        EdgeId e = make_edge(u, v);
        if (board.owner(e) != Ownership::Free) continue;
        EdgeRank r = edge_rank(e);
        if (!best || r < bestRank) {
            best = e;
            bestRank = r;
        }
    }
    return best;
}

std::uint64_t high_degree_count(const Board& board, std::uint32_t d) {
    std::uint64_t c = 0;
    for (VertexId v = 0; v < board.n(); ++v)
        if (board.degree(v, Player::Avoider) >= d) ++c;
    return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// strict k-star Enforcer
// ---------------------------------------------------------------------------

void StrictStarEnforcer::init(const Board& board, const GameConfig& config) {
    std::uint32_t n = board.n();
    std::uint32_t k = config.family.k;
    std::uint64_t b = config.bias;
    ps_.emplace(n);
    r_ = arith::remainder_r(n, b);

    // doomed: Avoider's forced final edge count already exceeds n(k-1)/2
    std::uint64_t totalEdges = edge_count_of(n);
    std::uint64_t roundsCeil = (totalEdges + b) / (b + 1);
    doomed_ = 2 * roundsCeil >= static_cast<std::uint64_t>(n) * (k - 1) + 2;
    if (doomed_) ps_->maintaining = false;

    subset_ = !doomed_ && b <= 4ull * n;
    if (subset_) {
        auto exp = static_cast<long double>(k) * k / (static_cast<long double>(k) * k + 1);
        auto sizeU = static_cast<std::uint32_t>(
            std::pow(static_cast<long double>(b), exp));
        sizeU = std::min(std::max(sizeU, 2u), n);
        inU_.assign(n, 0);
        for (VertexId v = 0; v < sizeU; ++v) inU_[v] = 1;
        // outside-U vertices end up fully saturated by phase 1, which is
        // exactly the clique condition for C; until then the partition is
        // not yet the maintained one
        for (VertexId v = sizeU; v < n; ++v) ps_->role[v] = Role::C;
        ps_->maintaining = false;
    }
}

std::vector<EdgeId> StrictStarEnforcer::main_move(const Board& board, std::uint64_t need,
                                                  std::uint32_t k,
                                                  std::vector<std::uint8_t>& taken) {
    std::vector<EdgeId> claims;
    if (need == 0) return claims;

    // enumeration: non-decreasing A-degree, last move's extra-edge recipients
    // first among equals, then vertex index
    std::vector<VertexId> order;
    std::vector<std::uint8_t> inSet(board.n(), 0);
    for (VertexId v = 0; v < board.n(); ++v) {
        if (ps_->role[v] == Role::I) order.push_back(v);
        else if (ps_->role[v] == Role::C) inSet[v] = 1;
    }
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        auto ka = std::make_tuple(board.degree(a, Player::Avoider), !ps_->extraEdge[a], a);
        auto kb = std::make_tuple(board.degree(b, Player::Avoider), !ps_->extraEdge[b], b);
        return ka < kb;
    });

    // largest prefix with at most `need` free edges inside C u prefix
    std::size_t prefix = 0;
    while (prefix < order.size()) {
        VertexId v = order[prefix];
        std::vector<EdgeId> added;
        for (VertexId u = 0; u < board.n(); ++u)
            if (inSet[u] && !taken[edge_rank(make_edge(u, v))] &&
                board.owner(make_edge(u, v)) == Ownership::Free)
                added.push_back(make_edge(u, v));
        if (claims.size() + added.size() > need) break;
        for (EdgeId e : added) claims.push_back(e);
        inSet[v] = 1;
        ++prefix;
    }
    for (std::size_t i = 0; i < prefix; ++i) ps_->role[order[i]] = Role::C;
    for (EdgeId e : claims) taken[edge_rank(e)] = 1;

    // distribute the deficit as extra edges over the next 4k enumeration
    // vertices, h-th receiving floor((l+h-1)/4k) edges toward C
    std::uint64_t deficit = need - claims.size();
    std::fill(ps_->extraEdge.begin(), ps_->extraEdge.end(), 0);
    if (deficit > 0) {
        // window: the next 4k enumeration vertices, skipping any that already
        // received extra edges k times (hard cap per receipt accounting)
        std::vector<VertexId> window;
        for (std::size_t i = prefix; i < order.size() && window.size() < 4ull * k; ++i)
            if (ps_->extraCount[order[i]] < k) window.push_back(order[i]);
        std::uint64_t slots = window.size();
        if (slots > 0) {
            auto alloc = extra_edge_allocation(deficit, slots);
            for (std::uint64_t h = 0; h < slots; ++h) {
                VertexId v = window[h];
                std::uint64_t got = 0;
                for (VertexId u = 0; u < board.n() && got < alloc[h]; ++u) {
                    if (ps_->role[u] != Role::C) continue;
                    EdgeId e = make_edge(u, v);
                    if (taken[edge_rank(e)] || board.owner(e) != Ownership::Free) continue;
                    claims.push_back(e);
                    taken[edge_rank(e)] = 1;
                    ++got;
                }
                if (got > 0) {
                    ps_->extraEdge[v] = 1;
                    ++ps_->extraCount[v];
                }
            }
        }
    }

    // late-game fallback: top up with lowest-rank free edges
    for (EdgeRank r = 0; r < board.edge_count() && claims.size() < need; ++r) {
        if (taken[r] || board.owner_at(r) != Ownership::Free) continue;
        EdgeId e = edge_from_rank(r);
        if (ps_->role[e.u] == Role::I && ps_->role[e.v] == Role::I)
            ps_->maintaining = false;  // F[I] no longer empty
        claims.push_back(e);
        taken[r] = 1;
    }
    return claims;
}

StrategyMove StrictStarEnforcer::next(const Board& board, const GameConfig& config) {
    if (!ps_) init(board, config);
    std::uint32_t k = config.family.k;
    std::uint64_t free = board.free_count();
    std::uint64_t take = std::min<std::uint64_t>(config.bias, free);

    if (free <= config.bias) {
        ps_->maintaining = false;
        return {board.free_edges()};
    }

    if (threatMode_ || count_threats(board, k) >= r_) {
        threatMode_ = true;
        ps_->maintaining = false;
        // anything goes, except claiming a threat unless forced
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
        for (EdgeRank r = 0; r < board.edge_count() && out.size() < take; ++r) {
            if (board.owner_at(r) != Ownership::Free) continue;
            EdgeId e = edge_from_rank(r);
            if (board.degree(e.u, Player::Avoider) == k - 1 ||
                board.degree(e.v, Player::Avoider) == k - 1)
                out.push_back(e);
        }
        return {std::move(out)};
    }

    if (doomed_) {
        std::vector<EdgeId> out;
        out.reserve(take);
        for (EdgeRank r = 0; r < board.edge_count() && out.size() < take; ++r)
            if (board.owner_at(r) == Ownership::Free) out.push_back(edge_from_rank(r));
        return {std::move(out)};
    }

    std::vector<std::uint8_t> taken(board.edge_count(), 0);
    std::vector<EdgeId> claims;

    if (subset_ && !phase1Done_) {
        for (EdgeRank r = 0; r < board.edge_count() && claims.size() < take; ++r) {
            if (board.owner_at(r) != Ownership::Free) continue;
            EdgeId e = edge_from_rank(r);
            if (inU_[e.u] && inU_[e.v]) continue;
            claims.push_back(e);
            taken[r] = 1;
        }
        if (claims.size() < take) {
            // all remaining free edges lie inside U; the inner game starts
            // mid-move with Avoider's pre-existing edges counted as-is
            phase1Done_ = true;
            if (!threatMode_ && !doomed_) ps_->maintaining = true;
            auto rest = main_move(board, take - claims.size(), k, taken);
            if (claims.size() + rest.size() < take)
                return {{}, true, "strict-star: subset transition cannot fill the move"};
            claims.insert(claims.end(), rest.begin(), rest.end());
        }
        return {std::move(claims)};
    }

    claims = main_move(board, take, k, taken);
    if (claims.size() < take)
        return {{}, true, "strict-star: main move cannot assemble b edges"};
    return {std::move(claims)};
}

// ---------------------------------------------------------------------------
// monotone double-star Enforcer
// ---------------------------------------------------------------------------

StrategyMove MonotoneDoubleStarEnforcer::next(const Board& board, const GameConfig& config) {
    if (!ps_) ps_.emplace(board.n());
    std::uint32_t k = config.family.k;
    std::uint64_t free = board.free_count();

    if (free <= config.bias) {
        ps_->maintaining = false;
        return {board.free_edges()};
    }

    // endgame: an S_{k,k} minus a free edge (needs two high-degree vertices)
    if (high_degree_count(board, k - 1) >= 2) {
        Board probe = board;
        auto comp = completion_edges(probe, TargetFamily::double_star(k));
        if (!comp.empty()) {
            ps_->maintaining = false;
            return {all_free_except(board, comp.front())};
        }
    }

    if (!switched_) {
        // Phase I: the k-star strategy until a vertex of A-degree >= k-1 appears
        VertexId v = 0;
        std::uint32_t maxDeg = 0;
        for (VertexId u = 0; u < board.n(); ++u)
            if (board.degree(u, Player::Avoider) > maxDeg) {
                maxDeg = board.degree(u, Player::Avoider);
                v = u;
            }
        if (maxDeg < k - 1) {
            auto claims = monotone_prefix_move(board, *ps_, config.bias);
            if (claims.empty())
                return {{}, true, "double-star: prefix move cannot reach b free edges"};
            return {std::move(claims)};
        }

        // switching move
        switched_ = true;
        centre_ = v;
        auto neigh = board.neighbours(v, Player::Avoider);
        neigh.resize(k - 1);  // k-1 lowest-index A-neighbours
        std::vector<std::uint8_t> inN(board.n(), 0);
        for (VertexId w : neigh) {
            inN[w] = 1;
            for (VertexId y : board.neighbours(w, Player::Avoider))
                if (y != v) inN[y] = 1;
        }
        std::vector<EdgeId> claims;
        std::vector<std::uint8_t> taken(board.edge_count(), 0);
        for (EdgeRank r = 0; r < board.edge_count(); ++r) {
            if (board.owner_at(r) != Ownership::Free) continue;
            EdgeId e = edge_from_rank(r);
            if (inN[e.u] || inN[e.v]) {
                claims.push_back(e);
                taken[r] = 1;
            }
        }
        for (VertexId w = 0; w < board.n(); ++w)
            if (inN[w]) ps_->role[w] = Role::N;
        // move the centre to C and join it to C
        for (VertexId u = 0; u < board.n(); ++u) {
            if (ps_->role[u] != Role::C || u == v) continue;
            EdgeId e = make_edge(u, v);
            if (!taken[edge_rank(e)] && board.owner(e) == Ownership::Free) {
                claims.push_back(e);
                taken[edge_rank(e)] = 1;
            }
        }
        ps_->role[v] = Role::C;
        if (claims.size() < config.bias) {
            // top up via the normal move on the updated partition
            Board shadow = board;
            for (EdgeId e : claims) shadow.claim(e, Player::Enforcer);
            if (shadow.free_count() <= config.bias - claims.size()) {
                for (EdgeId e : shadow.free_edges()) claims.push_back(e);
                ps_->maintaining = false;
                return {std::move(claims)};
            }
            auto rest = monotone_prefix_move(shadow, *ps_, config.bias - claims.size());
            if (rest.empty())
                return {{}, true, "double-star: switching move cannot reach b edges"};
            claims.insert(claims.end(), rest.begin(), rest.end());
        }
        return {std::move(claims)};
    }

    // Phase II: the star strategy on V \ N; a second high-degree vertex in I
    // forces the endgame
    for (VertexId u = 0; u < board.n(); ++u) {
        if (ps_->role[u] != Role::I) continue;
        if (board.degree(u, Player::Avoider) < k - 1) continue;
        if (free < config.bias + 1)
            return {{}, true, "double-star: phase II endgame with too few free edges"};
        EdgeId bridge = make_edge(u, centre_);
        ps_->maintaining = false;
        if (board.owner(bridge) == Ownership::Free)
            return {all_free_except(board, bridge)};
        auto leave = lowest_free_at(board, u);
        if (!leave)
            return {{}, true, "double-star: phase II trigger vertex has no free edge"};
        return {all_free_except(board, *leave)};
    }

    auto claims = monotone_prefix_move(board, *ps_, config.bias);
    if (claims.empty())
        return {{}, true, "double-star: phase II prefix move cannot reach b free edges"};
    return {std::move(claims)};
}

// ---------------------------------------------------------------------------
// monotone path-double-star Enforcer
// ---------------------------------------------------------------------------

void MonotonePathDoubleStarEnforcer::refresh_dstar(const Board& board) {
    for (EdgeRank r = 0; r < board.edge_count(); ++r) {
        if (seenAvoider_[r] || board.owner_at(r) != Ownership::Avoider) continue;
        seenAvoider_[r] = 1;
        EdgeId e = edge_from_rank(r);
        if (!excluded_[e.v]) ++ps_->dStar[e.u];
        if (!excluded_[e.u]) ++ps_->dStar[e.v];
    }
}

void MonotonePathDoubleStarEnforcer::mark_excluded(const Board& board, VertexId w) {
    if (excluded_[w]) return;
    excluded_[w] = 1;
    for (VertexId y : board.neighbours(w, Player::Avoider))
        if (ps_->dStar[y] > 0) --ps_->dStar[y];
}

StrategyMove MonotonePathDoubleStarEnforcer::next(const Board& board, const GameConfig& config) {
    if (!ps_) {
        ps_.emplace(board.n());
        ps_->hasDStar = true;
        ps_->dStar.assign(board.n(), 0);
        seenAvoider_.assign(board.edge_count(), 0);
        excluded_.assign(board.n(), 0);
    }
    std::uint32_t k = config.family.k;
    std::uint64_t free = board.free_count();
    refresh_dstar(board);

    if (free <= config.bias) {
        ps_->maintaining = false;
        return {board.free_edges()};
    }

    // (i) a PS_{k,k} already present: take everything, the game is decided
    if (high_degree_count(board, k) >= 2 &&
        contains_path_double_star(board, k).has_value()) {
        ps_->maintaining = false;
        return {board.free_edges()};
    }

    // (ii) PS_{k,k} minus a free edge
    if (high_degree_count(board, k - 1) >= 2) {
        Board probe = board;
        auto comp = completion_edges(probe, TargetFamily::path_double_star(k));
        if (!comp.empty() && free >= config.bias + 1) {
            ps_->maintaining = false;
            return {all_free_except(board, comp.front())};
        }
    }

    std::vector<EdgeId> claims;
    std::vector<std::uint8_t> taken(board.edge_count(), 0);

    // (iii) updating moves, to a fixpoint
    for (;;) {
        std::optional<VertexId> pick;
        for (VertexId x = 0; x < board.n(); ++x) {
            if (ps_->role[x] != Role::I && ps_->role[x] != Role::N) continue;
            if (ps_->dStar[x] < k) continue;
            if (!pick || ps_->dStar[x] > ps_->dStar[*pick]) pick = x;
        }
        if (!pick) break;
        VertexId x = *pick;

        // k vertices of lowest A*-degree from N_A(x) \ (N u X)
        std::vector<VertexId> cand;
        for (VertexId y : board.neighbours(x, Player::Avoider))
            if (!excluded_[y]) cand.push_back(y);
        if (cand.size() < k)
            return {{}, true, "path-double-star: fewer than k eligible neighbours"};
        std::stable_sort(cand.begin(), cand.end(), [&](VertexId a, VertexId b) {
            return ps_->dStar[a] < ps_->dStar[b];
        });
        cand.resize(k);
        for (VertexId y : cand) {
            mark_excluded(board, y);
            ps_->role[y] = Role::N;
        }
        mark_excluded(board, x);
        ps_->role[x] = Role::X;
        for (VertexId u = 0; u < board.n(); ++u) {
            if (u == x) continue;
            EdgeId e = make_edge(u, x);
            EdgeRank r = edge_rank(e);
            if (!taken[r] && board.owner(e) == Ownership::Free) {
                claims.push_back(e);
                taken[r] = 1;
            }
        }
    }

    // (iv) fill to b with the star-strategy normal move ordered by A*-degree
    while (claims.size() < config.bias) {
        std::optional<VertexId> pick;
        for (VertexId v = 0; v < board.n(); ++v) {
            if (ps_->role[v] != Role::I) continue;
            if (!pick || ps_->dStar[v] < ps_->dStar[*pick]) pick = v;
        }
        if (!pick)
            return {{}, true, "path-double-star: I exhausted before reaching b edges"};
        VertexId v = *pick;
        for (VertexId u = 0; u < board.n(); ++u) {
            if (ps_->role[u] != Role::C || u == v) continue;
            EdgeId e = make_edge(u, v);
            EdgeRank r = edge_rank(e);
            if (!taken[r] && board.owner(e) == Ownership::Free) {
                claims.push_back(e);
                taken[r] = 1;
            }
        }
        ps_->role[v] = Role::C;
    }
    return {std::move(claims)};
}

}  // namespace ae::detail
