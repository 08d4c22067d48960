#include "ae/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace ae {

TargetFamily TargetFamily::star(std::uint32_t k) {
    if (k < 2) throw std::invalid_argument("star game needs k >= 2");
    return TargetFamily{FamilyKind::Star, k};
}

TargetFamily TargetFamily::double_star(std::uint32_t k) {
    if (k < 3) throw std::invalid_argument("double-star game needs k >= 3");
    return TargetFamily{FamilyKind::DoubleStar, k};
}

TargetFamily TargetFamily::path_double_star(std::uint32_t k) {
    if (k < 3) throw std::invalid_argument("path-double-star game needs k >= 3");
    return TargetFamily{FamilyKind::PathDoubleStar, k};
}

std::string family_name(const TargetFamily& f) {
    switch (f.kind) {
        case FamilyKind::Star: return "star";
        case FamilyKind::DoubleStar: return "double-star";
        case FamilyKind::PathDoubleStar: return "path-double-star";
    }
    return "?";
}

TargetFamily parse_family(const std::string& name, std::uint32_t k) {
    if (name == "star") return TargetFamily::star(k);
    if (name == "double-star") return TargetFamily::double_star(k);
    if (name == "path-double-star") return TargetFamily::path_double_star(k);
    throw std::invalid_argument("unknown family: " + name);
}

std::optional<VertexId> contains_star(const Board& b, Player side, std::uint32_t k) {
    for (VertexId v = 0; v < b.n(); ++v)
        if (b.degree(v, side) >= k) return v;
    return std::nullopt;
}

namespace {

// |(N_A(u) u N_A(v)) \ excluded|
std::uint32_t leaf_union_size(const Board& b, VertexId u, VertexId v,
                              std::initializer_list<VertexId> excluded) {
    std::uint32_t count = 0;
    for (VertexId w = 0; w < b.n(); ++w) {
        if (std::find(excluded.begin(), excluded.end(), w) != excluded.end()) continue;
        bool adjU = w != u && b.owner(make_edge(u, w)) == Ownership::Avoider;
        bool adjV = w != v && b.owner(make_edge(v, w)) == Ownership::Avoider;
        if (adjU || adjV) ++count;
    }
    return count;
}

std::vector<VertexId> high_degree_vertices(const Board& b, std::uint32_t d) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < b.n(); ++v)
        if (b.degree(v, Player::Avoider) >= d) out.push_back(v);
    return out;
}

}  // namespace

std::optional<std::pair<VertexId, VertexId>> contains_double_star(const Board& b, std::uint32_t k) {
    // both centres need A-degree >= k, since the centre edge counts too
    auto centres = high_degree_vertices(b, k);
    for (std::size_t i = 0; i < centres.size(); ++i) {
        for (std::size_t j = i + 1; j < centres.size(); ++j) {
            VertexId u = centres[i], v = centres[j];
            if (b.owner(make_edge(u, v)) != Ownership::Avoider) continue;
            if (leaf_union_size(b, u, v, {u, v}) >= 2 * (k - 1))
                return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

std::optional<std::array<VertexId, 3>> contains_path_double_star(const Board& b, std::uint32_t k) {
    auto centres = high_degree_vertices(b, k);
    for (std::size_t i = 0; i < centres.size(); ++i) {
        for (std::size_t j = i + 1; j < centres.size(); ++j) {
            VertexId u = centres[i], v = centres[j];
            for (VertexId w = 0; w < b.n(); ++w) {
                if (w == u || w == v) continue;
                if (b.owner(make_edge(u, w)) != Ownership::Avoider) continue;
                if (b.owner(make_edge(v, w)) != Ownership::Avoider) continue;
                // k-1 own leaves besides w and the other centre
                bool uvClaimed = b.owner(make_edge(u, v)) == Ownership::Avoider;
                std::uint32_t du = b.degree(u, Player::Avoider) - 1 - (uvClaimed ? 1 : 0);
                std::uint32_t dv = b.degree(v, Player::Avoider) - 1 - (uvClaimed ? 1 : 0);
                if (du < k - 1 || dv < k - 1) continue;
                if (leaf_union_size(b, u, v, {u, v, w}) >= 2 * (k - 1))
                    return std::array<VertexId, 3>{u, v, w};
            }
        }
    }
    return std::nullopt;
}

bool contains_target(const Board& b, const TargetFamily& family) {
    switch (family.kind) {
        case FamilyKind::Star:
            return contains_star(b, Player::Avoider, family.k).has_value();
        case FamilyKind::DoubleStar:
            return contains_double_star(b, family.k).has_value();
        case FamilyKind::PathDoubleStar:
            return contains_path_double_star(b, family.k).has_value();
    }
    return false;
}

std::vector<EdgeId> completion_edges(Board& b, const TargetFamily& family) {
    if (contains_target(b, family)) return b.free_edges();

    std::vector<EdgeId> out;
    if (family.kind == FamilyKind::Star) {
        // the threat set: free edges at a vertex of A-degree k-1
        for (EdgeRank r = 0; r < b.edge_count(); ++r) {
            if (b.owner_at(r) != Ownership::Free) continue;
            EdgeId e = edge_from_rank(r);
            if (b.degree(e.u, Player::Avoider) == family.k - 1 ||
                b.degree(e.v, Player::Avoider) == family.k - 1)
                out.push_back(e);
        }
        return out;
    }

    // any completing edge touches a centre of the completed copy, and that
    // centre already has A-degree >= k-1 before the edge is added
    for (EdgeRank r = 0; r < b.edge_count(); ++r) {
        if (b.owner_at(r) != Ownership::Free) continue;
        EdgeId e = edge_from_rank(r);
        if (b.degree(e.u, Player::Avoider) < family.k - 1 &&
            b.degree(e.v, Player::Avoider) < family.k - 1)
            continue;
        b.claim(e, Player::Avoider);
        bool hit = contains_target(b, family);
        b.unclaim(e);
        if (hit) out.push_back(e);
    }
    return out;
}

std::vector<EdgeId> threat_edges(const Board& b, std::uint32_t k) {
    std::vector<EdgeId> out;
    for (EdgeRank r = 0; r < b.edge_count(); ++r) {
        if (b.owner_at(r) != Ownership::Free) continue;
        EdgeId e = edge_from_rank(r);
        if (b.degree(e.u, Player::Avoider) == k - 1 ||
            b.degree(e.v, Player::Avoider) == k - 1)
            out.push_back(e);
    }
    return out;
}

std::uint64_t count_threats(const Board& b, std::uint32_t k) {
    std::uint64_t count = 0;
    for (EdgeRank r = 0; r < b.edge_count(); ++r) {
        if (b.owner_at(r) != Ownership::Free) continue;
        EdgeId e = edge_from_rank(r);
        if (b.degree(e.u, Player::Avoider) == k - 1 ||
            b.degree(e.v, Player::Avoider) == k - 1)
            ++count;
    }
    return count;
}

}  // namespace ae
