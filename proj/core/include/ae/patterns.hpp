#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "ae/board.hpp"

namespace ae {

enum class FamilyKind : std::uint8_t { Star, DoubleStar, PathDoubleStar };

/// Target pattern Avoider must not complete: S_k, S_{k,k} or PS_{k,k}.
struct TargetFamily {
    FamilyKind kind = FamilyKind::Star;
    std::uint32_t k = 2;

    static TargetFamily star(std::uint32_t k);
    static TargetFamily double_star(std::uint32_t k);
    static TargetFamily path_double_star(std::uint32_t k);

    bool operator==(const TargetFamily&) const = default;
};

std::string family_name(const TargetFamily& f);
TargetFamily parse_family(const std::string& name, std::uint32_t k);

/// Lowest vertex with side-degree >= k, if any.
std::optional<VertexId> contains_star(const Board& b, Player side, std::uint32_t k);

/// Centres (u,v) of an S_{k,k} in Avoider's graph: (u,v) in A,
/// |N_A(u)\{v}| >= k-1, |N_A(v)\{u}| >= k-1 and
/// |(N_A(u) u N_A(v)) \ {u,v}| >= 2(k-1).
std::optional<std::pair<VertexId, VertexId>> contains_double_star(const Board& b, std::uint32_t k);

/// Centres and midpoint (u,v,w) of a PS_{k,k} in Avoider's graph:
/// (u,w),(v,w) in A with u != v, |N_A(u)\{w,v}| >= k-1,
/// |N_A(v)\{w,u}| >= k-1 and |(N_A(u) u N_A(v)) \ {u,v,w}| >= 2(k-1).
std::optional<std::array<VertexId, 3>> contains_path_double_star(const Board& b, std::uint32_t k);

bool contains_target(const Board& b, const TargetFamily& family);

/// Free edges whose addition to Avoider's graph completes the target.
/// For Star(k) this is exactly the threat set.
std::vector<EdgeId> completion_edges(Board& b, const TargetFamily& family);

/// Threats: free edges incident to a vertex of A-degree k-1.
std::vector<EdgeId> threat_edges(const Board& b, std::uint32_t k);
std::uint64_t count_threats(const Board& b, std::uint32_t k);

}  // namespace ae
