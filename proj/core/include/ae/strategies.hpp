#pragma once

#include <memory>
#include <string>

#include "ae/engine.hpp"

namespace ae {

/// Free edge minimizing max(dA(u), dA(v)), lowest colex rank on ties.
EdgeId avoider_min_dmax_edge(const Board& board);

/// Extra-edge allocation: vertex h of m slots gets floor((l+h-1)/m) edges;
/// the counts sum to l (Hermite's identity).
std::vector<std::uint64_t> extra_edge_allocation(std::uint64_t l, std::uint64_t m);

/// Strategy ids accepted by the factory:
///   Avoider: min-dmax, greedy-spreader, random
///   Enforcer: monotone-star, strict-star, monotone-double-star, monotone-ps,
///             threat-greedy, random
std::unique_ptr<Strategy> make_strategy(const std::string& id, Player role,
                                        const GameConfig& config);

std::vector<std::string> strategy_ids(Player role);

}  // namespace ae
