#include <stdexcept>

#include "strategies_impl.hpp"

namespace ae {

std::unique_ptr<Strategy> make_strategy(const std::string& id, Player role,
                                        const GameConfig& config) {
    using namespace detail;
    if (role == Player::Avoider) {
        if (id == "min-dmax") return std::make_unique<MinDmaxAvoider>();
        if (id == "greedy-spreader") return std::make_unique<GreedySpreaderAvoider>();
        if (id == "random") return std::make_unique<RandomAvoider>(config.seed);
        throw std::invalid_argument("unknown Avoider strategy: " + id);
    }
    if (id == "monotone-star") return std::make_unique<MonotoneStarEnforcer>();
    if (id == "strict-star") return std::make_unique<StrictStarEnforcer>();
    if (id == "monotone-double-star") return std::make_unique<MonotoneDoubleStarEnforcer>();
    if (id == "monotone-ps") return std::make_unique<MonotonePathDoubleStarEnforcer>();
    if (id == "threat-greedy") return std::make_unique<ThreatGreedyEnforcer>();
    if (id == "random") return std::make_unique<RandomEnforcer>(config.seed ^ 0x9e3779b97f4a7c15ull);
    throw std::invalid_argument("unknown Enforcer strategy: " + id);
}

std::vector<std::string> strategy_ids(Player role) {
    if (role == Player::Avoider) return {"min-dmax", "greedy-spreader", "random"};
    return {"monotone-star", "strict-star",   "monotone-double-star",
            "monotone-ps",   "threat-greedy", "random"};
}

}  // namespace ae
