#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ae/board.hpp"
#include "ae/patterns.hpp"

namespace ae {

enum class RuleSet : std::uint8_t { Strict, Monotone };

std::string rules_name(RuleSet r);
RuleSet parse_rules(const std::string& name);

struct GameConfig {
    std::uint32_t n = 4;
    std::uint64_t bias = 1;  // Enforcer's bias; Avoider always plays (1:b)
    RuleSet rules = RuleSet::Strict;
    TargetFamily family = TargetFamily{FamilyKind::Star, 2};
    std::uint64_t seed = 0;
};

struct MoveSizeRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

/// Strict: exactly min(bias, free); Monotone: [min(bias, free), free].
MoveSizeRange legal_move_sizes(RuleSet rules, Player role, std::uint64_t bias,
                               std::uint64_t freeCount);

struct Move {
    Player player = Player::Avoider;
    std::vector<EdgeId> edges;
};

/// Vertex-partition bookkeeping shared by the partition-based strategies.
/// Roles are per-vertex; `maintaining` turns off once a strategy plays an
/// endgame move and stops preserving the partition invariants.
struct PartitionState {
    enum class Role : std::uint8_t { I, C, X, N };
    std::vector<Role> role;
    std::vector<std::uint8_t> extraEdge;    // received extra edges in previous move
    std::vector<std::uint32_t> extraCount;  // lifetime extra-edge receipts, capped at k
    std::vector<std::uint32_t> dStar;       // A*-degree (path-double-star game only)
    bool maintaining = true;
    bool hasDStar = false;

    explicit PartitionState(std::uint32_t n)
        : role(n, Role::I), extraEdge(n, 0), extraCount(n, 0) {}

    std::uint64_t count(Role r) const {
        std::uint64_t c = 0;
        for (auto x : role)
            if (x == r) ++c;
        return c;
    }
};

struct StrategyMove {
    std::vector<EdgeId> edges;
    bool forfeit = false;
    std::string reason;  // which strategy step failed, on forfeit
};

class Strategy {
public:
    virtual ~Strategy() = default;
    virtual StrategyMove next(const Board& board, const GameConfig& config) = 0;
    /// Partition bookkeeping, if this strategy maintains one (for instrumentation).
    virtual const PartitionState* partition() const { return nullptr; }
    virtual std::string name() const = 0;
};

struct Diagnostic {
    std::uint32_t round = 0;
    std::string check;
    bool pass = true;
    std::string detail;
};

enum class MatchReason : std::uint8_t { TargetCompleted, BoardExhaustedClean, Forfeit };

std::string reason_name(MatchReason r);

struct MatchResult {
    Player winner = Player::Avoider;
    MatchReason reason = MatchReason::BoardExhaustedClean;
    std::uint32_t rounds = 0;  // completed Avoider moves
    std::uint32_t avoiderEdgeCount = 0;
    std::vector<Move> trace;
    std::vector<Diagnostic> diagnostics;
    bool forfeit = false;
    Player forfeitedBy = Player::Avoider;
    std::string forfeitReason;
    // strict-rules accounting: free edges seen before Avoider's final move
    std::uint64_t freeBeforeLastAvoiderMove = 0;
};

struct MatchOptions {
    bool earlyCutoff = true;  // stop as soon as Avoider's graph contains the target
    std::vector<std::string> checks;
};

/// Known instrumentation checks: partition, avoider-clique, stage-count,
/// enforcer-stage, final-stage.
const std::vector<std::string>& known_checks();

MatchResult play_match(const GameConfig& config, Strategy& avoider, Strategy& enforcer,
                       const MatchOptions& options = {});

MatchResult run_instrumented(const GameConfig& config, Strategy& avoider, Strategy& enforcer,
                             const std::vector<std::string>& checks);

/// Replays a trace through claim_edge; throws on any illegal step.
Board replay(const GameConfig& config, const std::vector<Move>& trace);

}  // namespace ae
