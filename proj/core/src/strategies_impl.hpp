#pragma once

// internal strategy classes; the public surface is make_strategy() in
// ae/strategies.hpp

#include <random>

#include "ae/strategies.hpp"

namespace ae::detail {

// smallest prefix of I in non-decreasing A-degree order (index ties) whose
// union with C holds at least `need` free edges; claims-to-be are returned,
// the prefix is moved into C
std::vector<EdgeId> monotone_prefix_move(const Board& board, PartitionState& ps,
                                         std::uint64_t need);

class MinDmaxAvoider final : public Strategy {
public:
    StrategyMove next(const Board& board, const GameConfig&) override;
    std::string name() const override { return "min-dmax"; }
};

class GreedySpreaderAvoider final : public Strategy {
public:
    StrategyMove next(const Board& board, const GameConfig&) override;
    std::string name() const override { return "greedy-spreader"; }
};

class RandomAvoider final : public Strategy {
public:
    explicit RandomAvoider(std::uint64_t seed) : rng_(seed) {}
    StrategyMove next(const Board& board, const GameConfig&) override;
    std::string name() const override { return "random"; }

private:
    std::mt19937_64 rng_;
};

class RandomEnforcer final : public Strategy {
public:
    explicit RandomEnforcer(std::uint64_t seed) : rng_(seed) {}
    StrategyMove next(const Board& board, const GameConfig& config) override;
    std::string name() const override { return "random"; }

private:
    std::mt19937_64 rng_;
};

/// Claims non-threat free edges (lowest rank) first; threats only when forced.
class ThreatGreedyEnforcer final : public Strategy {
public:
    StrategyMove next(const Board& board, const GameConfig& config) override;
    std::string name() const override { return "threat-greedy"; }
};

class MonotoneStarEnforcer final : public Strategy {
public:
    StrategyMove next(const Board& board, const GameConfig& config) override;
    const PartitionState* partition() const override { return ps_ ? &*ps_ : nullptr; }
    std::string name() const override { return "monotone-star"; }

private:
    std::optional<PartitionState> ps_;
};

class StrictStarEnforcer final : public Strategy {
public:
    StrategyMove next(const Board& board, const GameConfig& config) override;
    const PartitionState* partition() const override { return ps_ ? &*ps_ : nullptr; }
    std::string name() const override { return "strict-star"; }

    bool in_threat_mode() const { return threatMode_; }
    bool is_doomed() const { return doomed_; }

private:
    void init(const Board& board, const GameConfig& config);
    std::vector<EdgeId> main_move(const Board& board, std::uint64_t need, std::uint32_t k,
                                  std::vector<std::uint8_t>& taken);

    std::optional<PartitionState> ps_;
    bool doomed_ = false;
    bool subset_ = false;
    bool phase1Done_ = false;
    bool threatMode_ = false;
    std::uint64_t r_ = 0;
    std::vector<std::uint8_t> inU_;
};

class MonotoneDoubleStarEnforcer final : public Strategy {
public:
    StrategyMove next(const Board& board, const GameConfig& config) override;
    const PartitionState* partition() const override { return ps_ ? &*ps_ : nullptr; }
    std::string name() const override { return "monotone-double-star"; }

private:
    std::optional<PartitionState> ps_;
    bool switched_ = false;
    VertexId centre_ = 0;
};

class MonotonePathDoubleStarEnforcer final : public Strategy {
public:
    StrategyMove next(const Board& board, const GameConfig& config) override;
    const PartitionState* partition() const override { return ps_ ? &*ps_ : nullptr; }
    std::string name() const override { return "monotone-ps"; }

private:
    void refresh_dstar(const Board& board);
    void mark_excluded(const Board& board, VertexId w);

    std::optional<PartitionState> ps_;
    std::vector<std::uint8_t> seenAvoider_;  // A-edges already folded into dStar
    std::vector<std::uint8_t> excluded_;     // vertex in N u X
};

}  // namespace ae::detail
