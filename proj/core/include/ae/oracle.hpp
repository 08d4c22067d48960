#pragma once

#include <optional>
#include <stdexcept>

#include "ae/engine.hpp"

namespace ae::oracle {

/// Board-size cap exceeded; the solver refuses rather than truncating.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolveOptions {
    bool useMemo = true;
    // score positions where Avoider's graph already holds the target as
    // immediate Enforcer wins (equivalent to terminal-only scoring: Avoider's
    // graph only grows)
    bool earlyCutoff = true;
};

/// Edge-count caps: strict C(n,2) <= 15; monotone C(n,2) <= 10 (subset branching).
bool within_cap(std::uint32_t n, RuleSet rules);

/// Winner under optimal play. Throws CapExceeded beyond the caps.
Player solve(const GameConfig& config, const SolveOptions& options = {});

struct WinnerRow {
    std::uint64_t bias = 0;
    Player winner = Player::Avoider;
};

struct WinnerTable {
    std::vector<WinnerRow> rows;
    // largest b with winner Enforcer, when the table is E..EA..A and ends in A
    std::optional<std::uint64_t> threshold;
};

WinnerTable winner_table(std::uint32_t n, RuleSet rules, const TargetFamily& family,
                         std::uint64_t bLo, std::uint64_t bHi,
                         const SolveOptions& options = {});

struct NonmonotonicityScan {
    std::vector<WinnerRow> rows;
    // b values where winner(b) = Avoider but winner(b+1) = Enforcer
    std::vector<std::uint64_t> alternations;
};

NonmonotonicityScan strict_nonmonotonicity_scan(std::uint32_t n, const TargetFamily& family,
                                                std::uint64_t bLo, std::uint64_t bHi);

}  // namespace ae::oracle
