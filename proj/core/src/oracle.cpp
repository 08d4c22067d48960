#include "ae/oracle.hpp"

#include <sstream>
#include <unordered_map>

namespace ae::oracle {

bool within_cap(std::uint32_t n, RuleSet rules) {
    std::uint64_t edges = edge_count_of(n);
    return rules == RuleSet::Strict ? edges <= 15 : edges <= 10;
}

namespace {

struct Solver {
    Board board;
    const GameConfig& config;
    const SolveOptions& options;
    std::unordered_map<std::uint64_t, bool> memo;  // key -> Avoider wins

    Solver(const GameConfig& cfg, const SolveOptions& opts)
        : board(cfg.n), config(cfg), options(opts) {}

    std::uint64_t key(Player turn) const {
        std::uint64_t k = turn == Player::Avoider ? 0 : 1;
        for (EdgeRank r = 0; r < board.edge_count(); ++r)
            k = (k << 2) | static_cast<std::uint64_t>(board.owner_at(r));
        return k;
    }

    bool avoider_wins(Player turn) {
        if (options.earlyCutoff && contains_target(board, config.family)) return false;
        if (board.free_count() == 0) return !contains_target(board, config.family);

        std::uint64_t k = 0;
        if (options.useMemo) {
            k = key(turn);
            auto it = memo.find(k);
            if (it != memo.end()) return it->second;
        }

        auto sizes = legal_move_sizes(config.rules, turn, config.bias, board.free_count());
        auto free = board.free_edges();
        bool wantAvoider = turn == Player::Avoider;
        bool result = !wantAvoider;  // until the mover finds a winning move

        // enumerate all free-edge subsets with size in [sizes.lo, sizes.hi]
        std::vector<std::size_t> pick;
        auto recurse = [&](auto&& self, std::size_t from) -> bool {
            if (pick.size() >= sizes.lo) {
                for (std::size_t i : pick) board.claim(free[i], turn);
                bool sub = avoider_wins(opponent(turn));
                for (std::size_t i : pick) board.unclaim(free[i]);
                if (sub == wantAvoider) return true;
            }
            if (pick.size() == sizes.hi) return false;
            for (std::size_t i = from; i < free.size(); ++i) {
                // prune: not enough edges left to reach the minimum size
                if (pick.size() + (free.size() - i) < sizes.lo) break;
                pick.push_back(i);
                if (self(self, i + 1)) {
                    pick.pop_back();
                    return true;
                }
                pick.pop_back();
            }
            return false;
        };
        if (recurse(recurse, 0)) result = wantAvoider;

        if (options.useMemo) memo.emplace(k, result);
        return result;
    }
};

}  // namespace

Player solve(const GameConfig& config, const SolveOptions& options) {
    if (!within_cap(config.n, config.rules)) {
        std::ostringstream msg;
        msg << "oracle: n=" << config.n << " exceeds the " << rules_name(config.rules)
            << " cap (" << (config.rules == RuleSet::Strict ? 15 : 10) << " edges)";
        throw CapExceeded(msg.str());
    }
    Solver s(config, options);
    return s.avoider_wins(Player::Avoider) ? Player::Avoider : Player::Enforcer;
}

WinnerTable winner_table(std::uint32_t n, RuleSet rules, const TargetFamily& family,
                         std::uint64_t bLo, std::uint64_t bHi, const SolveOptions& options) {
    if (bLo < 1 || bLo > bHi) throw std::invalid_argument("winner_table: bad bias range");
    WinnerTable table;
    for (std::uint64_t b = bLo; b <= bHi; ++b) {
        GameConfig cfg{n, b, rules, family, 0};
        table.rows.push_back({b, solve(cfg, options)});
    }
    bool sawAvoider = false, stable = true;
    std::uint64_t lastEnforcer = 0;
    for (const auto& row : table.rows) {
        if (row.winner == Player::Avoider) sawAvoider = true;
        else {
            if (sawAvoider) stable = false;  // E after A: no clean threshold
            lastEnforcer = row.bias;
        }
    }
    if (stable && sawAvoider) table.threshold = lastEnforcer;
    return table;
}

NonmonotonicityScan strict_nonmonotonicity_scan(std::uint32_t n, const TargetFamily& family,
                                                std::uint64_t bLo, std::uint64_t bHi) {
    auto table = winner_table(n, RuleSet::Strict, family, bLo, bHi);
    NonmonotonicityScan scan;
    scan.rows = table.rows;
    for (std::size_t i = 0; i + 1 < scan.rows.size(); ++i) {
        if (scan.rows[i].winner != Player::Avoider) continue;
        if (scan.rows[i + 1].winner != Player::Enforcer) continue;
        // re-verify both endpoints by fresh solves before flagging
        GameConfig a{n, scan.rows[i].bias, RuleSet::Strict, family, 0};
        GameConfig b{n, scan.rows[i + 1].bias, RuleSet::Strict, family, 0};
        if (solve(a) == Player::Avoider && solve(b) == Player::Enforcer)
            scan.alternations.push_back(scan.rows[i].bias);
    }
    return scan;
}

}  // namespace ae::oracle
