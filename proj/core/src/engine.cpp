#include "ae/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ae {

std::string rules_name(RuleSet r) { return r == RuleSet::Strict ? "strict" : "monotone"; }

RuleSet parse_rules(const std::string& name) {
    if (name == "strict") return RuleSet::Strict;
    if (name == "monotone") return RuleSet::Monotone;
    throw std::invalid_argument("unknown rule set: " + name);
}

std::string reason_name(MatchReason r) {
    switch (r) {
        case MatchReason::TargetCompleted: return "target-completed";
        case MatchReason::BoardExhaustedClean: return "board-exhausted-clean";
        case MatchReason::Forfeit: return "forfeit";
    }
    return "?";
}

MoveSizeRange legal_move_sizes(RuleSet rules, Player role, std::uint64_t bias,
                               std::uint64_t freeCount) {
    std::uint64_t beta = role == Player::Avoider ? 1 : bias;
    std::uint64_t lo = std::min(beta, freeCount);
    if (rules == RuleSet::Strict) return {lo, lo};
    return {lo, freeCount};
}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> checks = {
        "partition", "avoider-clique", "stage-count", "enforcer-stage", "final-stage"};
    return checks;
}

namespace {

bool has_check(const MatchOptions& o, const std::string& name) {
    return std::find(o.checks.begin(), o.checks.end(), name) != o.checks.end();
}

struct Instrumentation {
    const GameConfig& config;
    const MatchOptions& options;
    MatchResult& result;
    std::uint32_t enforcerStage = 0;  // last Enforcer stage that ended
    std::int64_t enforcerStageEndRound = -1;  // g: round when stage k-2 ended
    std::uint32_t avoiderMovesAfterG = 0;

    // checked on the board state right before Avoider raises his max degree
    void avoider_stage_end(const Board& board, std::uint32_t j, std::uint32_t round) {
        if (has_check(options, "avoider-clique")) {
            bool pass = true;
            for (VertexId u = 0; u < board.n() && pass; ++u) {
                if (board.degree(u, Player::Avoider) + 1 > j) continue;
                for (VertexId v = u + 1; v < board.n(); ++v) {
                    if (board.degree(v, Player::Avoider) + 1 > j) continue;
                    if (board.owner(make_edge(u, v)) == Ownership::Free) {
                        pass = false;
                        break;
                    }
                }
            }
            std::ostringstream d;
            d << "stage=" << j;
            result.diagnostics.push_back({round, "avoider-clique", pass, d.str()});
        }
        if (has_check(options, "stage-count")) {
            long double b = static_cast<long double>(config.bias);
            long double n = board.n();
            long double vertexBound = std::pow(2.0L, j) * std::pow(n, j + 1.0L) / std::pow(b, j);
            long double edgeBound = std::pow(2.0L, j) * std::pow(n, j + 2.0L) / std::pow(b, j);
            std::uint64_t degJ = 0;
            for (VertexId v = 0; v < board.n(); ++v)
                if (board.degree(v, Player::Avoider) == j) ++degJ;
            bool pass = degJ <= vertexBound && board.free_count() <= edgeBound;
            std::ostringstream d;
            d << "stage=" << j << " degJ=" << degJ << " bound=" << (double)vertexBound
              << " free=" << board.free_count() << " edgeBound=" << (double)edgeBound;
            result.diagnostics.push_back({round, "stage-count", pass, d.str()});
        }
    }

    void after_enforcer_move(const Board& board, const Strategy& enforcer, std::uint32_t round) {
        const PartitionState* ps = enforcer.partition();
        if (has_check(options, "partition")) {
            if (ps == nullptr || !ps->maintaining) {
                result.diagnostics.push_back({round, "partition", true, "not maintained"});
            } else {
                bool pass = true;
                std::string why;
                for (VertexId u = 0; u < board.n() && pass; ++u) {
                    for (VertexId v = u + 1; v < board.n(); ++v) {
                        auto ru = ps->role[u], rv = ps->role[v];
                        Ownership o = board.owner(make_edge(u, v));
                        using R = PartitionState::Role;
                        if (ru == R::I && rv == R::I && o == Ownership::Enforcer) {
                            pass = false;
                            why = "Enforcer edge inside I";
                            break;
                        }
                        if (ru == R::C && rv == R::C && o == Ownership::Free) {
                            pass = false;
                            why = "free edge inside C";
                            break;
                        }
                    }
                }
                for (VertexId x = 0; pass && x < board.n(); ++x) {
                    if (ps->role[x] != PartitionState::Role::X) continue;
                    if (board.degree(x, Player::Avoider) + board.degree(x, Player::Enforcer) !=
                        board.n() - 1) {
                        pass = false;
                        why = "X vertex not saturated";
                    }
                }
                std::ostringstream d;
                d << "|I|=" << ps->count(PartitionState::Role::I)
                  << " |C|=" << ps->count(PartitionState::Role::C);
                if (!pass) d << " " << why;
                result.diagnostics.push_back({round, "partition", pass, d.str()});
            }
        }

        std::uint32_t k = config.family.k;
        bool wantStages = has_check(options, "enforcer-stage") || has_check(options, "final-stage");
        if (wantStages && ps != nullptr && ps->maintaining && k >= 3) {
            std::uint64_t sizeI = 0, sumI = 0;
            for (VertexId v = 0; v < board.n(); ++v) {
                if (ps->role[v] != PartitionState::Role::I) continue;
                ++sizeI;
                sumI += board.degree(v, Player::Avoider);
            }
            while (sizeI > 0 && enforcerStage < k - 2 &&
                   sumI >= static_cast<std::uint64_t>(enforcerStage + 1) * sizeI) {
                ++enforcerStage;
                if (has_check(options, "enforcer-stage")) {
                    long double n = board.n(), j = enforcerStage;
                    long double bound =
                        config.rules == RuleSet::Monotone
                            ? 0.9L * std::pow(n, 1.0L - j / (k - 1))
                            : 0.9L * n * std::pow(n / (2.0L * config.bias), j);
                    bool pass = static_cast<long double>(sizeI) >= bound;
                    std::ostringstream d;
                    d << "stage=" << enforcerStage << " |I|=" << sizeI
                      << " bound=" << (double)bound;
                    result.diagnostics.push_back({round, "enforcer-stage", pass, d.str()});
                }
                if (enforcerStage == k - 2) enforcerStageEndRound = round;
            }
        }
    }

    void after_avoider_move(const Board& board, const Strategy& enforcer, std::uint32_t round) {
        if (!has_check(options, "final-stage")) return;
        if (enforcerStageEndRound < 0) return;
        const PartitionState* ps = enforcer.partition();
        if (ps == nullptr || !ps->maintaining) return;
        std::uint32_t k = config.family.k;
        ++avoiderMovesAfterG;
        std::uint64_t highInI = 0;
        for (VertexId v = 0; v < board.n(); ++v)
            if (ps->role[v] == PartitionState::Role::I &&
                board.degree(v, Player::Avoider) == k - 1)
                ++highInI;
        bool hasStar = contains_star(board, Player::Avoider, k).has_value();
        bool pass = hasStar || highInI >= avoiderMovesAfterG;
        std::ostringstream d;
        d << "l=" << avoiderMovesAfterG << " high=" << highInI;
        result.diagnostics.push_back({round, "final-stage", pass, d.str()});
    }
};

}  // namespace

MatchResult play_match(const GameConfig& config, Strategy& avoider, Strategy& enforcer,
                       const MatchOptions& options) {
    for (const auto& c : options.checks)
        if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
            throw std::invalid_argument("unknown instrumentation check: " + c);

    Board board(config.n);
    MatchResult result;
    Instrumentation instr{config, options, result};
    Player turn = Player::Avoider;
    std::uint32_t maxA = 0;

    while (board.free_count() > 0) {
        Strategy& strat = turn == Player::Avoider ? avoider : enforcer;
        if (turn == Player::Avoider) result.freeBeforeLastAvoiderMove = board.free_count();
        StrategyMove mv = strat.next(board, config);
        if (mv.forfeit) {
            result.forfeit = true;
            result.forfeitedBy = turn;
            result.forfeitReason = mv.reason;
            result.winner = opponent(turn);
            result.reason = MatchReason::Forfeit;
            result.avoiderEdgeCount = board.avoider_edge_count();
            return result;
        }

        auto sizes = legal_move_sizes(config.rules, turn, config.bias, board.free_count());
        if (mv.edges.size() < sizes.lo || mv.edges.size() > sizes.hi) {
            std::ostringstream msg;
            msg << "engine: illegal move size " << mv.edges.size() << " from " << strat.name()
                << " (legal " << sizes.lo << ".." << sizes.hi << ")";
            throw std::runtime_error(msg.str());
        }

        if (turn == Player::Avoider && !options.checks.empty()) {
            // Avoider stage ends are observed on the pre-move board
            std::uint32_t newMax = maxA;
            std::vector<std::uint32_t> bump(board.n(), 0);
            for (EdgeId e : mv.edges) {
                newMax = std::max({newMax, board.degree(e.u, Player::Avoider) + ++bump[e.u],
                                   board.degree(e.v, Player::Avoider) + ++bump[e.v]});
            }
            for (std::uint32_t j = maxA; j < newMax; ++j)
                if (j >= 1) instr.avoider_stage_end(board, j, result.rounds + 1);
        }

        for (EdgeId e : mv.edges) board.claim(e, turn);  // throws on non-free edge
        result.trace.push_back(Move{turn, mv.edges});

        if (turn == Player::Avoider) {
            ++result.rounds;
            for (EdgeId e : mv.edges)
                maxA = std::max({maxA, board.degree(e.u, Player::Avoider),
                                 board.degree(e.v, Player::Avoider)});
            if (!options.checks.empty()) instr.after_avoider_move(board, enforcer, result.rounds);
            if (options.earlyCutoff && contains_target(board, config.family)) {
                result.winner = Player::Enforcer;
                result.reason = MatchReason::TargetCompleted;
                result.avoiderEdgeCount = board.avoider_edge_count();
                return result;
            }
        } else if (!options.checks.empty()) {
            instr.after_enforcer_move(board, enforcer, result.rounds);
        }
        turn = opponent(turn);
    }

    result.avoiderEdgeCount = board.avoider_edge_count();
    if (contains_target(board, config.family)) {
        result.winner = Player::Enforcer;
        result.reason = MatchReason::TargetCompleted;
    } else {
        result.winner = Player::Avoider;
        result.reason = MatchReason::BoardExhaustedClean;
        if (!options.checks.empty() && maxA >= 1)
            instr.avoider_stage_end(board, maxA, result.rounds);
    }
    return result;
}

MatchResult run_instrumented(const GameConfig& config, Strategy& avoider, Strategy& enforcer,
                             const std::vector<std::string>& checks) {
    MatchOptions options;
    options.checks = checks;
    return play_match(config, avoider, enforcer, options);
}

Board replay(const GameConfig& config, const std::vector<Move>& trace) {
    Board board(config.n);
    for (const Move& m : trace)
        for (EdgeId e : m.edges) board.claim(e, m.player);
    return board;
}

}  // namespace ae
