#include "ae/trace.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ae {

using nlohmann::json;

namespace {

std::string player_tag(Player p) { return p == Player::Avoider ? "A" : "E"; }

Player parse_player_tag(const std::string& s) {
    if (s == "A") return Player::Avoider;
    if (s == "E") return Player::Enforcer;
    throw std::runtime_error("trace: bad player tag '" + s + "'");
}

json move_json(const Move& m) {
    json edges = json::array();
    for (EdgeId e : m.edges) edges.push_back({e.u, e.v});
    return {{"type", "move"}, {"player", player_tag(m.player)}, {"edges", edges}};
}

}  // namespace

std::string result_json(const MatchResult& result) {
    json j{{"type", "result"},
           {"winner", player_tag(result.winner)},
           {"reason", reason_name(result.reason)},
           {"rounds", result.rounds},
           {"avoider_edges", result.avoiderEdgeCount},
           {"forfeit", result.forfeit}};
    if (result.forfeit) {
        j["forfeited_by"] = player_tag(result.forfeitedBy);
        j["forfeit_reason"] = result.forfeitReason;
    }
    return j.dump();
}

void write_trace(std::ostream& out, const TraceHeader& header, const MatchResult& result) {
    json h{{"type", "header"},
           {"version", header.version},
           {"n", header.config.n},
           {"k", header.config.family.k},
           {"bias", header.config.bias},
           {"rules", rules_name(header.config.rules)},
           {"family", family_name(header.config.family)},
           {"seed", header.config.seed},
           {"avoider", header.avoiderId},
           {"enforcer", header.enforcerId},
           {"timestamp", header.timestamp}};
    out << h.dump() << '\n';
    for (const Move& m : result.trace) out << move_json(m).dump() << '\n';
    out << result_json(result) << '\n';
}

TraceData read_trace(std::istream& in) {
    TraceData trace;
    std::string line;
    bool sawHeader = false, sawResult = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line);
        std::string type = j.at("type").get<std::string>();
        if (type == "header") {
            if (sawHeader) throw std::runtime_error("trace: duplicate header");
            sawHeader = true;
            trace.header.version = j.at("version").get<int>();
            if (trace.header.version != kTraceVersion)
                throw std::runtime_error("trace: unsupported version");
            trace.header.config.n = j.at("n").get<std::uint32_t>();
            trace.header.config.bias = j.at("bias").get<std::uint64_t>();
            trace.header.config.rules = parse_rules(j.at("rules").get<std::string>());
            trace.header.config.family =
                parse_family(j.at("family").get<std::string>(), j.at("k").get<std::uint32_t>());
            trace.header.config.seed = j.at("seed").get<std::uint64_t>();
            trace.header.avoiderId = j.at("avoider").get<std::string>();
            trace.header.enforcerId = j.at("enforcer").get<std::string>();
            trace.header.timestamp = j.at("timestamp").get<std::string>();
        } else if (type == "move") {
            if (!sawHeader || sawResult) throw std::runtime_error("trace: move out of order");
            Move m;
            m.player = parse_player_tag(j.at("player").get<std::string>());
            for (const auto& pair : j.at("edges"))
                m.edges.push_back(make_edge(pair.at(0).get<VertexId>(), pair.at(1).get<VertexId>()));
            trace.moves.push_back(std::move(m));
        } else if (type == "result") {
            if (!sawHeader) throw std::runtime_error("trace: result before header");
            sawResult = true;
            trace.resultJson = json::parse(line).dump();  // canonical form
        } else {
            throw std::runtime_error("trace: unknown line type '" + type + "'");
        }
    }
    if (!sawHeader || !sawResult) throw std::runtime_error("trace: missing header or result");
    return trace;
}

MatchResult replay_result(const TraceData& trace) {
    Board board = replay(trace.header.config, trace.moves);
    MatchResult result;
    result.trace = trace.moves;
    for (const Move& m : trace.moves)
        if (m.player == Player::Avoider) ++result.rounds;
    result.avoiderEdgeCount = board.avoider_edge_count();

    json stored = json::parse(trace.resultJson);
    if (stored.value("forfeit", false)) {
        result.forfeit = true;
        result.forfeitedBy = parse_player_tag(stored.at("forfeited_by").get<std::string>());
        result.forfeitReason = stored.at("forfeit_reason").get<std::string>();
        result.winner = opponent(result.forfeitedBy);
        result.reason = MatchReason::Forfeit;
    } else if (contains_target(board, trace.header.config.family)) {
        result.winner = Player::Enforcer;
        result.reason = MatchReason::TargetCompleted;
    } else {
        result.winner = Player::Avoider;
        result.reason = MatchReason::BoardExhaustedClean;
    }
    return result;
}

std::string csv_header() {
    return "n,k,rules,family,b,r,winner,reason,rounds,avoider_edges,forfeit,seed";
}

std::string csv_row(const GameConfig& config, std::uint64_t r, const MatchResult& result) {
    std::ostringstream out;
    out << config.n << ',' << config.family.k << ',' << rules_name(config.rules) << ','
        << family_name(config.family) << ',' << config.bias << ',' << r << ','
        << player_tag(result.winner) << ',' << reason_name(result.reason) << ','
        << result.rounds << ',' << result.avoiderEdgeCount << ','
        << (result.forfeit ? 1 : 0) << ',' << config.seed;
    return out.str();
}

}  // namespace ae
