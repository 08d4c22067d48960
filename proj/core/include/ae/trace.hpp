#pragma once

#include <iosfwd>
#include <string>

#include "ae/engine.hpp"

namespace ae {

inline constexpr int kTraceVersion = 1;

/// Line-delimited JSON trace: one header line, one line per move, one result
/// line. Everything except the header timestamp is deterministic.
struct TraceHeader {
    int version = kTraceVersion;
    GameConfig config;
    std::string avoiderId;
    std::string enforcerId;
    std::string timestamp;  // ISO 8601; excluded from determinism guarantees
};

struct TraceData {
    TraceHeader header;
    std::vector<Move> moves;
    std::string resultJson;  // the stored result line, verbatim
};

/// Canonical single-line JSON encoding of a result block.
std::string result_json(const MatchResult& result);

void write_trace(std::ostream& out, const TraceHeader& header, const MatchResult& result);

/// Parses a trace; throws std::runtime_error on malformed input.
TraceData read_trace(std::istream& in);

/// Replays the moves and rebuilds the result block from the final board
/// (forfeit verdicts are carried over from the stored block — a forfeited
/// match has no final move to recompute them from). A faithful trace
/// satisfies result_json(replay_result(t)) == t.resultJson byte for byte.
MatchResult replay_result(const TraceData& trace);

/// Fixed sweep CSV schema.
std::string csv_header();
std::string csv_row(const GameConfig& config, std::uint64_t r, const MatchResult& result);

}  // namespace ae
