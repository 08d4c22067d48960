#include <doctest.h>

#include <sstream>

#include "ae/strategies.hpp"
#include "ae/trace.hpp"

using namespace ae;

namespace {

MatchResult sample_match(GameConfig& config) {
    auto avoider = make_strategy("random", Player::Avoider, config);
    auto enforcer = make_strategy("random", Player::Enforcer, config);
    return play_match(config, *avoider, *enforcer);
}

}  // namespace

TEST_CASE("trace round-trips and replays to the same result block") {
    for (auto rules : {RuleSet::Strict, RuleSet::Monotone}) {
        GameConfig config{9, 3, rules, TargetFamily::star(3), 17};
        MatchResult result = sample_match(config);
        TraceHeader header{kTraceVersion, config, "random", "random", "2026-01-01T00:00:00Z"};

        std::ostringstream out;
        write_trace(out, header, result);

        std::istringstream in(out.str());
        TraceData trace = read_trace(in);
        CHECK(trace.header.config.n == config.n);
        CHECK(trace.header.config.bias == config.bias);
        CHECK(trace.header.config.rules == config.rules);
        CHECK(trace.header.avoiderId == "random");
        REQUIRE(trace.moves.size() == result.trace.size());

        // byte-equal result blocks
        CHECK(trace.resultJson == result_json(result));
        MatchResult replayed = replay_result(trace);
        CHECK(result_json(replayed) == trace.resultJson);

        // writing again reproduces the file byte for byte
        std::ostringstream again;
        write_trace(again, trace.header, replayed);
        CHECK(again.str() == out.str());
    }
}

TEST_CASE("forfeit results carry through trace round-trip") {
    MatchResult result;
    result.forfeit = true;
    result.forfeitedBy = Player::Enforcer;
    result.forfeitReason = "test";
    result.winner = Player::Avoider;
    result.reason = MatchReason::Forfeit;
    result.trace = {Move{Player::Avoider, {make_edge(0, 1)}}};
    result.rounds = 1;
    result.avoiderEdgeCount = 1;

    GameConfig config{5, 2, RuleSet::Strict, TargetFamily::star(2), 0};
    TraceHeader header{kTraceVersion, config, "min-dmax", "x", "t"};
    std::ostringstream out;
    write_trace(out, header, result);
    std::istringstream in(out.str());
    TraceData trace = read_trace(in);
    MatchResult replayed = replay_result(trace);
    CHECK(replayed.forfeit);
    CHECK(replayed.winner == Player::Avoider);
    CHECK(result_json(replayed) == trace.resultJson);
}

TEST_CASE("malformed traces are rejected") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_trace(in);
    };
    CHECK_THROWS(parse(""));
    CHECK_THROWS(parse(R"({"type":"move","player":"A","edges":[[0,1]]})"));
    CHECK_THROWS(parse(R"({"type":"header","version":99})"));
    CHECK_THROWS(parse("not json"));
}

TEST_CASE("csv schema is fixed") {
    CHECK(csv_header() == "n,k,rules,family,b,r,winner,reason,rounds,avoider_edges,forfeit,seed");
    GameConfig config{100, 232, RuleSet::Strict, TargetFamily::star(3), 9};
    MatchResult result;
    result.winner = Player::Enforcer;
    result.reason = MatchReason::TargetCompleted;
    result.rounds = 22;
    result.avoiderEdgeCount = 22;
    CHECK(csv_row(config, 57, result) ==
          "100,3,strict,star,232,57,E,target-completed,22,22,0,9");
}
