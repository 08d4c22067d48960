// `ae`: play single matches, sweep bias ranges, query bias arithmetic,
// and solve tiny boards exactly.
//
// Exit codes: 0 success, 2 invalid input, 3 oracle cap exceeded,
// 4 strategy forfeit (play only).

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ae/arith.hpp"
#include "ae/oracle.hpp"
#include "ae/strategies.hpp"
#include "ae/trace.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitOracleCap = 3;
constexpr int kExitForfeit = 4;

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&now));
    return buf;
}

// "5", "1,3,9" or "1..6"
std::vector<std::uint64_t> parse_bias_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    auto range = text.find("..");
    if (range != std::string::npos) {
        std::uint64_t lo = std::stoull(text.substr(0, range));
        std::uint64_t hi = std::stoull(text.substr(range + 2));
        if (lo < 1 || lo > hi) throw std::invalid_argument("bad bias range: " + text);
        for (std::uint64_t b = lo; b <= hi; ++b) out.push_back(b);
        return out;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(std::stoull(item));
    if (out.empty()) throw std::invalid_argument("empty bias list");
    return out;
}

struct MatchFlags {
    std::uint32_t n = 10;
    std::uint32_t k = 3;
    std::uint64_t b = 1;
    std::string rules = "strict";
    std::string family = "star";
    std::string avoider = "min-dmax";
    std::string enforcer = "random";
    std::uint64_t seed = 0;
};

void add_match_flags(CLI::App& cmd, MatchFlags& f) {
    cmd.add_option("--n", f.n, "board size (vertices of K_n)")->required();
    cmd.add_option("--k", f.k, "target parameter k");
    cmd.add_option("--rules", f.rules)->check(CLI::IsMember({"strict", "monotone"}));
    cmd.add_option("--family", f.family)
        ->check(CLI::IsMember({"star", "double-star", "path-double-star"}));
    cmd.add_option("--avoider", f.avoider, "Avoider strategy id");
    cmd.add_option("--enforcer", f.enforcer, "Enforcer strategy id");
    cmd.add_option("--seed", f.seed, "base RNG seed");
}

ae::GameConfig to_config(const MatchFlags& f, std::uint64_t bias, std::uint64_t seed) {
    return {f.n, bias, ae::parse_rules(f.rules), ae::parse_family(f.family, f.k), seed};
}

int cmd_play(const MatchFlags& flags, const std::string& tracePath,
             const std::string& instrument) {
    ae::GameConfig config = to_config(flags, flags.b, flags.seed);
    auto avoider = ae::make_strategy(flags.avoider, ae::Player::Avoider, config);
    auto enforcer = ae::make_strategy(flags.enforcer, ae::Player::Enforcer, config);

    ae::MatchOptions options;
    if (!instrument.empty()) {
        std::istringstream in(instrument);
        std::string check;
        while (std::getline(in, check, ','))
            if (!check.empty()) options.checks.push_back(check);
    }
    ae::MatchResult result = ae::play_match(config, *avoider, *enforcer, options);

    if (!tracePath.empty()) {
        std::ofstream out(tracePath);
        if (!out) {
            std::cerr << "cannot open trace file: " << tracePath << "\n";
            return kExitInvalid;
        }
        ae::TraceHeader header{ae::kTraceVersion, config, flags.avoider, flags.enforcer,
                               iso_timestamp()};
        ae::write_trace(out, header, result);
    }

    for (const auto& d : result.diagnostics)
        std::cout << "check " << d.check << " round=" << d.round
                  << (d.pass ? " pass " : " FAIL ") << d.detail << "\n";

    std::cout << "winner=" << (result.winner == ae::Player::Avoider ? "A" : "E")
              << " reason=" << ae::reason_name(result.reason) << " rounds=" << result.rounds
              << " avoider_edges=" << result.avoiderEdgeCount << "\n";
    if (result.forfeit) {
        std::cout << "forfeit by="
                  << (result.forfeitedBy == ae::Player::Avoider ? "A" : "E") << " reason=\""
                  << result.forfeitReason << "\"\n";
        return kExitForfeit;
    }
    return 0;
}

// bias values for one n, either the explicit list or a generator
std::vector<std::uint64_t> sweep_biases(const std::string& gen, const std::string& bList,
                                        std::uint32_t n, std::uint32_t k,
                                        std::uint64_t geoStart, std::uint64_t geoLimit) {
    if (gen.empty()) return bList.empty() ? std::vector<std::uint64_t>{} : parse_bias_list(bList);
    if (gen == "eplus") {
        auto b = ae::arith::e_plus(n, k);
        return b ? std::vector<std::uint64_t>{*b} : std::vector<std::uint64_t>{};
    }
    if (gen == "eminus") {
        auto b = ae::arith::e_minus(n, k);
        return b ? std::vector<std::uint64_t>{*b} : std::vector<std::uint64_t>{};
    }
    if (gen == "construct-enforcer") {
        auto found = ae::arith::enforcer_favorable_strict_bias(n, k);
        return found ? std::vector<std::uint64_t>{found->first} : std::vector<std::uint64_t>{};
    }
    if (gen == "construct-avoider") {
        auto b = ae::arith::avoider_favorable_strict_bias(n, k);
        return b ? std::vector<std::uint64_t>{*b} : std::vector<std::uint64_t>{};
    }
    if (gen == "geometric") {
        std::vector<std::uint64_t> out;
        for (std::uint64_t b = geoStart; b <= geoLimit; b *= 2) out.push_back(b);
        return out;
    }
    throw std::invalid_argument("unknown bias generator: " + gen);
}

int cmd_sweep(const MatchFlags& flags, const std::vector<std::uint32_t>& nList,
              const std::string& gen, const std::string& bList, std::uint64_t geoStart,
              std::uint64_t geoLimit, std::uint32_t reps, const std::string& outPath) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!outPath.empty()) {
        file.open(outPath);
        if (!file) {
            std::cerr << "cannot open output file: " << outPath << "\n";
            return kExitInvalid;
        }
        out = &file;
    }
    *out << ae::csv_header() << "\n";

    // per-match seed: base + counter, counter incremented once per row in
    // (n, b, repetition) order
    std::uint64_t counter = 0;
    for (std::uint32_t n : nList) {
        std::vector<std::uint64_t> biases;
        try {
            biases = sweep_biases(gen, bList, n, flags.k, geoStart, geoLimit);
        } catch (const std::exception& e) {
            std::cerr << "n=" << n << ": " << e.what() << "\n";
            return kExitInvalid;
        }
        for (std::uint64_t b : biases) {
            for (std::uint32_t rep = 0; rep < reps; ++rep) {
                std::uint64_t seed = flags.seed + counter++;
                ae::GameConfig config = to_config(flags, b, seed);
                config.n = n;
                std::uint64_t r = ae::arith::remainder_r(n, b);
                try {
                    auto avoider = ae::make_strategy(flags.avoider, ae::Player::Avoider, config);
                    auto enforcer =
                        ae::make_strategy(flags.enforcer, ae::Player::Enforcer, config);
                    ae::MatchResult res = ae::play_match(config, *avoider, *enforcer);
                    *out << ae::csv_row(config, r, res) << "\n";
                } catch (const std::exception& e) {
                    // record the failure and keep sweeping
                    std::cerr << "n=" << n << " b=" << b << " rep=" << rep << " failed: "
                              << e.what() << "\n";
                }
            }
        }
    }
    return 0;
}

int cmd_oracle(const MatchFlags& flags, const std::string& bText) {
    auto biases = parse_bias_list(bText);
    ae::TargetFamily family = ae::parse_family(flags.family, flags.k);
    ae::RuleSet rules = ae::parse_rules(flags.rules);
    std::cout << "b,winner\n";
    std::optional<std::uint64_t> lastE;
    bool sawA = false, stable = true;
    for (std::uint64_t b : biases) {
        ae::GameConfig config{flags.n, b, rules, family, 0};
        ae::Player w = ae::oracle::solve(config);
        std::cout << b << "," << (w == ae::Player::Avoider ? "A" : "E") << "\n";
        if (w == ae::Player::Avoider) sawA = true;
        else {
            if (sawA) stable = false;
            lastE = b;
        }
    }
    if (stable && sawA && lastE) std::cout << "threshold," << *lastE << "\n";
    else if (stable && sawA) std::cout << "threshold,0\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Avoider-Enforcer games on K_n: matches, sweeps, bias arithmetic, exact solver"};
    app.require_subcommand(1);

    MatchFlags play;
    std::string tracePath, instrument;
    auto* playCmd = app.add_subcommand("play", "run one match");
    add_match_flags(*playCmd, play);
    playCmd->add_option("--b", play.b, "Enforcer bias")->required();
    playCmd->add_option("--trace", tracePath, "write a replayable trace here");
    playCmd->add_option("--instrument", instrument, "comma list of runtime checks");

    MatchFlags sweep;
    std::vector<std::uint32_t> sweepN;
    std::string sweepGen, sweepB, sweepOut;
    std::uint64_t geoStart = 1, geoLimit = 1;
    std::uint32_t reps = 1;
    auto* sweepCmd = app.add_subcommand("sweep", "CSV sweep over n and b");
    sweepCmd->add_option("--n", sweepN, "board sizes")->required();
    sweepCmd->add_option("--k", sweep.k);
    sweepCmd->add_option("--rules", sweep.rules)->check(CLI::IsMember({"strict", "monotone"}));
    sweepCmd->add_option("--family", sweep.family)
        ->check(CLI::IsMember({"star", "double-star", "path-double-star"}));
    sweepCmd->add_option("--avoider", sweep.avoider);
    sweepCmd->add_option("--enforcer", sweep.enforcer);
    sweepCmd->add_option("--seed", sweep.seed, "seed base; match i uses base+i");
    sweepCmd->add_option("--b", sweepB, "bias list or lo..hi range");
    sweepCmd->add_option("--b-gen", sweepGen,
                         "eplus | eminus | construct-enforcer | construct-avoider | geometric");
    sweepCmd->add_option("--b-start", geoStart, "geometric generator start");
    sweepCmd->add_option("--b-limit", geoLimit, "geometric generator upper limit");
    sweepCmd->add_option("--reps", reps)->check(CLI::PositiveNumber);
    sweepCmd->add_option("--out", sweepOut, "CSV path (default stdout)");

    auto* arithCmd = app.add_subcommand("arith", "bias arithmetic");
    arithCmd->require_subcommand(1);
    std::uint64_t an = 0, ab = 0, aN = 0, aq = 0, ac = 1, aLo = 0, aHi = 0;
    std::uint64_t expNum = 3, expDen = 2, deltaNum = 1, deltaDen = 2;
    std::uint32_t ak = 3;
    std::string variant = "i";

    auto* rCmd = arithCmd->add_subcommand("r", "r(n,b)");
    rCmd->add_option("--n", an)->required();
    rCmd->add_option("--b", ab)->required();

    auto* epCmd = arithCmd->add_subcommand("eplus", "e+(n,k)");
    epCmd->add_option("--n", an)->required();
    epCmd->add_option("--k", ak);
    auto* emCmd = arithCmd->add_subcommand("eminus", "e-(n,k)");
    emCmd->add_option("--n", an)->required();
    emCmd->add_option("--k", ak);

    auto* fmCmd = arithCmd->add_subcommand("fact-many", "divisor-window search over n");
    fmCmd->add_option("--n-lo", aLo)->required();
    fmCmd->add_option("--n-hi", aHi)->required();
    fmCmd->add_option("--c", ac);
    fmCmd->add_option("--exp-num", expNum);
    fmCmd->add_option("--exp-den", expDen);
    fmCmd->add_option("--variant", variant)->check(CLI::IsMember({"i", "ii"}));

    auto* faCmd = arithCmd->add_subcommand("fact-all", "smallest k with N mod k >= q");
    faCmd->add_option("--N", aN)->required();
    faCmd->add_option("--q", aq)->required();
    faCmd->add_option("--delta-num", deltaNum);
    faCmd->add_option("--delta-den", deltaDen);

    auto* ceCmd = arithCmd->add_subcommand("construct-enforcer", "Enforcer-favorable strict b");
    ceCmd->add_option("--n", an)->required();
    ceCmd->add_option("--k", ak);
    auto* caCmd = arithCmd->add_subcommand("construct-avoider", "Avoider-favorable strict b");
    caCmd->add_option("--n", an)->required();
    caCmd->add_option("--k", ak);

    MatchFlags oracle;
    std::string oracleB;
    auto* oracleCmd = app.add_subcommand("oracle", "exact winner table (tiny boards)");
    oracleCmd->add_option("--n", oracle.n)->required();
    oracleCmd->add_option("--k", oracle.k);
    oracleCmd->add_option("--rules", oracle.rules)
        ->check(CLI::IsMember({"strict", "monotone"}));
    oracleCmd->add_option("--family", oracle.family)
        ->check(CLI::IsMember({"star", "double-star", "path-double-star"}));
    oracleCmd->add_option("--b", oracleB, "bias list or lo..hi range")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (playCmd->parsed()) return cmd_play(play, tracePath, instrument);
        if (sweepCmd->parsed())
            return cmd_sweep(sweep, sweepN, sweepGen, sweepB, geoStart, geoLimit, reps, sweepOut);
        if (oracleCmd->parsed()) return cmd_oracle(oracle, oracleB);

        using namespace ae::arith;
        if (rCmd->parsed()) {
            std::cout << "r(" << an << "," << ab << ") = " << remainder_r(an, ab) << "\n";
        } else if (epCmd->parsed()) {
            auto v = e_plus(an, ak);
            std::cout << "eplus(" << an << "," << ak << ") = "
                      << (v ? std::to_string(*v) : "none") << "\n";
        } else if (emCmd->parsed()) {
            auto v = e_minus(an, ak);
            std::cout << "eminus(" << an << "," << ak << ") = "
                      << (v ? std::to_string(*v) : "none") << "\n";
        } else if (fmCmd->parsed()) {
            auto var = variant == "i" ? ManyVariant::DividesBinom : ManyVariant::DividesBinomMinusOne;
            auto hits = fact_many_search(ac, expNum, expDen, var, aLo, aHi);
            std::cout << "fact-many c=" << ac << " exp=" << expNum << "/" << expDen
                      << " variant=" << variant << " n=" << aLo << ".." << aHi << "\n";
            for (const auto& w : hits) std::cout << "n=" << w.n << " q=" << w.q << "\n";
        } else if (faCmd->parsed()) {
            auto v = fact_all_search(deltaNum, deltaDen, aN, aq);
            std::cout << "fact-all N=" << aN << " q=" << aq << " delta=" << deltaNum << "/"
                      << deltaDen << " -> " << (v ? std::to_string(*v) : "none") << "\n";
        } else if (ceCmd->parsed()) {
            auto v = enforcer_favorable_strict_bias(an, ak);
            if (v) std::cout << "construct-enforcer n=" << an << " k=" << ak << " -> q="
                             << v->second << " b=" << v->first << "\n";
            else std::cout << "construct-enforcer n=" << an << " k=" << ak << " -> none\n";
        } else if (caCmd->parsed()) {
            auto v = avoider_favorable_strict_bias(an, ak);
            std::cout << "construct-avoider n=" << an << " k=" << ak << " -> "
                      << (v ? "b=" + std::to_string(*v) : "none") << "\n";
        }
        return 0;
    } catch (const ae::oracle::CapExceeded& e) {
        std::cerr << e.what() << "\n";
        return kExitOracleCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
