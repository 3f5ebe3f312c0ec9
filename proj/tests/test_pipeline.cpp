#include <doctest.h>

#include <algorithm>
#include <set>

#include "reaudit/parser.hpp"
#include "reaudit/pipeline.hpp"
#include "reaudit/sim/genesis.hpp"
#include "support/fixtures.hpp"

using namespace reaudit;
using namespace reaudit::pipeline;

namespace {

constexpr u128 kFairDareSeed = 7100000000000000ULL;  // 0.0071 ether in wei

AttackReport attack_fixture(const std::string& fixture, sim::GasModel model,
    u128 seed, size_t candidate_index = 0) {
    auto unit = std::make_shared<const sol::SourceUnit>(
        sol::parse(test::read_fixture(fixture)));
    const auto candidates = analysis::find_candidates(*unit);
    REQUIRE(candidates.size() > candidate_index);
    Options options;
    options.gas_model = model;
    options.seed_victim = seed;
    synth::AttackPlan plan;
    return run_attack(sim::genesis(sim::GenesisConfig::default_config()), unit,
        candidates[candidate_index], plan, options);
}

}  // namespace

TEST_CASE("FairDare, paper gas model: confirmed full drain of the seeded balance") {
    const AttackReport report =
        attack_fixture("corpus/FairDare.sol", sim::GasModel::Paper, kFairDareSeed);
    CHECK(report.verdict == Verdict::Confirmed);
    CHECK(report.ether_extracted == kFairDareSeed);
    CHECK(report.entitled == 0);
    CHECK(report.victim_final_balance == 0);
    // By hand: stake = seed/8, the victim holds 9 stakes, blocksPast is 0, so
    // withdraw pays the stake nine times; the tenth frame finds an empty
    // balance and returns without paying.
    CHECK(report.max_reentry_depth == 10);
    CHECK(report.conservation_ok);
    CHECK(report.gas_model == sim::GasModel::Paper);
}

TEST_CASE("FairDare, faithful gas model: stipend blocks the reentry") {
    const AttackReport report =
        attack_fixture("corpus/FairDare.sol", sim::GasModel::Faithful, kFairDareSeed);
    CHECK(report.verdict == Verdict::NotConfirmed);
    CHECK(report.max_reentry_depth == 1);
    CHECK(report.ether_extracted == 0);
    CHECK(report.victim_final_balance == kFairDareSeed);
    CHECK(report.trace_text.find("out-of-gas") != std::string::npos);
}

TEST_CASE("constructor candidates are not attackable") {
    const AttackReport report =
        attack_fixture("corpus/Globalcryptox.sol", sim::GasModel::Faithful, 1000);
    CHECK(report.verdict == Verdict::NotAttackable);
}

TEST_CASE("DAO-pattern victim is confirmed under both gas models") {
    for (sim::GasModel model : {sim::GasModel::Faithful, sim::GasModel::Paper}) {
        CAPTURE(sim::to_string(model));
        for (size_t candidate = 0; candidate < 2; ++candidate) {
            const AttackReport report =
                attack_fixture("victims/dao_token.sol", model, 1000, candidate);
            CHECK(report.verdict == Verdict::Confirmed);
            CHECK(report.max_reentry_depth >= 2);
            CHECK(report.ether_extracted > report.entitled);
            CHECK(report.conservation_ok);
        }
    }
}

TEST_CASE("maxReentry bounds the number of re-entrant calls") {
    auto unit = std::make_shared<const sol::SourceUnit>(
        sol::parse(test::read_fixture("victims/dao_token.sol")));
    const auto candidates = analysis::find_candidates(*unit);
    REQUIRE(!candidates.empty());
    Options options;
    options.gas_model = sim::GasModel::Faithful;
    options.seed_victim = 1000;
    options.max_reentry = 3;
    synth::AttackPlan plan;
    const AttackReport report = run_attack(
        sim::genesis(sim::GenesisConfig::default_config()), unit, candidates[0], plan, options);
    // k re-entrant calls on top of the initial one: depth is at most k+1.
    CHECK(report.max_reentry_depth >= 2);
    CHECK(report.max_reentry_depth <= 4);
}

TEST_CASE("funding flows into entitled and the attack still nets more") {
    auto unit = std::make_shared<const sol::SourceUnit>(
        sol::parse(test::read_fixture("victims/dao_token.sol")));
    const auto candidates = analysis::find_candidates(*unit);
    Options options;
    options.gas_model = sim::GasModel::Faithful;
    options.seed_victim = 1000;
    synth::AttackPlan plan;
    plan.funding = 5;
    const AttackReport report = run_attack(
        sim::genesis(sim::GenesisConfig::default_config()), unit, candidates[0], plan, options);
    CHECK(report.verdict == Verdict::Confirmed);
    CHECK(report.entitled == 5);
    CHECK(report.ether_extracted > 5);
    // By hand: the entry stakes 125+5=130, the victim holds 1130, each round
    // pays the stale 130 until the ninth attempt cannot, so the attacker
    // books 8*130 received minus the 130 staked.
    CHECK(report.ether_extracted == 910);
}

TEST_CASE("batch analysis: version-incompatible fixture fails without aborting the rest") {
    const std::vector<std::pair<std::string, std::string>> sources = {
        {"DeFi.sol", test::read_fixture("corpus/DeFi.sol")},
        {"Globalcryptox.sol", test::read_fixture("batch/Globalcryptox.sol")},
        {"FairDare.sol", test::read_fixture("corpus/FairDare.sol")},
    };
    Options options;
    const PipelineReport report = analyze_sources(sources, options);
    REQUIRE(report.files.size() == 3);
    CHECK_FALSE(report.files[0].analysis_failed);
    CHECK(report.files[1].analysis_failed);
    CHECK(report.files[1].error.find("version") != std::string::npos);
    CHECK_FALSE(report.files[2].analysis_failed);
    CHECK(report.summary.failed == 1);
    CHECK(report.summary.confirmed == 1);   // DeFi
    CHECK(report.summary.potential == 1);   // FairDare under faithful gas
    CHECK(exit_code(report) == 1);
}

TEST_CASE("empty input produces an empty report with exit 0") {
    const PipelineReport report = analyze_sources({}, Options{});
    CHECK(report.files.empty());
    CHECK(report.summary == Summary{});
    CHECK(exit_code(report) == 0);
}

TEST_CASE("all inputs failing yields exit 3") {
    const PipelineReport report =
        analyze_sources({{"bad.sol", "pragma solidity ^0.8.0; contract X {}"}}, Options{});
    CHECK(report.summary.failed == 1);
    CHECK(exit_code(report) == 3);
}

TEST_CASE("CEI pair: one report for the vulnerable twin, nothing for the fixed one") {
    const std::vector<std::pair<std::string, std::string>> sources = {
        {"dao_token.sol", test::read_fixture("victims/dao_token.sol")},
        {"dao_token_cei.sol", test::read_fixture("victims/dao_token_cei.sol")},
    };
    const PipelineReport report = analyze_sources(sources, Options{});
    CHECK(report.files[0].attacks.size() == 2);  // both patterns on withdraw
    for (const auto& attack : report.files[0].attacks)
        CHECK(attack.verdict == Verdict::Confirmed);
    CHECK(report.files[1].candidates.empty());
    CHECK(report.files[1].attacks.empty());
    CHECK(report.summary.safe == 1);
}

TEST_CASE("fresh-world isolation: a contract's report is batch-independent") {
    const auto alone = analyze_sources(
        {{"DeFi.sol", test::read_fixture("corpus/DeFi.sol")}}, Options{});
    const auto batched = analyze_sources(
        {{"Moneybox.sol", test::read_fixture("corpus/Moneybox.sol")},
            {"DeFi.sol", test::read_fixture("corpus/DeFi.sol")}},
        Options{});
    REQUIRE(alone.files.size() == 1);
    REQUIRE(batched.files.size() == 2);
    const auto& a = alone.files[0].attacks;
    const auto& b = batched.files[1].attacks;
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].verdict == b[i].verdict);
        CHECK(a[i].ether_extracted == b[i].ether_extracted);
        CHECK(a[i].entitled == b[i].entitled);
        CHECK(a[i].max_reentry_depth == b[i].max_reentry_depth);
        CHECK(a[i].trace_text == b[i].trace_text);
    }
}

TEST_CASE("confirmed findings always correspond to static candidates") {
    std::vector<std::pair<std::string, std::string>> sources;
    for (const char* fixture : {"corpus/DeFi.sol", "corpus/FairDare.sol", "corpus/Moneybox.sol",
             "corpus/AIRToken.sol", "corpus/QuizBLZ.sol", "corpus/Globalcryptox.sol"})
        sources.emplace_back(fixture, test::read_fixture(fixture));
    const PipelineReport report = analyze_sources(sources, Options{});
    for (const auto& file : report.files) {
        std::set<std::string> flagged;
        for (const auto& c : file.candidates)
            flagged.insert(c.signature);
        for (const auto& attack : file.attacks) {
            if (attack.verdict == Verdict::Confirmed)
                CHECK(flagged.count(attack.signature) == 1);
        }
    }
}

TEST_CASE("json report is schema-stable and round-trips") {
    const PipelineReport report = analyze_sources(
        {{"dao_token.sol", test::read_fixture("victims/dao_token.sol")}}, Options{});
    const nlohmann::json j = to_json(report);
    const std::string dumped = j.dump(2);
    const nlohmann::json reparsed = nlohmann::json::parse(dumped);
    CHECK(reparsed == j);
    CHECK(reparsed["summary"]["confirmed"] == 2);
    REQUIRE(reparsed["files"].size() == 1);
    CHECK(reparsed["files"][0]["attacks"][0]["verdict"] == "confirmed");
    CHECK(reparsed["files"][0]["attacks"][0]["etherExtractedWei"] == "1000");
    // Dumping twice yields byte-identical output (stable key order).
    CHECK(dumped == to_json(report).dump(2));
}

TEST_CASE("parallel jobs produce the same report as sequential") {
    std::vector<std::pair<std::string, std::string>> sources;
    for (const char* fixture : {"corpus/DeFi.sol", "corpus/FairDare.sol", "corpus/Moneybox.sol",
             "corpus/AIRToken.sol", "corpus/QuizBLZ.sol"})
        sources.emplace_back(fixture, test::read_fixture(fixture));
    Options sequential;
    Options parallel;
    parallel.jobs = 4;
    const auto a = to_json(analyze_sources(sources, sequential)).dump();
    const auto b = to_json(analyze_sources(sources, parallel)).dump();
    CHECK(a == b);
}

TEST_CASE("DAO trace: only the innermost withdraw reverts, outer transfers persist") {
    const AttackReport report =
        attack_fixture("victims/dao_token.sol", sim::GasModel::Paper, 1000);
    REQUIRE(report.verdict == Verdict::Confirmed);

    size_t reverted_exits = 0;
    size_t last_revert_line = 0;
    std::vector<std::string> lines;
    std::istringstream in(report.trace_text);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].find("status=reverted") != std::string::npos) {
            ++reverted_exits;
            last_revert_line = i;
        }
    }
    // One contained failure: the deepest withdraw that can no longer pay.
    CHECK(reverted_exits == 1);
    // Everything after it unwinds successfully.
    for (size_t i = last_revert_line + 1; i < lines.size(); ++i) {
        if (lines[i].find("exit ") == 0)
            CHECK(lines[i].find("status=success") != std::string::npos);
    }
    // The attacker kept nine payments of 125 and staked 125: a 1000-wei gain.
    CHECK(report.ether_extracted == 1000);
}

TEST_CASE("a flagged private function is not attackable") {
    auto unit = std::make_shared<const sol::SourceUnit>(sol::parse(
        "pragma solidity >=0.4.22 <0.6.0;\n"
        "contract Hidden {\n"
        "    mapping (address => uint) private owed;\n"
        "    function () external payable {\n"
        "        owed[msg.sender] += msg.value;\n"
        "    }\n"
        "    function drain(address payable to, uint amount) private {\n"
        "        to.transfer(amount);\n"
        "        owed[to] = 0;\n"
        "    }\n"
        "}"));
    const auto candidates = analysis::find_candidates(*unit);
    REQUIRE(candidates.size() == 1);
    CHECK(candidates[0].function == "drain");
    const AttackReport report = run_attack(
        sim::genesis(sim::GenesisConfig::default_config()), unit, candidates[0],
        synth::AttackPlan{}, Options{});
    CHECK(report.verdict == Verdict::NotAttackable);
}

TEST_CASE("static-only mode stops after candidates") {
    Options options;
    options.static_only = true;
    const PipelineReport report = analyze_sources(
        {{"dao_token.sol", test::read_fixture("victims/dao_token.sol")}}, options);
    REQUIRE(report.files.size() == 1);
    CHECK(report.files[0].candidates.size() == 2);
    CHECK(report.files[0].attacks.empty());
    CHECK(report.summary.potential == 2);
    CHECK(report.summary.confirmed == 0);
    CHECK(exit_code(report) == 0);
}
