#include <doctest.h>

#include "reaudit/abi.hpp"
#include "reaudit/parser.hpp"
#include "reaudit/analyzer.hpp"
#include "reaudit/synth.hpp"
#include "support/fixtures.hpp"

using namespace reaudit;
using namespace reaudit::synth;

namespace {

sol::AbiSpec fairdare_abi() {
    return sol::extract_abi(test::parse_fixture("corpus/FairDare.sol"), "FairDare");
}

AttackPlan fairdare_plan() {
    AttackPlan plan;
    plan.target_contract = "FairDare";
    plan.target_function = "withdraw";
    return plan;
}

}  // namespace

TEST_CASE("FairDare attacker: handle call in the entry, re-call in the fallback") {
    const sol::SourceUnit attacker = synthesize_attacker(fairdare_abi(), fairdare_plan());
    REQUIRE(attacker.contracts.size() == 1);
    const sol::ContractDef& c = attacker.contracts[0];
    CHECK(c.name == "Attacker_FairDare_withdraw");
    REQUIRE(c.ctor.has_value());
    REQUIRE(c.fallback.has_value());
    CHECK(c.fallback->payable);
    CHECK(c.find_function("attack") != nullptr);
    CHECK(c.find_function("transferToOwner") != nullptr);

    // fallback: guard + bound + low-level re-call to withdraw
    const auto* guard = std::get_if<sol::Stmt::If>(&c.fallback->body[0].node);
    REQUIRE(guard != nullptr);
    const auto* bound = std::get_if<sol::Stmt::If>(&guard->then_block[0].node);
    REQUIRE(bound != nullptr);
    REQUIRE(bound->then_block.size() == 2);
    const auto* recall_stmt = std::get_if<sol::Stmt::ExprStmt>(&bound->then_block[1].node);
    REQUIRE(recall_stmt != nullptr);
    const auto* recall = std::get_if<sol::Expr::ExternalCall>(&recall_stmt->expr->node);
    REQUIRE(recall != nullptr);
    CHECK(recall->kind == sol::CallKind::CallValue);
    REQUIRE(recall->payload.has_value());
    CHECK(recall->payload->fn_name == "withdraw");
    CHECK(recall->payload->signature == "withdraw()");

    // entry: arm then call the target through the typed handle
    const sol::FunctionDef* entry = c.find_function("attack");
    REQUIRE(entry->body.size() == 2);  // no deposit when funding + stake == 0
    const auto* hit = std::get_if<sol::Stmt::ExprStmt>(&entry->body[1].node);
    REQUIRE(hit != nullptr);
    const auto* call = std::get_if<sol::Expr::Call>(&hit->expr->node);
    REQUIRE(call != nullptr);
    CHECK(call->name == "withdraw");
    REQUIRE(call->base != nullptr);
}

TEST_CASE("rendered attacker carries the fallback spelling and the target call") {
    const std::string text = render_attacker(synthesize_attacker(fairdare_abi(), fairdare_plan()));
    CHECK(text.find("function() external") != std::string::npos);
    CHECK(text.find("withdraw()") != std::string::npos);
    CHECK(text.find("import \"FairDare.sol\"") != std::string::npos);
}

TEST_CASE("synthesized attackers re-parse to an identical unit") {
    AttackPlan plan = fairdare_plan();
    for (u128 funding : {u128(0), u128(5), u128(887500000000000ULL)}) {
        plan.funding = funding;
        const sol::SourceUnit attacker = synthesize_attacker(fairdare_abi(), plan);
        const sol::SourceUnit reparsed = sol::parse(render_attacker(attacker));
        CHECK(sol::structurally_equal(attacker, reparsed));
    }
}

TEST_CASE("funding > 0 prepends a deposit through the payable path") {
    AttackPlan plan = fairdare_plan();
    plan.funding = 5;
    const sol::SourceUnit attacker = synthesize_attacker(fairdare_abi(), plan);
    const sol::FunctionDef* entry = attacker.contracts[0].find_function("attack");
    REQUIRE(entry != nullptr);
    REQUIRE(entry->body.size() == 3);
    const auto* deposit = std::get_if<sol::Stmt::Require>(&entry->body[1].node);
    REQUIRE(deposit != nullptr);
    const auto* call = std::get_if<sol::Expr::ExternalCall>(&deposit->cond->node);
    REQUIRE(call != nullptr);
    CHECK(call->kind == sol::CallKind::CallValue);
    const auto* amount = std::get_if<sol::Expr::NumberLit>(&call->value->node);
    REQUIRE(amount != nullptr);
    CHECK(amount->value == 5);
}

TEST_CASE("maxReentry 0 renders a guard that never re-calls") {
    AttackPlan plan = fairdare_plan();
    plan.max_reentry = 0;
    const sol::SourceUnit attacker = synthesize_attacker(fairdare_abi(), plan);
    const std::string text = render_attacker(attacker);
    CHECK(text.find("reentries < 0") != std::string::npos);
    CHECK_NOTHROW(sol::parse(text));
}

TEST_CASE("typed defaults fill the entry call") {
    const auto unit = sol::parse(
        "pragma solidity >=0.4.22 <0.6.0;\n"
        "contract Multi {\n"
        "    uint private x;\n"
        "    function hit(uint amount, bool flag, address to) public {"
        " x = amount; to.transfer(x); x = 0; }\n"
        "    function () external payable {\n"
        "    }\n"
        "}");
    AttackPlan plan;
    plan.target_contract = "Multi";
    plan.target_function = "hit";
    const sol::SourceUnit attacker = synthesize_attacker(sol::extract_abi(unit, "Multi"), plan);
    const std::string text = render_attacker(attacker);
    CHECK(text.find("hit(0, false, address(this))") != std::string::npos);
    CHECK(text.find("abi.encodeWithSignature(\"hit(uint256,bool,address)\", 0, false, "
                    "address(this))") != std::string::npos);
}

TEST_CASE("non-attackable targets and arity mismatches raise") {
    const sol::AbiSpec abi = fairdare_abi();
    AttackPlan plan = fairdare_plan();

    plan.target_function = "constructor";
    CHECK_THROWS_AS(synthesize_attacker(abi, plan), NonAttackableTarget);
    plan.target_function = "nosuch";
    CHECK_THROWS_AS(synthesize_attacker(abi, plan), NonAttackableTarget);

    plan = fairdare_plan();
    plan.entry_args = {"1"};  // withdraw takes no arguments
    CHECK_THROWS_AS(synthesize_attacker(abi, plan), ArityMismatch);
}

TEST_CASE("attackers synthesized for the whole corpus re-parse losslessly") {
    for (const char* fixture : {"corpus/FairDare.sol", "corpus/DeFi.sol", "corpus/Moneybox.sol",
             "corpus/AIRToken.sol", "corpus/QuizBLZ.sol", "victims/dao_token.sol"}) {
        CAPTURE(fixture);
        const sol::SourceUnit unit = test::parse_fixture(fixture);
        for (const auto& candidate : reaudit::analysis::find_candidates(unit)) {
            if (candidate.in_constructor || candidate.function.empty())
                continue;
            AttackPlan plan;
            plan.target_contract = candidate.contract;
            plan.target_function = candidate.function;
            plan.stake = 125;
            const auto abi = sol::extract_abi(unit, candidate.contract);
            const sol::SourceUnit attacker = synthesize_attacker(abi, plan);
            const sol::SourceUnit reparsed = sol::parse(render_attacker(attacker));
            CHECK(sol::structurally_equal(attacker, reparsed));
        }
    }
}
