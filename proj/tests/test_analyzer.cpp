#include <doctest.h>

#include <algorithm>

#include "reaudit/analyzer.hpp"
#include "reaudit/parser.hpp"
#include "support/fixtures.hpp"

using namespace reaudit;
using namespace reaudit::analysis;

TEST_CASE("listing 1 yields one call site with the custom gas amount") {
    const auto unit = test::parse_fixture("listings/listing1.sol");
    const auto sites = find_external_calls(unit);
    REQUIRE(sites.size() == 1);
    CHECK(sites[0].contract == "Sender");
    CHECK(sites[0].function == "send");
    CHECK(sites[0].kind == sol::CallKind::CallValue);
    CHECK(sites[0].gas.kind == GasForwarded::Kind::Custom);
    CHECK(sites[0].gas.amount == 20317);
}

TEST_CASE("an empty contract yields no call sites") {
    const auto unit = sol::parse("pragma solidity >=0.4.22 <0.6.0; contract E {}");
    CHECK(find_external_calls(unit).empty());
}

TEST_CASE("listing 9 yields a stipended transfer site in withdraw") {
    const auto unit = test::parse_fixture("corpus/FairDare.sol");
    const auto sites = find_external_calls(unit);
    REQUIRE(sites.size() == 1);
    CHECK(sites[0].function == "withdraw");
    CHECK(sites[0].kind == sol::CallKind::Transfer);
    CHECK(sites[0].gas.kind == GasForwarded::Kind::Stipend2300);
    CHECK(sites[0].gas.amount == 2300);
    CHECK(sites[0].stmt_index == 5);
}

TEST_CASE("listing 2 flags transferBalance, single-function pattern only") {
    const auto unit = test::parse_fixture("listings/listing2.sol");
    const auto candidates = find_candidates(unit);
    REQUIRE(candidates.size() == 1);
    const VulnCandidate& c = candidates[0];
    CHECK(c.contract == "Vault");
    CHECK(c.function == "transferBalance");
    CHECK(c.pattern == Pattern::SingleFunction);
    REQUIRE(c.writes_after.size() == 1);
    CHECK(c.writes_after[0].target_var == "balances");
    CHECK(c.writes_after[0].stmt_index > c.call_site.stmt_index);
}

TEST_CASE("listing 3 (checks-effects-interactions) yields no candidates") {
    const auto unit = test::parse_fixture("listings/listing3.sol");
    CHECK(find_candidates(unit).empty());
}

TEST_CASE("listing 4 yields both patterns on withdraw") {
    const auto unit = test::parse_fixture("listings/listing4.sol");
    const auto candidates = find_candidates(unit);
    REQUIRE(candidates.size() == 2);

    const auto single = std::find_if(candidates.begin(), candidates.end(),
        [](const VulnCandidate& c) { return c.pattern == Pattern::SingleFunction; });
    const auto cross = std::find_if(candidates.begin(), candidates.end(),
        [](const VulnCandidate& c) { return c.pattern == Pattern::CrossFunction; });
    REQUIRE(single != candidates.end());
    REQUIRE(cross != candidates.end());

    CHECK(single->function == "withdraw");
    REQUIRE(single->writes_after.size() == 1);
    CHECK(single->writes_after[0].target_var == "balance");

    CHECK(cross->function == "withdraw");
    CHECK(cross->cross_peers == std::vector<std::string>{"transfer"});
    CHECK(cross->shared_vars == std::vector<std::string>{"balance"});
}

TEST_CASE("single-function writes-after indices exceed the call index") {
    for (const char* fixture : {"listings/listing2.sol", "listings/listing4.sol",
             "corpus/FairDare.sol", "corpus/DeFi.sol", "corpus/AIRToken.sol"}) {
        CAPTURE(fixture);
        for (const auto& c : find_candidates(test::parse_fixture(fixture))) {
            if (c.pattern != Pattern::SingleFunction)
                continue;
            for (const auto& w : c.writes_after)
                CHECK(w.stmt_index > c.call_site.stmt_index);
        }
    }
}

TEST_CASE("CEI reordering removes all candidates (listing pair property)") {
    const auto vulnerable = find_candidates(test::parse_fixture("victims/dao_token.sol"));
    const auto fixed = find_candidates(test::parse_fixture("victims/dao_token_cei.sol"));
    CHECK(vulnerable.size() == 2);
    CHECK(fixed.empty());
}

TEST_CASE("constructor call sites surface as candidates") {
    const auto unit = test::parse_fixture("corpus/Globalcryptox.sol");
    const auto candidates = find_candidates(unit);
    REQUIRE(candidates.size() == 1);
    CHECK(candidates[0].function == "constructor");
    CHECK(candidates[0].in_constructor);
    CHECK(candidates[0].signature == "Globalcryptox.constructor()");
}

TEST_CASE("signature emission: FairDare") {
    const auto candidates = find_candidates(test::parse_fixture("corpus/FairDare.sol"));
    CHECK(emit_signatures(candidates) == "FairDare.withdraw()\n");
}

TEST_CASE("signature emission: empty input -> empty file") {
    CHECK(emit_signatures({}) == "");
}

TEST_CASE("signature emission dedupes the two listing-4 candidates") {
    const auto candidates = find_candidates(test::parse_fixture("listings/listing4.sol"));
    REQUIRE(candidates.size() == 2);
    CHECK(emit_signatures(candidates) == "Token.withdraw()\n");
}

TEST_CASE("signature output is deterministic") {
    const std::string source = test::read_fixture("corpus/Moneybox.sol");
    const auto first = emit_signatures(find_candidates(sol::parse(source)));
    const auto second = emit_signatures(find_candidates(sol::parse(source)));
    CHECK(first == second);
    CHECK(first == "Moneybox.withdraw()\n");
}

TEST_CASE("a call with no subsequent write produces no candidate") {
    const auto unit = sol::parse(
        "pragma solidity >=0.4.22 <0.6.0;\n"
        "contract Payer {\n"
        "    function pay(address payable to) public {\n"
        "        to.transfer(address(this).balance);\n"
        "    }\n"
        "    function () external payable {\n"
        "    }\n"
        "}");
    CHECK(find_candidates(unit).empty());
}
