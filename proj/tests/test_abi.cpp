#include <doctest.h>

#include "reaudit/abi.hpp"
#include "reaudit/errors.hpp"
#include "reaudit/parser.hpp"
#include "support/fixtures.hpp"

using namespace reaudit;
using namespace reaudit::sol;

TEST_CASE("FairDare ABI matches the solc layout") {
    const SourceUnit unit = test::parse_fixture("corpus/FairDare.sol");
    const AbiSpec abi = extract_abi(unit, "FairDare");

    REQUIRE(abi.entries.size() == 2);
    const AbiEntry& withdraw = abi.entries[0];
    CHECK(withdraw.kind == AbiEntry::Kind::Function);
    CHECK(withdraw.name == "withdraw");
    CHECK(withdraw.inputs.empty());
    CHECK(withdraw.outputs.empty());
    CHECK_FALSE(withdraw.payable);
    CHECK(withdraw.state_mutability == "nonpayable");
    const AbiEntry& fallback = abi.entries[1];
    CHECK(fallback.kind == AbiEntry::Kind::Fallback);
    CHECK(fallback.payable);
    CHECK(fallback.state_mutability == "payable");

    const nlohmann::json j = to_json(abi);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["constant"] == false);
    CHECK(j[0]["inputs"].empty());
    CHECK(j[0]["name"] == "withdraw");
    CHECK(j[0]["outputs"].empty());
    CHECK(j[0]["payable"] == false);
    CHECK(j[0]["stateMutability"] == "nonpayable");
    CHECK(j[0]["type"] == "function");
    // The fallback entry carries only the three solc fields.
    CHECK(j[1].size() == 3);
    CHECK(j[1]["payable"] == true);
    CHECK(j[1]["stateMutability"] == "payable");
    CHECK(j[1]["type"] == "fallback");

    // nlohmann::json orders keys alphabetically, which is exactly the solc
    // field order: constant, inputs, name, outputs, payable, stateMutability,
    // type.
    const std::string dumped = j[0].dump();
    CHECK(dumped.find("\"constant\"") < dumped.find("\"inputs\""));
    CHECK(dumped.find("\"inputs\"") < dumped.find("\"name\""));
    CHECK(dumped.find("\"name\"") < dumped.find("\"outputs\""));
    CHECK(dumped.find("\"outputs\"") < dumped.find("\"payable\""));
    CHECK(dumped.find("\"payable\"") < dumped.find("\"stateMutability\""));
    CHECK(dumped.find("\"stateMutability\"") < dumped.find("\"type\""));
}

TEST_CASE("empty contract yields an empty entry list") {
    const SourceUnit unit = parse("pragma solidity >=0.4.22 <0.6.0; contract E {}");
    CHECK(extract_abi(unit, "E").entries.empty());
}

TEST_CASE("listing 4 yields two function entries and no fallback") {
    const SourceUnit unit = test::parse_fixture("listings/listing4.sol");
    const AbiSpec abi = extract_abi(unit, "Token");
    REQUIRE(abi.entries.size() == 2);
    CHECK(abi.entries[0].name == "transfer");
    REQUIRE(abi.entries[0].inputs.size() == 2);
    CHECK(abi.entries[0].inputs[0].type == "address");
    CHECK(abi.entries[0].inputs[1].type == "uint256");
    CHECK(abi.entries[1].name == "withdraw");
    CHECK(abi.fallback() == nullptr);
}

TEST_CASE("private functions stay out of the ABI; view functions read-only") {
    const SourceUnit unit = parse(
        "pragma solidity >=0.4.22 <0.6.0;\n"
        "contract C {\n"
        "    uint private x;\n"
        "    function setter() public { x = 1; }\n"
        "    function getter() public { uint y = x; }\n"
        "    function hidden() private { x = 2; }\n"
        "}");
    const AbiSpec abi = extract_abi(unit, "C");
    REQUIRE(abi.entries.size() == 2);
    CHECK(abi.entries[0].name == "setter");
    CHECK(abi.entries[0].state_mutability == "nonpayable");
    CHECK(abi.entries[1].name == "getter");
    CHECK(abi.entries[1].state_mutability == "view");
    CHECK(abi.find_function("hidden") == nullptr);
}

TEST_CASE("unknown contract raises") {
    const SourceUnit unit = parse("pragma solidity >=0.4.22 <0.6.0; contract E {}");
    CHECK_THROWS_AS(extract_abi(unit, "Nope"), UnknownContract);
}

TEST_CASE("constructor entries serialize with the solc constructor shape") {
    const SourceUnit unit = test::parse_fixture("corpus/Globalcryptox.sol");
    const AbiSpec abi = extract_abi(unit, "Globalcryptox");
    REQUIRE(abi.entries.size() == 2);
    CHECK(abi.entries[0].kind == AbiEntry::Kind::Constructor);
    CHECK(abi.entries[0].payable);
    const nlohmann::json j = to_json(abi);
    CHECK(j[0]["type"] == "constructor");
    CHECK(j[0]["payable"] == true);
    CHECK(j[0]["stateMutability"] == "payable");
    CHECK_FALSE(j[0].contains("name"));
    CHECK_FALSE(j[0].contains("outputs"));
}
