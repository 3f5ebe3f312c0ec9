#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "support/fixtures.hpp"

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

CommandResult run_cli(const std::string& args) {
    const std::string command = std::string(REAUDIT_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    std::array<char, 4096> buffer;
    size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture(const std::string& name) {
    return reaudit::test::fixture_path(name);
}

}  // namespace

TEST_CASE("scan prints the FairDare signature with exit 0") {
    const auto result = run_cli("scan " + fixture("corpus/FairDare.sol"));
    CHECK(result.exit_code == 0);
    CHECK(result.output == "FairDare.withdraw()\n");
}

TEST_CASE("analyze FairDare in paper mode confirms and exits 1") {
    const auto result = run_cli("analyze " + fixture("corpus/FairDare.sol") +
                                " --gas-model paper --seed-victim 7100000000000000");
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("verdict: confirmed") != std::string::npos);
}

TEST_CASE("analyze the CEI-fixed twin finds nothing and exits 0") {
    const auto result = run_cli("analyze " + fixture("victims/dao_token_cei.sol"));
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("verdict: confirmed") == std::string::npos);
    CHECK(result.output.find("confirmed=0") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("analyze").exit_code == 2);
    CHECK(run_cli("analyze nothing.sol --gas-model warp9").exit_code == 2);
}

TEST_CASE("json report parses and carries the machine fields") {
    const auto result = run_cli("analyze " + fixture("victims/dao_token.sol") + " --json");
    CHECK(result.exit_code == 1);
    const nlohmann::json j = nlohmann::json::parse(result.output);
    CHECK(j["summary"]["confirmed"] == 2);
    CHECK(j["files"][0]["attacks"][0]["etherExtractedWei"] == "1000");
}

TEST_CASE("simulate runs a deploy/send/balance script against the genesis file") {
    const std::string script_path = "/tmp/reaudit_cli_script.txt";
    {
        std::ofstream script(script_path);
        script << "# deposit then withdraw through the fallback\n";
        script << "deploy @fairdare " << fixture("corpus/FairDare.sol")
               << " FairDare from=0xB1C0a62c5df3AE6469031D5BC0842382187C7F25\n";
        script << "send from=0xB1C0a62c5df3AE6469031D5BC0842382187C7F25 to=@fairdare"
                  " value=12345\n";
        script << "balance @fairdare\n";
    }
    const auto result = run_cli(
        "simulate --genesis " + fixture("genesis.json") + " --script " + script_path);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("deployed @fairdare=0x") != std::string::npos);
    CHECK(result.output.find("send status=success") != std::string::npos);
    CHECK(result.output.find("balance @fairdare=12345") != std::string::npos);
}

TEST_CASE("emit-attacker writes a parseable attacker contract") {
    const auto result = run_cli("emit-attacker " + fixture("corpus/FairDare.sol") +
                                " --function withdraw --out /tmp");
    CHECK(result.exit_code == 0);
    CHECK(result.output == "/tmp/Attacker_FairDare_withdraw.sol\n");
    std::ifstream in("/tmp/Attacker_FairDare_withdraw.sol");
    REQUIRE(in.good());
    std::ostringstream text;
    text << in.rdbuf();
    CHECK(text.str().find("function() external") != std::string::npos);
    CHECK_NOTHROW(reaudit::sol::parse(text.str()));
}

TEST_CASE("a batch where every input fails exits 3") {
    const auto result = run_cli("analyze " + fixture("batch/Globalcryptox.sol"));
    CHECK(result.exit_code == 3);
}

TEST_CASE("scan over the corpus matches the known signature set") {
    const auto result = run_cli("scan " + fixture("corpus") + "/*.sol");
    CHECK(result.exit_code == 0);
    CHECK(result.output ==
          "AIRToken.burn()\n"
          "DeFi.withdraw()\n"
          "FairDare.withdraw()\n"
          "Globalcryptox.constructor()\n"
          "Moneybox.withdraw()\n"
          "QuizBLZ.try()\n");
}
