// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reaudit/sim/genesis.hpp"

#include <set>

#include <json.hpp>

namespace reaudit::sim {

namespace {

// The stock bank account used when no genesis file is given; the balance
// matches the usual prefilled-wallet figure (1e29 wei).
constexpr std::string_view kBankAddress = "0xb1c0a62c5df3ae6469031d5bc0842382187c7f25";

u128 parse_amount(const nlohmann::json& j, const std::string& field) {
    if (j.is_number_unsigned())
        return j.get<uint64_t>();
    if (j.is_string()) {
        if (auto v = u128_from_string(j.get<std::string>()))
            return *v;
    }
    throw GenesisError("genesis field " + field + " is not a valid amount");
}

}  // namespace

GenesisConfig GenesisConfig::default_config() {
    GenesisConfig config;
    const auto bank = Address::from_hex(kBankAddress);
    u128 balance = *u128_from_string("100000000000000000000000000000");
    config.alloc.emplace_back(*bank, balance);
    return config;
}

WorldState genesis(const GenesisConfig& config) {
    if (config.gas_limit == 0)
        throw GenesisError("genesis gasLimit must be positive");
    std::set<Address> seen;
    WorldState world;
    for (const auto& [addr, balance] : config.alloc) {
        if (!seen.insert(addr).second)
            throw DuplicateAllocAddress(addr.hex());
        world.accounts[addr] = Account{balance, 0, {}, nullptr, nullptr};
    }
    world.block_number = 0;
    return world;
}

GenesisConfig load_genesis_file(const std::string& json_text, std::vector<std::string>* warnings) {
    nlohmann::json root = nlohmann::json::parse(json_text);
    if (!root.is_object())
        throw GenesisError("genesis file must contain a JSON object");

    GenesisConfig config;
    config.alloc.clear();

    auto warn = [&](const std::string& msg) {
        if (warnings)
            warnings->push_back(msg);
    };

    for (const auto& [key, value] : root.items()) {
        if (key == "config") {
            for (const auto& [ck, cv] : value.items()) {
                if (ck == "chainID" || ck == "chainId") {
                    config.chain_id = cv.is_string()
                        ? static_cast<uint64_t>(parse_amount(cv, ck))
                        : cv.get<uint64_t>();
                } else {
                    warn("ignoring unknown genesis config field: config." + ck);
                }
            }
        } else if (key == "alloc") {
            for (const auto& [addr_text, entry] : value.items()) {
                const auto addr = Address::from_hex(addr_text);
                if (!addr)
                    throw GenesisError("invalid allocation address: " + addr_text);
                if (!entry.contains("balance"))
                    throw GenesisError("allocation " + addr_text + " lacks a balance");
                config.alloc.emplace_back(*addr, parse_amount(entry["balance"], "balance"));
            }
        } else if (key == "difficulty") {
            config.difficulty = parse_amount(value, "difficulty");
        } else if (key == "gasLimit") {
            config.gas_limit = static_cast<uint64_t>(parse_amount(value, "gasLimit"));
        } else if (key == "nonce") {
            // Present in the geth layout, no semantics here.
        } else {
            warn("ignoring unknown genesis field: " + key);
        }
    }
    return config;
}

}  // namespace reaudit::sim
