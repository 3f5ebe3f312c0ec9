// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reaudit/sim/world.hpp"

namespace reaudit::sim {

class DuplicateAllocAddress : public std::runtime_error {
public:
    explicit DuplicateAllocAddress(const std::string& addr)
        : std::runtime_error("duplicate genesis allocation for " + addr) {}
};

class GenesisError : public std::runtime_error {
public:
    explicit GenesisError(const std::string& what) : std::runtime_error(what) {}
};

struct GenesisConfig {
    uint64_t chain_id = 1708;
    u128 difficulty = 0x4000;      // informational
    uint64_t gas_limit = 0xffffffff;  // per-transaction cap
    std::vector<std::pair<Address, Wei>> alloc;

    static GenesisConfig default_config();
};

// One account per allocation, block number 0.
WorldState genesis(const GenesisConfig& config);

// Reads the geth-style genesis file layout: config.chainID, alloc (address ->
// {balance}), difficulty, gasLimit, nonce. Unknown fields produce warnings,
// not failures. Numeric fields accept decimal or 0x-hex strings.
GenesisConfig load_genesis_file(
    const std::string& json_text, std::vector<std::string>* warnings = nullptr);

}  // namespace reaudit::sim
