// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reaudit/ast.hpp"
#include "reaudit/sim/gas.hpp"
#include "reaudit/sim/trace.hpp"
#include "reaudit/sim/world.hpp"

namespace reaudit::sim {

struct Transaction {
    Address from;
    Address to;
    Wei value = 0;
    uint64_t gas_limit = 0;  // 0 = use the genesis cap
    std::optional<std::string> call_fn;
    std::vector<Value> call_args;
};

enum class Status { Success, Reverted, OutOfGas };

const char* to_string(Status status);

struct ExecutionResult {
    Status status = Status::Success;
    std::string reason;  // Reverted only
    uint64_t gas_used = 0;
    std::optional<Value> return_value;
    std::optional<Address> created;  // deploy only
    std::vector<TraceEvent> trace;

    bool ok() const { return status == Status::Success; }
};

struct Receipt {
    uint64_t block = 0;
    Status status = Status::Success;
    uint64_t gas_used = 0;
};

struct SimOptions {
    GasModel gas_model = GasModel::Faithful;
    GasCosts costs;
    uint64_t tx_gas_limit = 0xffffffff;  // genesis gasLimit
};

// Sequential chain: one transaction at a time against a single-owner world.
// Every transaction (deploy included) is its own block.
class Simulator {
public:
    explicit Simulator(WorldState world, SimOptions options = {});

    // Creates the contract account at an address derived from (deployer,
    // nonce), runs state-variable initializers and the constructor, and
    // reverts account creation entirely on failure.
    ExecutionResult deploy(const Address& deployer,
        std::shared_ptr<const sol::SourceUnit> unit, const std::string& contract,
        std::vector<Value> ctor_args, Wei value, uint64_t gas_limit = 0);

    // Plain transfers move value; transfers and calls to code accounts
    // dispatch the named function or the fallback. Atomic: failure undoes
    // every effect of the transaction.
    ExecutionResult send_transaction(const Transaction& tx);

    WorldState& world() { return world_; }
    const WorldState& world() const { return world_; }
    const SimOptions& options() const { return options_; }
    const std::vector<Receipt>& receipts() const { return receipts_; }

    // Independent copy for control runs.
    Simulator fork() const;

private:
    WorldState world_;
    SimOptions options_;
    std::vector<Receipt> receipts_;
};

}  // namespace reaudit::sim
