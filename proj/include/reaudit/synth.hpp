// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reaudit/abi.hpp"
#include "reaudit/ast.hpp"
#include "reaudit/u128.hpp"

namespace reaudit::synth {

class SynthError : public std::runtime_error {
public:
    explicit SynthError(const std::string& what) : std::runtime_error(what) {}
};

class NonAttackableTarget : public SynthError {
public:
    explicit NonAttackableTarget(const std::string& what)
        : SynthError("non-attackable target: " + what) {}
};

class ArityMismatch : public SynthError {
public:
    ArityMismatch(size_t expected, size_t got)
        : SynthError("entry argument count mismatch: target takes " + std::to_string(expected) +
                     ", plan carries " + std::to_string(got)) {}
};

struct AttackPlan {
    std::string target_contract;
    std::string target_function;
    // Rendered argument literals for the entry call. Empty = derive defaults
    // from the ABI (uint 0, bool false, address(this)).
    std::vector<std::string> entry_args;
    int max_reentry = 64;
    u128 funding = 0;  // the attacker's own wei, deposited before the attack
    u128 stake = 0;    // harness-financed deposit routed through the attacker
};

// Builds the attacker contract: an owner swept via transferToOwner, a handle
// to the victim bound by constructor argument, an entry function that
// deposits funding+stake through the victim's payable path and then calls
// the target, and a payable fallback that re-calls the target through a
// low-level call while armed and below the reentry bound.
sol::SourceUnit synthesize_attacker(const sol::AbiSpec& abi, const AttackPlan& plan);

// Attacker contract and entry/counter names, shared with the orchestrator.
std::string attacker_contract_name(const AttackPlan& plan);
inline constexpr const char* kEntryFunction = "attack";

// Subset source text; re-parses to a structurally identical unit.
std::string render_attacker(const sol::SourceUnit& unit);

}  // namespace reaudit::synth
