// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reaudit/ast.hpp"

namespace reaudit::sol {

struct AbiParam {
    std::string name;
    std::string type;  // canonical ABI spelling
};

struct AbiEntry {
    enum class Kind { Function, Fallback, Constructor };
    Kind kind = Kind::Function;
    std::optional<std::string> name;  // Function only
    std::vector<AbiParam> inputs;
    std::vector<AbiParam> outputs;  // always empty in the subset
    bool payable = false;
    std::string state_mutability;  // payable | nonpayable | view
};

struct AbiSpec {
    std::string contract;
    std::vector<AbiEntry> entries;

    const AbiEntry* find_function(const std::string& name) const;
    const AbiEntry* fallback() const;
};

// One entry per public/external function in declaration order, then the
// constructor and fallback entries when declared. Mutability is payable for
// payable functions, nonpayable when the body writes contract state, and
// view otherwise.
AbiSpec extract_abi(const SourceUnit& unit, const std::string& contract);

// Serializes with the solc field set: function entries carry
// constant/inputs/name/outputs/payable/stateMutability/type, fallback
// entries only payable/stateMutability/type.
nlohmann::json to_json(const AbiSpec& abi);

}  // namespace reaudit::sol
