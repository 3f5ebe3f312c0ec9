// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reaudit/abi.hpp"

#include "reaudit/errors.hpp"

namespace reaudit::sol {

namespace {

bool block_writes_state(const Block& block, const ContractDef& contract);

bool stmt_writes_state(const Stmt& stmt, const ContractDef& contract) {
    if (const auto* assign = std::get_if<Stmt::Assign>(&stmt.node)) {
        const Expr* lv = assign->lvalue.get();
        if (const auto* idx = std::get_if<Expr::IndexOf>(&lv->node))
            lv = idx->base.get();
        if (const auto* ident = std::get_if<Expr::Ident>(&lv->node))
            return contract.find_state_var(ident->name) != nullptr;
        return false;
    }
    if (const auto* iff = std::get_if<Stmt::If>(&stmt.node)) {
        if (block_writes_state(iff->then_block, contract))
            return true;
        return iff->else_block && block_writes_state(*iff->else_block, contract);
    }
    return false;
}

bool block_writes_state(const Block& block, const ContractDef& contract) {
    for (const auto& stmt : block)
        if (stmt_writes_state(stmt, contract))
            return true;
    return false;
}

std::vector<AbiParam> abi_params(const FunctionDef& fn) {
    std::vector<AbiParam> out;
    for (const auto& p : fn.params)
        out.push_back({p.name, abi_type_name(p.type)});
    return out;
}

AbiEntry entry_for(const FunctionDef& fn, const ContractDef& contract, AbiEntry::Kind kind) {
    AbiEntry entry;
    entry.kind = kind;
    if (kind == AbiEntry::Kind::Function)
        entry.name = fn.name;
    entry.inputs = abi_params(fn);
    entry.payable = fn.payable;
    if (fn.payable)
        entry.state_mutability = "payable";
    else if (block_writes_state(fn.body, contract))
        entry.state_mutability = "nonpayable";
    else
        entry.state_mutability = "view";
    return entry;
}

}  // namespace

const AbiEntry* AbiSpec::find_function(const std::string& name) const {
    for (const auto& e : entries)
        if (e.kind == AbiEntry::Kind::Function && e.name == name)
            return &e;
    return nullptr;
}

const AbiEntry* AbiSpec::fallback() const {
    for (const auto& e : entries)
        if (e.kind == AbiEntry::Kind::Fallback)
            return &e;
    return nullptr;
}

AbiSpec extract_abi(const SourceUnit& unit, const std::string& contract) {
    const ContractDef* def = unit.find_contract(contract);
    if (!def)
        throw UnknownContract(contract);

    AbiSpec abi;
    abi.contract = contract;
    for (const auto& fn : def->functions) {
        if (fn.visibility != Visibility::Public && fn.visibility != Visibility::External)
            continue;
        abi.entries.push_back(entry_for(fn, *def, AbiEntry::Kind::Function));
    }
    if (def->ctor)
        abi.entries.push_back(entry_for(*def->ctor, *def, AbiEntry::Kind::Constructor));
    if (def->fallback)
        abi.entries.push_back(entry_for(*def->fallback, *def, AbiEntry::Kind::Fallback));
    return abi;
}

nlohmann::json to_json(const AbiSpec& abi) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : abi.entries) {
        nlohmann::json j;
        if (e.kind == AbiEntry::Kind::Function) {
            j["constant"] = e.state_mutability == "view";
            j["inputs"] = nlohmann::json::array();
            for (const auto& p : e.inputs)
                j["inputs"].push_back({{"name", p.name}, {"type", p.type}});
            j["name"] = *e.name;
            j["outputs"] = nlohmann::json::array();
            j["type"] = "function";
        } else if (e.kind == AbiEntry::Kind::Constructor) {
            j["inputs"] = nlohmann::json::array();
            for (const auto& p : e.inputs)
                j["inputs"].push_back({{"name", p.name}, {"type", p.type}});
            j["type"] = "constructor";
        } else {
            j["type"] = "fallback";
        }
        j["payable"] = e.payable;
        j["stateMutability"] = e.state_mutability;
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace reaudit::sol
