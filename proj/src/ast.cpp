// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reaudit/ast.hpp"

#include <algorithm>

namespace reaudit::sol {

const char* to_string(Visibility v) {
    switch (v) {
    case Visibility::Public:
        return "public";
    case Visibility::External:
        return "external";
    case Visibility::Private:
        return "private";
    case Visibility::Internal:
        return "internal";
    }
    return "?";
}

const char* to_string(BinOp op) {
    switch (op) {
    case BinOp::Add:
        return "+";
    case BinOp::Sub:
        return "-";
    case BinOp::Mul:
        return "*";
    case BinOp::Div:
        return "/";
    case BinOp::Mod:
        return "%";
    case BinOp::Lt:
        return "<";
    case BinOp::Gt:
        return ">";
    case BinOp::Le:
        return "<=";
    case BinOp::Ge:
        return ">=";
    case BinOp::Eq:
        return "==";
    case BinOp::Ne:
        return "!=";
    case BinOp::And:
        return "&&";
    case BinOp::Or:
        return "||";
    }
    return "?";
}

const char* to_string(CallKind kind) {
    switch (kind) {
    case CallKind::Transfer:
        return "transfer";
    case CallKind::Send:
        return "send";
    case CallKind::CallValue:
        return "call-value";
    }
    return "?";
}

std::string abi_type_name(const SolType& type) {
    switch (type.kind) {
    case SolType::Kind::Uint:
        return "uint256";
    case SolType::Kind::Bool:
        return "bool";
    case SolType::Kind::Address:
    case SolType::Kind::AddressPayable:
    case SolType::Kind::Contract:
        return "address";
    case SolType::Kind::Mapping:
        return "mapping(address=>uint256)";
    }
    return "?";
}

const StateVarDecl* ContractDef::find_state_var(const std::string& var) const {
    for (const auto& v : state_vars)
        if (v.name == var)
            return &v;
    return nullptr;
}

const FunctionDef* ContractDef::find_function(const std::string& fn) const {
    for (const auto& f : functions)
        if (f.name == fn)
            return &f;
    return nullptr;
}

const ContractDef* SourceUnit::find_contract(const std::string& name) const {
    for (const auto& c : contracts)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

bool equal_ptr(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b)
        return !a && !b;
    return structurally_equal(*a, *b);
}

bool equal_args(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(),
               [](const ExprPtr& x, const ExprPtr& y) { return equal_ptr(x, y); });
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index())
        return false;
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Expr::NumberLit>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, Expr::BoolLit>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, Expr::AddressLit>) {
                return lhs.hex == rhs.hex;
            } else if constexpr (std::is_same_v<T, Expr::StringLit>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, Expr::Ident>) {
                return lhs.name == rhs.name;
            } else if constexpr (std::is_same_v<T, Expr::Member>) {
                return lhs.field == rhs.field && equal_ptr(lhs.base, rhs.base);
            } else if constexpr (std::is_same_v<T, Expr::IndexOf>) {
                return equal_ptr(lhs.base, rhs.base) && equal_ptr(lhs.key, rhs.key);
            } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                return lhs.op == rhs.op && equal_ptr(lhs.lhs, rhs.lhs) &&
                       equal_ptr(lhs.rhs, rhs.rhs);
            } else if constexpr (std::is_same_v<T, Expr::ExternalCall>) {
                if (lhs.kind != rhs.kind || !equal_ptr(lhs.target, rhs.target) ||
                    !equal_ptr(lhs.value, rhs.value) || !equal_ptr(lhs.gas, rhs.gas))
                    return false;
                if (lhs.payload.has_value() != rhs.payload.has_value())
                    return false;
                if (!lhs.payload)
                    return true;
                return lhs.payload->signature == rhs.payload->signature &&
                       equal_args(lhs.payload->args, rhs.payload->args);
            } else if constexpr (std::is_same_v<T, Expr::Call>) {
                return lhs.name == rhs.name && equal_ptr(lhs.base, rhs.base) &&
                       equal_args(lhs.args, rhs.args);
            } else {
                static_assert(std::is_same_v<T, Expr::BuiltinRef>);
                return lhs.which == rhs.which;
            }
        },
        a.node);
}

bool structurally_equal(const Stmt& a, const Stmt& b) {
    if (a.node.index() != b.node.index())
        return false;
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Stmt::VarDecl>) {
                return lhs.type == rhs.type && lhs.name == rhs.name &&
                       equal_ptr(lhs.init, rhs.init);
            } else if constexpr (std::is_same_v<T, Stmt::Assign>) {
                return lhs.op == rhs.op && equal_ptr(lhs.lvalue, rhs.lvalue) &&
                       equal_ptr(lhs.value, rhs.value);
            } else if constexpr (std::is_same_v<T, Stmt::Require>) {
                return lhs.message == rhs.message && equal_ptr(lhs.cond, rhs.cond);
            } else if constexpr (std::is_same_v<T, Stmt::If>) {
                if (!equal_ptr(lhs.cond, rhs.cond) ||
                    !structurally_equal(lhs.then_block, rhs.then_block))
                    return false;
                if (lhs.else_block.has_value() != rhs.else_block.has_value())
                    return false;
                return !lhs.else_block || structurally_equal(*lhs.else_block, *rhs.else_block);
            } else if constexpr (std::is_same_v<T, Stmt::ExprStmt>) {
                return equal_ptr(lhs.expr, rhs.expr);
            } else if constexpr (std::is_same_v<T, Stmt::Emit>) {
                return lhs.event == rhs.event && equal_args(lhs.args, rhs.args);
            } else {
                static_assert(std::is_same_v<T, Stmt::Return>);
                return equal_ptr(lhs.value, rhs.value);
            }
        },
        a.node);
}

bool structurally_equal(const Block& a, const Block& b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(),
               [](const Stmt& x, const Stmt& y) { return structurally_equal(x, y); });
}

bool structurally_equal(const FunctionDef& a, const FunctionDef& b) {
    if (a.name != b.name || a.visibility != b.visibility || a.payable != b.payable ||
        a.is_constructor != b.is_constructor)
        return false;
    if (a.params.size() != b.params.size())
        return false;
    for (size_t i = 0; i < a.params.size(); ++i)
        if (a.params[i].name != b.params[i].name || a.params[i].type != b.params[i].type)
            return false;
    return structurally_equal(a.body, b.body);
}

bool structurally_equal(const ContractDef& a, const ContractDef& b) {
    if (a.name != b.name || a.state_vars.size() != b.state_vars.size() ||
        a.functions.size() != b.functions.size())
        return false;
    for (size_t i = 0; i < a.state_vars.size(); ++i) {
        const auto& x = a.state_vars[i];
        const auto& y = b.state_vars[i];
        if (x.name != y.name || x.type != y.type || x.visibility != y.visibility ||
            !equal_ptr(x.initializer, y.initializer))
            return false;
    }
    for (size_t i = 0; i < a.functions.size(); ++i)
        if (!structurally_equal(a.functions[i], b.functions[i]))
            return false;
    if (a.ctor.has_value() != b.ctor.has_value() ||
        a.fallback.has_value() != b.fallback.has_value())
        return false;
    if (a.ctor && !structurally_equal(*a.ctor, *b.ctor))
        return false;
    if (a.fallback && !structurally_equal(*a.fallback, *b.fallback))
        return false;
    return true;
}

bool structurally_equal(const SourceUnit& a, const SourceUnit& b) {
    if (a.pragma.text != b.pragma.text || a.imports != b.imports ||
        a.contracts.size() != b.contracts.size())
        return false;
    for (size_t i = 0; i < a.contracts.size(); ++i)
        if (!structurally_equal(a.contracts[i], b.contracts[i]))
            return false;
    return true;
}

}  // namespace reaudit::sol
