// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "reaudit/u128.hpp"

namespace reaudit::sol {

struct SourcePos {
    int line = 0;
    int column = 0;
};

enum class Visibility { Public, External, Private, Internal };

const char* to_string(Visibility v);

// Types admitted by the subset. Mapping is always address => uint.
// Contract covers handle types such as `FairDare fd`.
struct SolType {
    enum class Kind { Uint, Bool, Address, AddressPayable, Mapping, Contract };
    Kind kind = Kind::Uint;
    std::string contract_name;  // Kind::Contract only

    static SolType uint256() { return {Kind::Uint, {}}; }
    static SolType boolean() { return {Kind::Bool, {}}; }
    static SolType address() { return {Kind::Address, {}}; }
    static SolType address_payable() { return {Kind::AddressPayable, {}}; }
    static SolType mapping() { return {Kind::Mapping, {}}; }
    static SolType contract(std::string name) { return {Kind::Contract, std::move(name)}; }

    bool operator==(const SolType&) const = default;
};

// Canonical ABI spelling: uint256, bool, address.
std::string abi_type_name(const SolType& type);

enum class BinOp { Add, Sub, Mul, Div, Mod, Lt, Gt, Le, Ge, Eq, Ne, And, Or };
enum class AssignOp { Assign, AddAssign, SubAssign };
enum class CallKind { Transfer, Send, CallValue };
enum class Builtin { MsgSender, MsgValue, TxOrigin, BlockNumber, SelfAddress, SelfBalance };

const char* to_string(BinOp op);
const char* to_string(CallKind kind);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

// Payload of a low-level call: abi.encodeWithSignature("name(types)", args...).
struct CallPayload {
    std::string signature;  // verbatim string literal, e.g. "withdraw()"
    std::string fn_name;    // parsed from the signature
    std::vector<ExprPtr> args;
};

struct Expr {
    struct NumberLit {
        u128 value;
    };
    struct BoolLit {
        bool value;
    };
    struct AddressLit {
        std::string hex;  // 0x + 40 hex digits, lowercased
    };
    struct StringLit {
        std::string value;
    };
    struct Ident {
        std::string name;
    };
    struct Member {
        ExprPtr base;
        std::string field;
    };
    struct IndexOf {
        ExprPtr base;
        ExprPtr key;
    };
    struct Binary {
        BinOp op;
        ExprPtr lhs;
        ExprPtr rhs;
    };
    // x.transfer(v) | x.send(v) | x.call.value(v)[.gas(g)]([payload])
    struct ExternalCall {
        ExprPtr target;
        CallKind kind;
        ExprPtr value;
        ExprPtr gas;  // CallValue only, may be null
        std::optional<CallPayload> payload;
    };
    // name(args) with no base: internal call or contract/address cast.
    // base.name(args): message call through a contract handle.
    struct Call {
        ExprPtr base;  // may be null
        std::string name;
        std::vector<ExprPtr> args;
    };
    struct BuiltinRef {
        Builtin which;
    };

    using Node = std::variant<NumberLit, BoolLit, AddressLit, StringLit, Ident, Member, IndexOf,
        Binary, ExternalCall, Call, BuiltinRef>;

    SourcePos pos;
    Node node;
};

struct Stmt;
using Block = std::vector<Stmt>;

struct Stmt {
    struct VarDecl {
        SolType type;
        std::string name;
        ExprPtr init;  // may be null
    };
    struct Assign {
        ExprPtr lvalue;  // Ident or IndexOf
        AssignOp op;
        ExprPtr value;
    };
    struct Require {
        ExprPtr cond;
        std::optional<std::string> message;
    };
    struct If {
        ExprPtr cond;
        Block then_block;
        std::optional<Block> else_block;
    };
    struct ExprStmt {
        ExprPtr expr;
    };
    // Event-style call to an undeclared name; semantically inert.
    struct Emit {
        std::string event;
        std::vector<ExprPtr> args;
    };
    struct Return {
        ExprPtr value;  // may be null
    };

    using Node = std::variant<VarDecl, Assign, Require, If, ExprStmt, Emit, Return>;

    SourcePos pos;
    int index = -1;  // pre-order position within the enclosing function body
    Node node;
};

struct Param {
    std::string name;
    SolType type;
};

struct FunctionDef {
    std::optional<std::string> name;  // nullopt => fallback
    std::vector<Param> params;
    Visibility visibility = Visibility::Public;
    bool payable = false;
    bool is_constructor = false;
    Block body;
    SourcePos pos;
};

struct StateVarDecl {
    std::string name;
    SolType type;
    Visibility visibility = Visibility::Private;
    ExprPtr initializer;  // may be null
    SourcePos pos;
};

struct ContractDef {
    std::string name;
    std::vector<StateVarDecl> state_vars;
    std::vector<FunctionDef> functions;  // named functions, declaration order
    std::optional<FunctionDef> ctor;
    std::optional<FunctionDef> fallback;
    SourcePos pos;

    const StateVarDecl* find_state_var(const std::string& var) const;
    const FunctionDef* find_function(const std::string& fn) const;
};

// One comparator of a pragma range, e.g. ">=0.4.22".
struct VersionRange {
    std::string text;  // verbatim range text as written in the pragma
};

struct SourceUnit {
    VersionRange pragma;
    std::vector<std::string> imports;
    std::vector<ContractDef> contracts;

    const ContractDef* find_contract(const std::string& name) const;
};

// Structural equality ignoring source positions. Statement indices are
// derived from structure, so they participate implicitly.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Stmt& a, const Stmt& b);
bool structurally_equal(const Block& a, const Block& b);
bool structurally_equal(const FunctionDef& a, const FunctionDef& b);
bool structurally_equal(const ContractDef& a, const ContractDef& b);
bool structurally_equal(const SourceUnit& a, const SourceUnit& b);

}  // namespace reaudit::sol
