// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reaudit/sim/interpreter.hpp"

#include <algorithm>
#include <map>

namespace reaudit::sim {

using sol::Block;
using sol::Builtin;
using sol::CallKind;
using sol::ContractDef;
using sol::Expr;
using sol::ExprPtr;
using sol::FunctionDef;
using sol::SolType;
using sol::Stmt;

const char* to_string(Status status) {
    switch (status) {
    case Status::Success:
        return "success";
    case Status::Reverted:
        return "reverted";
    case Status::OutOfGas:
        return "out-of-gas";
    }
    return "?";
}

namespace {

Value default_value(const SolType& type) {
    switch (type.kind) {
    case SolType::Kind::Bool:
        return Value::boolean(false);
    case SolType::Kind::Address:
    case SolType::Kind::AddressPayable:
    case SolType::Kind::Contract:
        return Value::address(Address{});
    default:
        return Value::wei(0);
    }
}

std::string mapping_slot(const std::string& var, const Address& key) {
    return var + ":" + key.hex();
}

// Transaction-scoped execution engine. Frame failures unwind through
// exceptions and are converted to statuses at message-call boundaries.
class Engine {
public:
    Engine(WorldState& world, const SimOptions& options, std::vector<TraceEvent>& trace)
        : world_(world), options_(options), costs_(options.costs), trace_(trace) {}

    struct CallOutcome {
        Status status = Status::Success;
        std::string reason;
        uint64_t gas_left = 0;
    };

    // A named call when fn_name is set, otherwise a plain transfer that
    // dispatches the fallback on code accounts.
    CallOutcome message_call(const Address& from, const Address& to, Wei value, uint64_t gas,
        const std::optional<std::string>& fn_name, const std::vector<Value>& args,
        const Address& origin, int depth) {
        if (depth > costs_.max_call_depth)
            return {Status::Reverted, "call depth exceeded", 0};

        auto token = world_.snapshot();
        if (world_.balance(from) < value) {
            world_.revert_to(token);
            return {Status::Reverted, "insufficient funds", gas};
        }
        move_value(from, to, value);

        const Account* callee = world_.find(to);
        if (!callee || !callee->has_code()) {
            // Plain account: value settles, any call data is ignored.
            world_.commit(token);
            return {Status::Success, "", gas};
        }

        const ContractDef& code = *callee->code;
        const FunctionDef* target = nullptr;
        std::string display;
        if (fn_name) {
            const FunctionDef* named = code.find_function(*fn_name);
            if (named && (named->visibility == sol::Visibility::Public ||
                             named->visibility == sol::Visibility::External)) {
                target = named;
                display = *fn_name;
            }
        }
        if (!target) {
            if (code.fallback) {
                target = &*code.fallback;
            } else {
                world_.revert_to(token);
                return {Status::Reverted, "no matching function and no fallback", 0};
            }
        }
        if (value > 0 && !target->payable) {
            world_.revert_to(token);
            return {Status::Reverted,
                display.empty() ? "non-payable fallback received value"
                                : "non-payable function received value",
                0};
        }
        static const std::vector<Value> kNoArgs;
        // Unmatched selectors land in the fallback with no arguments.
        const std::vector<Value>* bound_args = display.empty() ? &kNoArgs : &args;
        if (target->params.size() != bound_args->size()) {
            world_.revert_to(token);
            return {Status::Reverted, "argument count mismatch", 0};
        }

        Frame frame;
        frame.self = to;
        frame.sender = from;
        frame.origin = origin;
        frame.msg_value = value;
        frame.code = &code;
        frame.gas = gas;
        frame.depth = depth;
        frame.scopes.emplace_back();
        for (size_t i = 0; i < target->params.size(); ++i)
            frame.scopes.back()[target->params[i].name] = (*bound_args)[i];

        trace_.push_back({TraceEvent::Kind::Enter, depth, from, to, display, value, gas, ""});
        try {
            exec_block(frame, target->body);
        } catch (const ReturnEx&) {
            // normal early return
        } catch (const RevertEx& r) {
            // State unwinds; the unspent remainder returns to the caller.
            world_.revert_to(token);
            trace_.push_back({TraceEvent::Kind::Exit, depth, {}, {}, "", 0, gas - frame.gas,
                std::string("reverted: ") + r.reason});
            return {Status::Reverted, r.reason, frame.gas};
        } catch (const OutOfGasEx&) {
            world_.revert_to(token);
            trace_.push_back({TraceEvent::Kind::Exit, depth, {}, {}, "", 0, gas, "out-of-gas"});
            return {Status::OutOfGas, "out of gas", 0};
        }
        world_.commit(token);
        trace_.push_back(
            {TraceEvent::Kind::Exit, depth, {}, {}, "", 0, gas - frame.gas, "success"});
        return {Status::Success, "", frame.gas};
    }

    // Contract creation: account, state-variable initializers, constructor.
    CallOutcome create_contract(const Address& deployer, const Address& at,
        std::shared_ptr<const sol::SourceUnit> unit, const ContractDef& code,
        const std::vector<Value>& ctor_args, Wei value, uint64_t gas) {
        auto token = world_.snapshot();
        if (world_.balance(deployer) < value) {
            world_.revert_to(token);
            return {Status::Reverted, "insufficient funds", 0};
        }
        if (value > 0 && (!code.ctor || !code.ctor->payable)) {
            world_.revert_to(token);
            return {Status::Reverted, "non-payable constructor received value", 0};
        }
        if (code.ctor && code.ctor->params.size() != ctor_args.size()) {
            world_.revert_to(token);
            return {Status::Reverted, "constructor argument count mismatch", 0};
        }

        world_.create_account(at);
        world_.set_code(at, std::move(unit), &code);
        move_value(deployer, at, value);

        Frame frame;
        frame.self = at;
        frame.sender = deployer;
        frame.origin = deployer;
        frame.msg_value = value;
        frame.code = &code;
        frame.gas = gas;
        frame.depth = 1;
        frame.scopes.emplace_back();

        trace_.push_back(
            {TraceEvent::Kind::Enter, 1, deployer, at, "<create:" + code.name + ">", value, gas,
                ""});
        try {
            for (const auto& var : code.state_vars) {
                if (var.type.kind == SolType::Kind::Mapping)
                    continue;  // mappings have no materialized default slot
                Value init = var.initializer ? eval(frame, *var.initializer)
                                             : default_value(var.type);
                storage_write(frame, var.name, std::move(init));
            }
            if (code.ctor) {
                for (size_t i = 0; i < code.ctor->params.size(); ++i)
                    frame.scopes.back()[code.ctor->params[i].name] = ctor_args[i];
                exec_block(frame, code.ctor->body);
            }
        } catch (const ReturnEx&) {
        } catch (const RevertEx& r) {
            world_.revert_to(token);
            trace_.push_back({TraceEvent::Kind::Exit, 1, {}, {}, "", 0, gas - frame.gas,
                std::string("reverted: ") + r.reason});
            return {Status::Reverted, r.reason, frame.gas};
        } catch (const OutOfGasEx&) {
            world_.revert_to(token);
            trace_.push_back({TraceEvent::Kind::Exit, 1, {}, {}, "", 0, gas, "out-of-gas"});
            return {Status::OutOfGas, "out of gas", 0};
        }
        world_.commit(token);
        trace_.push_back(
            {TraceEvent::Kind::Exit, 1, {}, {}, "", 0, gas - frame.gas, "success"});
        return {Status::Success, "", frame.gas};
    }

private:
    struct Frame {
        Address self;
        Address sender;
        Address origin;
        Wei msg_value = 0;
        const ContractDef* code = nullptr;
        uint64_t gas = 0;
        int depth = 0;
        int internal_depth = 0;
        std::vector<std::map<std::string, Value>> scopes;
    };

    struct RevertEx {
        std::string reason;
    };
    struct OutOfGasEx {};
    struct ReturnEx {
        std::optional<Value> value;
    };

    WorldState& world_;
    const SimOptions& options_;
    const GasCosts& costs_;
    std::vector<TraceEvent>& trace_;

    void charge(Frame& frame, uint64_t amount) {
        if (frame.gas < amount) {
            frame.gas = 0;
            throw OutOfGasEx{};
        }
        frame.gas -= amount;
    }

    void move_value(const Address& from, const Address& to, Wei value) {
        if (value == 0)
            return;
        world_.sub_balance(from, value);
        world_.add_balance(to, value);
        trace_.push_back({TraceEvent::Kind::ValueMove, 0, from, to, "", value, 0, ""});
    }

    [[noreturn]] void revert(const std::string& reason) { throw RevertEx{reason}; }

    // --- value helpers ------------------------------------------------------

    Wei as_uint(const Value& v, const char* what) {
        if (const auto* w = std::get_if<Wei>(&v.v))
            return *w;
        revert(std::string(what) + ": expected a uint value");
    }

    bool as_bool(const Value& v, const char* what) {
        if (const auto* b = std::get_if<bool>(&v.v))
            return *b;
        revert(std::string(what) + ": expected a bool value");
    }

    Address as_address(const Value& v, const char* what) {
        if (const auto* a = std::get_if<Address>(&v.v))
            return *a;
        if (const auto* w = std::get_if<Wei>(&v.v); w && *w == 0)
            return Address{};
        revert(std::string(what) + ": expected an address value");
    }

    // --- storage ------------------------------------------------------------

    Value storage_read(Frame& frame, const std::string& slot, const Value& fallback) {
        charge(frame, costs_.storage_read);
        return world_.storage_at(frame.self, slot, fallback);
    }

    void storage_write(Frame& frame, const std::string& slot, Value value) {
        charge(frame, costs_.storage_write);
        trace_.push_back({TraceEvent::Kind::StateWrite, frame.depth, {}, frame.self, "", 0, 0,
            slot + "=" + value.to_string()});
        world_.set_storage(frame.self, slot, std::move(value));
    }

    Value* find_local(Frame& frame, const std::string& name) {
        for (auto it = frame.scopes.rbegin(); it != frame.scopes.rend(); ++it) {
            auto found = it->find(name);
            if (found != it->end())
                return &found->second;
        }
        return nullptr;
    }

    // --- statements -----------------------------------------------------------

    void exec_block(Frame& frame, const Block& block) {
        frame.scopes.emplace_back();
        for (const Stmt& stmt : block)
            exec_stmt(frame, stmt);
        frame.scopes.pop_back();
    }

    void exec_stmt(Frame& frame, const Stmt& stmt) {
        charge(frame, costs_.statement);
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Stmt::VarDecl>) {
                    Value v = node.init ? eval(frame, *node.init) : default_value(node.type);
                    frame.scopes.back()[node.name] = std::move(v);
                } else if constexpr (std::is_same_v<T, Stmt::Assign>) {
                    exec_assign(frame, node);
                } else if constexpr (std::is_same_v<T, Stmt::Require>) {
                    if (!as_bool(eval(frame, *node.cond), "require"))
                        revert(node.message && !node.message->empty() ? *node.message
                                                                      : "requirement failed");
                } else if constexpr (std::is_same_v<T, Stmt::If>) {
                    if (as_bool(eval(frame, *node.cond), "if")) {
                        exec_block(frame, node.then_block);
                    } else if (node.else_block) {
                        exec_block(frame, *node.else_block);
                    }
                } else if constexpr (std::is_same_v<T, Stmt::ExprStmt>) {
                    eval(frame, *node.expr);
                } else if constexpr (std::is_same_v<T, Stmt::Emit>) {
                    for (const auto& a : node.args)
                        eval(frame, *a);
                } else {
                    static_assert(std::is_same_v<T, Stmt::Return>);
                    ReturnEx ret;
                    if (node.value)
                        ret.value = eval(frame, *node.value);
                    throw ret;
                }
            },
            stmt.node);
    }

    Wei apply_assign_op(sol::AssignOp op, Wei old_value, Wei rhs) {
        switch (op) {
        case sol::AssignOp::AddAssign: {
            const Wei sum = old_value + rhs;
            if (sum < old_value)
                revert("uint overflow");
            return sum;
        }
        case sol::AssignOp::SubAssign:
            if (rhs > old_value)
                revert("uint underflow");
            return old_value - rhs;
        default:
            return rhs;
        }
    }

    void exec_assign(Frame& frame, const Stmt::Assign& node) {
        const Value rhs = eval(frame, *node.value);

        if (const auto* ident = std::get_if<Expr::Ident>(&node.lvalue->node)) {
            if (Value* local = find_local(frame, ident->name)) {
                if (node.op == sol::AssignOp::Assign) {
                    *local = rhs;
                } else {
                    *local = Value::wei(apply_assign_op(node.op,
                        as_uint(*local, "assignment"), as_uint(rhs, "assignment")));
                }
                return;
            }
            const auto* var = frame.code->find_state_var(ident->name);
            if (!var)
                revert("assignment to undeclared variable " + ident->name);
            Value next = rhs;
            if (node.op != sol::AssignOp::Assign) {
                const Value old = storage_read(frame, ident->name, default_value(var->type));
                next = Value::wei(apply_assign_op(node.op, as_uint(old, "assignment"),
                    as_uint(rhs, "assignment")));
            }
            storage_write(frame, ident->name, std::move(next));
            return;
        }

        const auto* index = std::get_if<Expr::IndexOf>(&node.lvalue->node);
        if (!index)
            revert("unsupported assignment target");
        const auto* base = std::get_if<Expr::Ident>(&index->base->node);
        if (!base)
            revert("unsupported assignment target");
        const auto* var = frame.code->find_state_var(base->name);
        if (!var || var->type.kind != SolType::Kind::Mapping)
            revert("assignment to undeclared mapping " + base->name);
        const Address key = as_address(eval(frame, *index->key), "mapping key");
        const std::string slot = mapping_slot(base->name, key);
        Value next = rhs;
        if (node.op != sol::AssignOp::Assign) {
            const Value old = storage_read(frame, slot, Value::wei(0));
            next = Value::wei(
                apply_assign_op(node.op, as_uint(old, "assignment"), as_uint(rhs, "assignment")));
        }
        storage_write(frame, slot, std::move(next));
    }

    // --- expressions ------------------------------------------------------------

    Value eval(Frame& frame, const Expr& expr) {
        return std::visit(
            [&](const auto& node) -> Value {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Expr::NumberLit>) {
                    return Value::wei(node.value);
                } else if constexpr (std::is_same_v<T, Expr::BoolLit>) {
                    return Value::boolean(node.value);
                } else if constexpr (std::is_same_v<T, Expr::AddressLit>) {
                    return Value::address(*Address::from_hex(node.hex));
                } else if constexpr (std::is_same_v<T, Expr::StringLit>) {
                    revert("string values are not usable in expressions");
                } else if constexpr (std::is_same_v<T, Expr::Ident>) {
                    if (Value* local = find_local(frame, node.name))
                        return *local;
                    if (const auto* var = frame.code->find_state_var(node.name))
                        return storage_read(frame, node.name, default_value(var->type));
                    revert("undeclared identifier " + node.name);
                } else if constexpr (std::is_same_v<T, Expr::Member>) {
                    revert("unsupported member access ." + node.field);
                } else if constexpr (std::is_same_v<T, Expr::IndexOf>) {
                    const auto* base = std::get_if<Expr::Ident>(&node.base->node);
                    if (!base)
                        revert("unsupported indexed expression");
                    const auto* var = frame.code->find_state_var(base->name);
                    if (!var || var->type.kind != SolType::Kind::Mapping)
                        revert("index into undeclared mapping " + base->name);
                    const Address key = as_address(eval(frame, *node.key), "mapping key");
                    return storage_read(frame, mapping_slot(base->name, key), Value::wei(0));
                } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                    return eval_binary(frame, node);
                } else if constexpr (std::is_same_v<T, Expr::ExternalCall>) {
                    return eval_external_call(frame, node);
                } else if constexpr (std::is_same_v<T, Expr::Call>) {
                    return eval_call(frame, node);
                } else {
                    static_assert(std::is_same_v<T, Expr::BuiltinRef>);
                    switch (node.which) {
                    case Builtin::MsgSender:
                        return Value::address(frame.sender);
                    case Builtin::MsgValue:
                        return Value::wei(frame.msg_value);
                    case Builtin::TxOrigin:
                        return Value::address(frame.origin);
                    case Builtin::BlockNumber:
                        return Value::wei(world_.block_number);
                    case Builtin::SelfAddress:
                        return Value::address(frame.self);
                    case Builtin::SelfBalance:
                        return Value::wei(world_.balance(frame.self));
                    }
                    revert("unknown builtin");
                }
            },
            expr.node);
    }

    Value eval_binary(Frame& frame, const Expr::Binary& node) {
        using sol::BinOp;
        if (node.op == BinOp::And || node.op == BinOp::Or) {
            const bool lhs = as_bool(eval(frame, *node.lhs), "boolean operator");
            if (node.op == BinOp::And && !lhs)
                return Value::boolean(false);
            if (node.op == BinOp::Or && lhs)
                return Value::boolean(true);
            return Value::boolean(as_bool(eval(frame, *node.rhs), "boolean operator"));
        }
        const Value lv = eval(frame, *node.lhs);
        const Value rv = eval(frame, *node.rhs);
        if (node.op == BinOp::Eq || node.op == BinOp::Ne) {
            if (lv.v.index() != rv.v.index())
                revert("comparison between different value kinds");
            const bool eq = lv == rv;
            return Value::boolean(node.op == BinOp::Eq ? eq : !eq);
        }
        const Wei a = as_uint(lv, "arithmetic");
        const Wei b = as_uint(rv, "arithmetic");
        switch (node.op) {
        case BinOp::Lt:
            return Value::boolean(a < b);
        case BinOp::Gt:
            return Value::boolean(a > b);
        case BinOp::Le:
            return Value::boolean(a <= b);
        case BinOp::Ge:
            return Value::boolean(a >= b);
        case BinOp::Add: {
            const Wei sum = a + b;
            if (sum < a)
                revert("uint overflow");
            return Value::wei(sum);
        }
        case BinOp::Sub:
            if (b > a)
                revert("uint underflow");
            return Value::wei(a - b);
        case BinOp::Mul: {
            if (a != 0 && (a * b) / a != b)
                revert("uint overflow");
            return Value::wei(a * b);
        }
        case BinOp::Div:
            if (b == 0)
                revert("division by zero");
            return Value::wei(a / b);
        case BinOp::Mod:
            if (b == 0)
                revert("modulo by zero");
            return Value::wei(a % b);
        default:
            revert("unsupported operator");
        }
    }

    // transfer/send/call.value semantics. Transfer reverts the caller on
    // failure; send and call.value return false and the forwarded gas stays
    // spent.
    Value eval_external_call(Frame& frame, const Expr::ExternalCall& node) {
        const Address target = as_address(eval(frame, *node.target), "call target");
        const Wei value = as_uint(eval(frame, *node.value), "call value");

        charge(frame, costs_.call_base + (value > 0 ? costs_.value_surcharge : 0));

        const bool stipend_only =
            options_.gas_model == GasModel::Faithful && node.kind != CallKind::CallValue;
        uint64_t forwarded = 0;
        bool deducted = false;
        if (stipend_only) {
            forwarded = costs_.stipend;  // carved out of the surcharge, not the meter
        } else if (node.kind == CallKind::CallValue && node.gas) {
            const Wei requested = as_uint(eval(frame, *node.gas), "gas argument");
            forwarded = static_cast<uint64_t>(
                std::min<Wei>(requested, frame.gas));
            frame.gas -= forwarded;
            deducted = true;
        } else {
            forwarded = frame.gas > costs_.retention ? frame.gas - costs_.retention : 0;
            frame.gas -= forwarded;
            deducted = true;
        }

        trace_.push_back({TraceEvent::Kind::Call, frame.depth, frame.self, target, "", value,
            forwarded, to_string(node.kind)});

        if (world_.balance(frame.self) < value) {
            if (deducted)
                frame.gas += forwarded;  // the call never started
            if (node.kind == CallKind::Transfer)
                revert("transfer failed: insufficient balance");
            return Value::boolean(false);
        }

        std::optional<std::string> fn_name;
        std::vector<Value> args;
        if (node.payload) {
            fn_name = node.payload->fn_name;
            for (const auto& a : node.payload->args)
                args.push_back(eval(frame, *a));
        }

        const CallOutcome outcome = message_call(
            frame.self, target, value, forwarded, fn_name, args, frame.origin, frame.depth + 1);

        // Consumed gas stays spent; whatever the callee did not use flows
        // back when it was carved out of this frame's meter.
        if (deducted)
            frame.gas += outcome.gas_left;

        if (node.kind == CallKind::Transfer) {
            if (outcome.status != Status::Success)
                revert("transfer failed");
            return Value::wei(0);
        }
        return Value::boolean(outcome.status == Status::Success);
    }

    Value eval_call(Frame& frame, const Expr::Call& node) {
        if (!node.base) {
            if (const FunctionDef* fn = frame.code->find_function(node.name))
                return eval_internal_call(frame, *fn, node.args);
            // contract or address cast
            if (node.args.size() == 1)
                return Value::address(as_address(eval(frame, *node.args[0]), "cast"));
            revert("unknown function " + node.name);
        }
        // Message call through a handle: base.name(args), no value attached.
        const Address target = as_address(eval(frame, *node.base), "call target");
        charge(frame, costs_.call_base);
        const uint64_t forwarded =
            frame.gas > costs_.retention ? frame.gas - costs_.retention : 0;
        frame.gas -= forwarded;

        std::vector<Value> args;
        for (const auto& a : node.args)
            args.push_back(eval(frame, *a));

        trace_.push_back({TraceEvent::Kind::Call, frame.depth, frame.self, target, "", 0,
            forwarded, "method:" + node.name});

        const CallOutcome outcome = message_call(
            frame.self, target, 0, forwarded, node.name, args, frame.origin, frame.depth + 1);
        if (outcome.status != Status::Success) {
            // Bubble the innermost reason, Solidity-style.
            revert(outcome.reason.empty() ? "call to " + node.name + " failed"
                                          : outcome.reason);
        }
        frame.gas += outcome.gas_left;
        return Value::wei(0);
    }

    Value eval_internal_call(
        Frame& frame, const FunctionDef& fn, const std::vector<ExprPtr>& arg_exprs) {
        if (fn.params.size() != arg_exprs.size())
            revert("argument count mismatch calling " + fn.name.value_or("?"));
        if (++frame.internal_depth > 256) {
            --frame.internal_depth;
            revert("internal call depth exceeded");
        }
        std::map<std::string, Value> bound;
        for (size_t i = 0; i < fn.params.size(); ++i)
            bound[fn.params[i].name] = eval(frame, *arg_exprs[i]);

        // Internal calls share the message frame but get fresh locals.
        std::vector<std::map<std::string, Value>> saved;
        saved.swap(frame.scopes);
        frame.scopes.emplace_back(std::move(bound));

        Value result = Value::wei(0);
        try {
            exec_block(frame, fn.body);
        } catch (const ReturnEx& ret) {
            if (ret.value)
                result = *ret.value;
        } catch (...) {
            frame.scopes = std::move(saved);
            --frame.internal_depth;
            throw;
        }
        frame.scopes = std::move(saved);
        --frame.internal_depth;
        return result;
    }
};

}  // namespace

Simulator::Simulator(WorldState world, SimOptions options)
    : world_(std::move(world)), options_(options) {}

Simulator Simulator::fork() const {
    return Simulator(world_.clone(), options_);
}

ExecutionResult Simulator::deploy(const Address& deployer,
    std::shared_ptr<const sol::SourceUnit> unit, const std::string& contract,
    std::vector<Value> ctor_args, Wei value, uint64_t gas_limit) {
    ExecutionResult result;
    Engine engine(world_, options_, result.trace);

    const uint64_t gas = gas_limit == 0 ? options_.tx_gas_limit : gas_limit;
    const ContractDef* code = unit ? unit->find_contract(contract) : nullptr;

    Engine::CallOutcome outcome;
    if (!world_.exists(deployer)) {
        outcome = {Status::Reverted, "unknown sender", 0};
    } else if (gas > options_.tx_gas_limit) {
        outcome = {Status::Reverted, "gas limit exceeds the genesis cap", 0};
    } else if (!code) {
        outcome = {Status::Reverted, "unknown contract " + contract, 0};
    } else {
        const uint64_t nonce = world_.nonce(deployer);
        const Address at = Address::derive(deployer, nonce);
        world_.bump_nonce(deployer);
        if (world_.exists(at)) {
            outcome = {Status::Reverted, "address collision", 0};
        } else {
            outcome = engine.create_contract(deployer, at, std::move(unit), *code,
                ctor_args, value, gas);
            if (outcome.status == Status::Success)
                result.created = at;
        }
    }

    result.status = outcome.status;
    result.reason = outcome.reason;
    result.gas_used = gas - outcome.gas_left;
    ++world_.block_number;
    world_.flatten();
    receipts_.push_back({world_.block_number, result.status, result.gas_used});
    return result;
}

ExecutionResult Simulator::send_transaction(const Transaction& tx) {
    ExecutionResult result;
    Engine engine(world_, options_, result.trace);

    const uint64_t gas = tx.gas_limit == 0 ? options_.tx_gas_limit : tx.gas_limit;

    Engine::CallOutcome outcome;
    if (!world_.exists(tx.from)) {
        outcome = {Status::Reverted, "unknown sender", 0};
    } else if (gas > options_.tx_gas_limit) {
        outcome = {Status::Reverted, "gas limit exceeds the genesis cap", 0};
    } else {
        world_.bump_nonce(tx.from);
        outcome = engine.message_call(
            tx.from, tx.to, tx.value, gas, tx.call_fn, tx.call_args, tx.from, 1);
    }

    result.status = outcome.status;
    result.reason = outcome.reason;
    result.gas_used = gas - outcome.gas_left;
    ++world_.block_number;
    world_.flatten();
    receipts_.push_back({world_.block_number, result.status, result.gas_used});
    return result;
}

}  // namespace reaudit::sim
