// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reaudit/analyzer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace reaudit::analysis {

using sol::Block;
using sol::ContractDef;
using sol::Expr;
using sol::FunctionDef;
using sol::SourceUnit;
using sol::Stmt;

namespace {

struct CallRef {
    int stmt_index;
    const Expr::ExternalCall* node;
};

struct VarAccess {
    int stmt_index;
    std::string var;
};

// Per-function facts gathered in one walk.
struct FnFacts {
    std::vector<CallRef> calls;
    std::vector<VarAccess> writes;
    std::vector<VarAccess> reads;
};

class Collector {
public:
    explicit Collector(const ContractDef& contract) : contract_(contract) {}

    FnFacts run(const FunctionDef& fn) {
        facts_ = {};
        walk_block(fn.body);
        return std::move(facts_);
    }

private:
    const ContractDef& contract_;
    FnFacts facts_;

    bool is_state_var(const std::string& name) const {
        return contract_.find_state_var(name) != nullptr;
    }

    void note_read(int index, const Expr& e) {
        if (const auto* ident = std::get_if<Expr::Ident>(&e.node)) {
            if (is_state_var(ident->name))
                facts_.reads.push_back({index, ident->name});
        }
    }

    void walk_expr(int index, const Expr& e) {
        note_read(index, e);
        std::visit(
            [&](const auto& node) {
                using T = std::decay_t<decltype(node)>;
                if constexpr (std::is_same_v<T, Expr::Member>) {
                    walk_expr(index, *node.base);
                } else if constexpr (std::is_same_v<T, Expr::IndexOf>) {
                    walk_expr(index, *node.base);
                    walk_expr(index, *node.key);
                } else if constexpr (std::is_same_v<T, Expr::Binary>) {
                    walk_expr(index, *node.lhs);
                    walk_expr(index, *node.rhs);
                } else if constexpr (std::is_same_v<T, Expr::ExternalCall>) {
                    facts_.calls.push_back({index, &node});
                    walk_expr(index, *node.target);
                    walk_expr(index, *node.value);
                    if (node.gas)
                        walk_expr(index, *node.gas);
                    if (node.payload)
                        for (const auto& a : node.payload->args)
                            walk_expr(index, *a);
                } else if constexpr (std::is_same_v<T, Expr::Call>) {
                    if (node.base)
                        walk_expr(index, *node.base);
                    for (const auto& a : node.args)
                        walk_expr(index, *a);
                }
            },
            e.node);
    }

    void walk_block(const Block& block) {
        for (const Stmt& stmt : block) {
            std::visit(
                [&](const auto& node) {
                    using T = std::decay_t<decltype(node)>;
                    if constexpr (std::is_same_v<T, Stmt::VarDecl>) {
                        if (node.init)
                            walk_expr(stmt.index, *node.init);
                    } else if constexpr (std::is_same_v<T, Stmt::Assign>) {
                        const Expr* lv = node.lvalue.get();
                        if (const auto* idx = std::get_if<Expr::IndexOf>(&lv->node)) {
                            walk_expr(stmt.index, *idx->key);
                            lv = idx->base.get();
                        }
                        if (const auto* ident = std::get_if<Expr::Ident>(&lv->node)) {
                            if (is_state_var(ident->name))
                                facts_.writes.push_back({stmt.index, ident->name});
                        }
                        // Compound assignment reads the target as well.
                        if (node.op != sol::AssignOp::Assign)
                            walk_expr(stmt.index, *node.lvalue);
                        walk_expr(stmt.index, *node.value);
                    } else if constexpr (std::is_same_v<T, Stmt::Require>) {
                        walk_expr(stmt.index, *node.cond);
                    } else if constexpr (std::is_same_v<T, Stmt::If>) {
                        walk_expr(stmt.index, *node.cond);
                        walk_block(node.then_block);
                        if (node.else_block)
                            walk_block(*node.else_block);
                    } else if constexpr (std::is_same_v<T, Stmt::ExprStmt>) {
                        walk_expr(stmt.index, *node.expr);
                    } else if constexpr (std::is_same_v<T, Stmt::Emit>) {
                        for (const auto& a : node.args)
                            walk_expr(stmt.index, *a);
                    } else {
                        static_assert(std::is_same_v<T, Stmt::Return>);
                        if (node.value)
                            walk_expr(stmt.index, *node.value);
                    }
                },
                stmt.node);
        }
    }
};

GasForwarded classify_gas(const Expr::ExternalCall& call) {
    if (call.kind != sol::CallKind::CallValue)
        return {GasForwarded::Kind::Stipend2300, 2300};
    if (!call.gas)
        return {GasForwarded::Kind::AllRemaining, 0};
    GasForwarded g{GasForwarded::Kind::Custom, 0};
    if (const auto* lit = std::get_if<Expr::NumberLit>(&call.gas->node))
        g.amount = lit->value;
    return g;
}

struct HostFunction {
    const FunctionDef* fn;
    std::string display_name;  // "constructor" / "" for fallback
    bool is_ctor;
};

std::vector<HostFunction> host_functions(const ContractDef& contract) {
    std::vector<HostFunction> hosts;
    if (contract.ctor)
        hosts.push_back({&*contract.ctor, "constructor", true});
    for (const auto& fn : contract.functions)
        hosts.push_back({&fn, *fn.name, false});
    if (contract.fallback)
        hosts.push_back({&*contract.fallback, "", false});
    return hosts;
}

std::string signature_of(const ContractDef& contract, const HostFunction& host) {
    std::string sig = contract.name + ".";
    if (host.is_ctor)
        sig += "constructor";
    else if (host.display_name.empty())
        sig += "fallback";
    else
        sig += host.display_name;
    sig += "(";
    for (size_t i = 0; i < host.fn->params.size(); ++i) {
        if (i)
            sig += ",";
        sig += sol::abi_type_name(host.fn->params[i].type);
    }
    sig += ")";
    return sig;
}

}  // namespace

const char* to_string(Pattern p) {
    return p == Pattern::SingleFunction ? "single-function" : "cross-function";
}

std::vector<ExternalCallSite> find_external_calls(const SourceUnit& unit) {
    std::vector<ExternalCallSite> sites;
    for (const auto& contract : unit.contracts) {
        Collector collector(contract);
        for (const auto& host : host_functions(contract)) {
            const FnFacts facts = collector.run(*host.fn);
            for (const auto& call : facts.calls) {
                sites.push_back({contract.name, host.display_name, call.stmt_index,
                    call.node->kind, classify_gas(*call.node)});
            }
        }
    }
    return sites;
}

std::vector<VulnCandidate> find_candidates(const SourceUnit& unit) {
    std::vector<VulnCandidate> candidates;
    for (const auto& contract : unit.contracts) {
        Collector collector(contract);
        const auto hosts = host_functions(contract);

        // State variables written per named public/external function, for the
        // cross-function rule.
        std::map<std::string, std::set<std::string>> writers;  // var -> functions
        for (const auto& host : hosts) {
            if (host.is_ctor || host.display_name.empty())
                continue;
            if (host.fn->visibility != sol::Visibility::Public &&
                host.fn->visibility != sol::Visibility::External)
                continue;
            for (const auto& w : collector.run(*host.fn).writes)
                writers[w.var].insert(host.display_name);
        }

        for (const auto& host : hosts) {
            const FnFacts facts = collector.run(*host.fn);
            for (const auto& call : facts.calls) {
                ExternalCallSite site{contract.name, host.display_name, call.stmt_index,
                    call.node->kind, classify_gas(*call.node)};

                VulnCandidate base;
                base.contract = contract.name;
                base.function = host.is_ctor ? "constructor" : host.display_name;
                base.call_site = site;
                base.in_constructor = host.is_ctor;
                base.signature = signature_of(contract, host);

                // Single-function: any later write on any syntactic path.
                std::vector<StateWriteSite> after;
                for (const auto& w : facts.writes) {
                    if (w.stmt_index > call.stmt_index)
                        after.push_back(
                            {contract.name, base.function, w.stmt_index, w.var});
                }
                if (!after.empty()) {
                    VulnCandidate c = base;
                    c.pattern = Pattern::SingleFunction;
                    c.writes_after = std::move(after);
                    candidates.push_back(std::move(c));
                }

                // Cross-function: a variable read at or before the call and
                // still unwritten by this function is stale while control is
                // handed out; a public peer writing it can race the caller.
                std::set<std::string> stale;
                for (const auto& r : facts.reads) {
                    if (r.stmt_index > call.stmt_index)
                        continue;
                    bool settled = false;
                    for (const auto& w : facts.writes) {
                        if (w.var == r.var && w.stmt_index <= call.stmt_index) {
                            settled = true;
                            break;
                        }
                    }
                    if (!settled)
                        stale.insert(r.var);
                }
                std::set<std::string> peers;
                std::set<std::string> shared;
                for (const auto& var : stale) {
                    auto it = writers.find(var);
                    if (it == writers.end())
                        continue;
                    for (const auto& peer : it->second) {
                        if (peer != host.display_name) {
                            peers.insert(peer);
                            shared.insert(var);
                        }
                    }
                }
                if (!peers.empty()) {
                    VulnCandidate c = base;
                    c.pattern = Pattern::CrossFunction;
                    c.cross_peers.assign(peers.begin(), peers.end());
                    c.shared_vars.assign(shared.begin(), shared.end());
                    candidates.push_back(std::move(c));
                }
            }
        }
    }
    return candidates;
}

std::string emit_signatures(const std::vector<VulnCandidate>& candidates) {
    std::set<std::string> lines;
    for (const auto& c : candidates)
        lines.insert(c.signature);
    std::string out;
    for (const auto& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace reaudit::analysis
