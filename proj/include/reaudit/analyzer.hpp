// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "reaudit/ast.hpp"

namespace reaudit::analysis {

struct GasForwarded {
    enum class Kind { Stipend2300, Custom, AllRemaining };
    Kind kind = Kind::Stipend2300;
    u128 amount = 0;  // Custom with a literal .gas() argument

    bool operator==(const GasForwarded&) const = default;
};

// One transfer()/send()/call.value() occurrence.
struct ExternalCallSite {
    std::string contract;
    std::string function;  // "constructor" for constructors, "" for fallback
    int stmt_index = -1;
    sol::CallKind kind = sol::CallKind::Transfer;
    GasForwarded gas;
};

struct StateWriteSite {
    std::string contract;
    std::string function;
    int stmt_index = -1;
    std::string target_var;  // mapping writes record the base name
};

enum class Pattern { SingleFunction, CrossFunction };

const char* to_string(Pattern p);

struct VulnCandidate {
    std::string contract;
    std::string function;
    ExternalCallSite call_site;
    std::vector<StateWriteSite> writes_after;  // SingleFunction
    Pattern pattern = Pattern::SingleFunction;
    std::vector<std::string> cross_peers;  // CrossFunction: public/external writers
    std::vector<std::string> shared_vars;  // CrossFunction: stale state read pre-call
    bool in_constructor = false;
    std::string signature;  // "Contract.function(type1,type2,...)"
};

// Every ExternalCall AST node yields exactly one site. Transfer/Send carry
// the 2300 stipend; call.value carries the .gas() argument when present and
// all remaining gas otherwise.
std::vector<ExternalCallSite> find_external_calls(const sol::SourceUnit& unit);

// Flags external calls followed by persistent state writes.
//
// SingleFunction: any write in the same function whose pre-order statement
// index exceeds the call's (branch-insensitive over-approximation).
// CrossFunction: a state variable read at or before the call, still unwritten
// by the function itself at that point, that a different public/external
// function writes.
std::vector<VulnCandidate> find_candidates(const sol::SourceUnit& unit);

// One line per distinct signature, sorted, LF-terminated.
std::string emit_signatures(const std::vector<VulnCandidate>& candidates);

}  // namespace reaudit::analysis
