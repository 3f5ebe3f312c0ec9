// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

#include "reaudit/ast.hpp"
#include "reaudit/errors.hpp"

namespace reaudit::sol {

// Parses a source unit of the supported Solidity subset: pragma, imports,
// contracts with state variables (uint, bool, address [payable],
// mapping(address => uint), contract handles), constructors (modern and
// legacy named spelling), one fallback, require/if/assignment/return/emit
// statements, the transfer/send/call.value ether built-ins, and the
// msg.sender / msg.value / tx.origin / block.number / address(this)
// globals.
//
// Anything recognizable but outside the subset raises UnsupportedConstruct;
// pragmas that do not intersect [0.4.22, 0.6.0) raise UnsupportedVersion.
SourceUnit parse(std::string_view source);

// True when the pragma range intersects the supported window. Exposed for
// diagnostics and tests; parse() enforces it.
bool version_supported(const std::string& range_text);

}  // namespace reaudit::sol
