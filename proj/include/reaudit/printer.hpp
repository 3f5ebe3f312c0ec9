// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "reaudit/ast.hpp"

namespace reaudit::sol {

// Renders a source unit back to subset source text. Re-parsing the output
// yields a structurally identical AST.
std::string render(const SourceUnit& unit);

std::string render(const Expr& expr);
std::string render_type(const SolType& type);

}  // namespace reaudit::sol
