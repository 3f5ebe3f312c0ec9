// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

#include "reaudit/ast.hpp"

namespace reaudit::sol {

class FrontendError : public std::runtime_error {
public:
    explicit FrontendError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public FrontendError {
public:
    ParseError(SourcePos pos, std::string expected, std::string found)
        : FrontendError("parse error at " + std::to_string(pos.line) + ":" +
                        std::to_string(pos.column) + ": expected " + expected + ", found " +
                        found),
          pos(pos),
          expected(std::move(expected)),
          found(std::move(found)) {}

    SourcePos pos;
    std::string expected;
    std::string found;
};

class UnsupportedConstruct : public FrontendError {
public:
    UnsupportedConstruct(SourcePos pos, std::string construct)
        : FrontendError("unsupported construct at " + std::to_string(pos.line) + ":" +
                        std::to_string(pos.column) + ": " + construct),
          pos(pos),
          construct(std::move(construct)) {}

    SourcePos pos;
    std::string construct;
};

class UnsupportedVersion : public FrontendError {
public:
    explicit UnsupportedVersion(std::string range)
        : FrontendError("unsupported solidity version: pragma \"" + range +
                        "\" does not intersect the supported range [0.4.22, 0.6.0)"),
          range(std::move(range)) {}

    std::string range;
};

class UnknownContract : public FrontendError {
public:
    explicit UnknownContract(const std::string& name)
        : FrontendError("unknown contract: " + name) {}
};

}  // namespace reaudit::sol
