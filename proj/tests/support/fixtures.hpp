// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "reaudit/parser.hpp"

namespace reaudit::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(REAUDIT_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in)
        throw std::runtime_error("missing fixture: " + name);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

inline sol::SourceUnit parse_fixture(const std::string& name) {
    return sol::parse(read_fixture(name));
}

}  // namespace reaudit::test
