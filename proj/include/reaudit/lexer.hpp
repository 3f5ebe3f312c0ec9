// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reaudit/ast.hpp"
#include "reaudit/errors.hpp"

namespace reaudit::sol {

struct Token {
    enum class Kind { Ident, Number, String, Punct, End };
    Kind kind = Kind::End;
    std::string text;  // identifier/number spelling, string contents, or punctuation
    SourcePos pos;
    size_t offset = 0;  // byte offset into the source, for raw slicing

    bool is(Kind k, std::string_view t) const { return kind == k && text == t; }
    bool is_punct(std::string_view t) const { return is(Kind::Punct, t); }
    bool is_ident(std::string_view t) const { return is(Kind::Ident, t); }
};

// Tokenizes the whole input. Comments (// and /* */) are skipped.
// Throws ParseError on malformed input (unterminated string/comment,
// unknown character).
std::vector<Token> tokenize(std::string_view source);

}  // namespace reaudit::sol
