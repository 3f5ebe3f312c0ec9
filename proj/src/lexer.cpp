// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reaudit/lexer.hpp"

#include <cctype>

namespace reaudit::sol {

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_char(char c) {
    return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

// Multi-character punctuation, longest first.
constexpr std::string_view kPunct2[] = {
    "=>", "+=", "-=", "==", "!=", "<=", ">=", "&&", "||",
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
    std::vector<Token> tokens;
    size_t i = 0;
    int line = 1;
    int column = 1;

    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (source[i + k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        i += n;
    };

    while (i < source.size()) {
        const char c = source[i];
        const SourcePos pos{line, column};

        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
            while (i < source.size() && source[i] != '\n')
                advance(1);
            continue;
        }
        if (c == '/' && i + 1 < source.size() && source[i + 1] == '*') {
            advance(2);
            bool closed = false;
            while (i + 1 < source.size()) {
                if (source[i] == '*' && source[i + 1] == '/') {
                    advance(2);
                    closed = true;
                    break;
                }
                advance(1);
            }
            if (!closed)
                throw ParseError(pos, "closing */", "end of input");
            continue;
        }
        if (is_ident_start(c)) {
            size_t start = i;
            while (i < source.size() && is_ident_char(source[i]))
                advance(1);
            tokens.push_back(
                {Token::Kind::Ident, std::string(source.substr(start, i - start)), pos, start});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i;
            if (c == '0' && i + 1 < source.size() && (source[i + 1] == 'x' || source[i + 1] == 'X')) {
                advance(2);
                while (i < source.size() && std::isxdigit(static_cast<unsigned char>(source[i])))
                    advance(1);
            } else {
                while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i])))
                    advance(1);
            }
            tokens.push_back(
                {Token::Kind::Number, std::string(source.substr(start, i - start)), pos, start});
            continue;
        }
        if (c == '"') {
            size_t start = i;
            advance(1);
            std::string value;
            bool closed = false;
            while (i < source.size()) {
                if (source[i] == '"') {
                    advance(1);
                    closed = true;
                    break;
                }
                if (source[i] == '\n')
                    break;
                if (source[i] == '\\' && i + 1 < source.size()) {
                    value.push_back(source[i + 1]);
                    advance(2);
                    continue;
                }
                value.push_back(source[i]);
                advance(1);
            }
            if (!closed)
                throw ParseError(pos, "closing \"", "end of line or input");
            tokens.push_back({Token::Kind::String, std::move(value), pos, start});
            continue;
        }

        bool matched = false;
        for (std::string_view p : kPunct2) {
            if (source.substr(i, 2) == p) {
                tokens.push_back({Token::Kind::Punct, std::string(p), pos, i});
                advance(2);
                matched = true;
                break;
            }
        }
        if (matched)
            continue;

        static constexpr std::string_view kPunct1 = "{}()[];,.=+-*/%<>!^~&|";
        if (kPunct1.find(c) != std::string_view::npos) {
            tokens.push_back({Token::Kind::Punct, std::string(1, c), pos, i});
            advance(1);
            continue;
        }
        throw ParseError(pos, "a token", "character '" + std::string(1, c) + "'");
    }

    tokens.push_back({Token::Kind::End, "", {line, column}, source.size()});
    return tokens;
}

}  // namespace reaudit::sol
