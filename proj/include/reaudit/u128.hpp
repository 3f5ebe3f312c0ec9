// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace reaudit {

// Wei amounts exceed 64 bits (genesis allocations go up to 1e29), so balances
// and uint values are carried in an unsigned 128-bit integer.
using u128 = unsigned __int128;

inline std::string u128_to_string(u128 value) {
    if (value == 0)
        return "0";
    std::string out;
    while (value != 0) {
        out.push_back(static_cast<char>('0' + static_cast<unsigned>(value % 10)));
        value /= 10;
    }
    return {out.rbegin(), out.rend()};
}

inline std::string u128_to_hex(u128 value) {
    static constexpr char digits[] = "0123456789abcdef";
    if (value == 0)
        return "0x0";
    std::string out;
    while (value != 0) {
        out.push_back(digits[static_cast<unsigned>(value & 0xf)]);
        value >>= 4;
    }
    out += "x0";
    return {out.rbegin(), out.rend()};
}

// Parses a decimal or (with 0x prefix) hexadecimal unsigned integer.
// Returns nullopt on empty input, stray characters, or overflow.
inline std::optional<u128> u128_from_string(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    u128 value = 0;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        for (char c : text.substr(2)) {
            unsigned digit;
            if (c >= '0' && c <= '9')
                digit = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f')
                digit = static_cast<unsigned>(c - 'a') + 10;
            else if (c >= 'A' && c <= 'F')
                digit = static_cast<unsigned>(c - 'A') + 10;
            else
                return std::nullopt;
            if (value >> 124)
                return std::nullopt;
            value = (value << 4) | digit;
        }
        return value;
    }
    constexpr u128 max = ~static_cast<u128>(0);
    for (char c : text) {
        if (c < '0' || c > '9')
            return std::nullopt;
        const unsigned digit = static_cast<unsigned>(c - '0');
        if (value > (max - digit) / 10)
            return std::nullopt;
        value = value * 10 + digit;
    }
    return value;
}

}  // namespace reaudit
