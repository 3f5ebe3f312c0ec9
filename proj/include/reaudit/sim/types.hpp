// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "reaudit/u128.hpp"

namespace reaudit::sim {

// Balances and uint values; never negative, arithmetic checked by the
// interpreter.
using Wei = u128;

struct Address {
    std::array<uint8_t, 20> bytes{};

    auto operator<=>(const Address&) const = default;

    bool is_zero() const;
    std::string hex() const;  // 0x + 40 lowercase hex digits

    static std::optional<Address> from_hex(std::string_view text);
    // Deterministic contract address: mixes deployer bytes and nonce through
    // a splitmix64 stream.
    static Address derive(const Address& deployer, uint64_t nonce);
};

// A runtime value: uint, bool, or address. Storage slots and locals hold
// these; missing mapping entries read as zero of the expected type.
struct Value {
    std::variant<Wei, bool, Address> v = Wei{0};

    static Value wei(Wei w) { return {w}; }
    static Value boolean(bool b) { return {b}; }
    static Value address(Address a) { return {a}; }

    bool operator==(const Value&) const = default;

    bool is_uint() const { return std::holds_alternative<Wei>(v); }
    bool is_bool() const { return std::holds_alternative<bool>(v); }
    bool is_address() const { return std::holds_alternative<Address>(v); }

    std::string to_string() const;
};

}  // namespace reaudit::sim
