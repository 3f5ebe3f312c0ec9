// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reaudit/sim/world.hpp"

#include <algorithm>
#include <cassert>

namespace reaudit::sim {

namespace {

// splitmix64; the usual finalizer constants.
uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

bool Address::is_zero() const {
    return std::all_of(bytes.begin(), bytes.end(), [](uint8_t b) { return b == 0; });
}

std::string Address::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out = "0x";
    for (uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

std::optional<Address> Address::from_hex(std::string_view text) {
    if (text.size() == 42 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'))
        text = text.substr(2);
    if (text.size() != 40)
        return std::nullopt;
    Address addr;
    for (size_t i = 0; i < 20; ++i) {
        auto nibble = [](char c) -> int {
            if (c >= '0' && c <= '9')
                return c - '0';
            if (c >= 'a' && c <= 'f')
                return c - 'a' + 10;
            if (c >= 'A' && c <= 'F')
                return c - 'A' + 10;
            return -1;
        };
        const int hi = nibble(text[2 * i]);
        const int lo = nibble(text[2 * i + 1]);
        if (hi < 0 || lo < 0)
            return std::nullopt;
        addr.bytes[i] = static_cast<uint8_t>((hi << 4) | lo);
    }
    return addr;
}

Address Address::derive(const Address& deployer, uint64_t nonce) {
    uint64_t seed = nonce;
    for (size_t i = 0; i < 20; i += 8) {
        uint64_t chunk = 0;
        for (size_t k = 0; k < 8 && i + k < 20; ++k)
            chunk = (chunk << 8) | deployer.bytes[i + k];
        seed = mix64(seed ^ chunk);
    }
    Address out;
    uint64_t stream = seed;
    for (size_t i = 0; i < 20; ++i) {
        if (i % 8 == 0)
            stream = mix64(stream);
        out.bytes[i] = static_cast<uint8_t>(stream >> ((i % 8) * 8));
    }
    return out;
}

std::string Value::to_string() const {
    if (const auto* w = std::get_if<Wei>(&v))
        return u128_to_string(*w);
    if (const auto* b = std::get_if<bool>(&v))
        return *b ? "true" : "false";
    return std::get<Address>(v).hex();
}

const Account* WorldState::find(const Address& addr) const {
    auto it = accounts.find(addr);
    return it == accounts.end() ? nullptr : &it->second;
}

Wei WorldState::balance(const Address& addr) const {
    const Account* a = find(addr);
    return a ? a->balance : 0;
}

uint64_t WorldState::nonce(const Address& addr) const {
    const Account* a = find(addr);
    return a ? a->nonce : 0;
}

Value WorldState::storage_at(const Address& addr, const std::string& key, Value fallback) const {
    const Account* a = find(addr);
    if (!a)
        return fallback;
    auto it = a->storage.find(key);
    return it == a->storage.end() ? fallback : it->second;
}

void WorldState::create_account(const Address& addr) {
    if (accounts.count(addr))
        return;
    accounts[addr] = Account{};
    journal_.push_back(AccountCreated{addr});
}

void WorldState::set_code(const Address& addr, std::shared_ptr<const sol::SourceUnit> unit,
    const sol::ContractDef* code) {
    // Code assignment is only ever applied to accounts created in the same
    // frame, so the AccountCreated entry covers the undo.
    Account& a = accounts.at(addr);
    a.code_unit = std::move(unit);
    a.code = code;
}

void WorldState::add_balance(const Address& addr, Wei amount) {
    create_account(addr);
    Account& a = accounts.at(addr);
    journal_.push_back(BalanceChange{addr, a.balance});
    a.balance += amount;
}

void WorldState::sub_balance(const Address& addr, Wei amount) {
    Account& a = accounts.at(addr);
    assert(a.balance >= amount);
    journal_.push_back(BalanceChange{addr, a.balance});
    a.balance -= amount;
}

void WorldState::bump_nonce(const Address& addr) {
    create_account(addr);
    Account& a = accounts.at(addr);
    journal_.push_back(NonceChange{addr, a.nonce});
    ++a.nonce;
}

void WorldState::set_storage(const Address& addr, const std::string& key, Value value) {
    Account& a = accounts.at(addr);
    std::optional<Value> old;
    auto it = a.storage.find(key);
    if (it != a.storage.end())
        old = it->second;
    journal_.push_back(StorageChange{addr, key, std::move(old)});
    a.storage[key] = std::move(value);
}

WorldState::Snapshot WorldState::snapshot() {
    Snapshot token{journal_.size(), next_serial_++};
    active_.push_back(token);
    return token;
}

void WorldState::undo(const JournalEntry& entry) {
    std::visit(
        [&](const auto& e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, BalanceChange>) {
                accounts.at(e.addr).balance = e.old_balance;
            } else if constexpr (std::is_same_v<T, NonceChange>) {
                accounts.at(e.addr).nonce = e.old_nonce;
            } else if constexpr (std::is_same_v<T, StorageChange>) {
                Account& a = accounts.at(e.addr);
                if (e.old_value)
                    a.storage[e.key] = *e.old_value;
                else
                    a.storage.erase(e.key);
            } else {
                static_assert(std::is_same_v<T, AccountCreated>);
                accounts.erase(e.addr);
            }
        },
        entry);
}

void WorldState::revert_to(const Snapshot& token) {
    auto it = std::find_if(active_.begin(), active_.end(),
        [&](const Snapshot& s) { return s.serial == token.serial; });
    if (it == active_.end())
        throw StaleToken();
    while (journal_.size() > token.journal_index) {
        undo(journal_.back());
        journal_.pop_back();
    }
    active_.erase(it, active_.end());
}

void WorldState::commit(const Snapshot& token) {
    auto it = std::find_if(active_.begin(), active_.end(),
        [&](const Snapshot& s) { return s.serial == token.serial; });
    if (it == active_.end())
        throw StaleToken();
    active_.erase(it, active_.end());
}

void WorldState::flatten() {
    if (active_.empty())
        journal_.clear();
}

Wei WorldState::total_supply() const {
    Wei sum = 0;
    for (const auto& [addr, account] : accounts)
        sum += account.balance;
    return sum;
}

WorldState WorldState::clone() const {
    WorldState copy;
    copy.accounts = accounts;
    copy.block_number = block_number;
    return copy;
}

}  // namespace reaudit::sim
