// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "reaudit/ast.hpp"
#include "reaudit/sim/types.hpp"

namespace reaudit::sim {

class StaleToken : public std::runtime_error {
public:
    StaleToken() : std::runtime_error("snapshot token released out of order") {}
};

struct Account {
    Wei balance = 0;
    uint64_t nonce = 0;
    std::map<std::string, Value> storage;
    std::shared_ptr<const sol::SourceUnit> code_unit;  // keeps the AST alive
    const sol::ContractDef* code = nullptr;            // null for plain accounts

    bool has_code() const { return code != nullptr; }
    bool operator==(const Account& other) const {
        return balance == other.balance && nonce == other.nonce && storage == other.storage &&
               code == other.code;
    }
};

// The simulated ledger. Mutations go through the journaled methods so that
// nested snapshots can unwind them; snapshots follow stack discipline.
class WorldState {
public:
    struct Snapshot {
        size_t journal_index = 0;
        uint64_t serial = 0;
    };

    std::map<Address, Account> accounts;
    uint64_t block_number = 0;

    bool exists(const Address& addr) const { return accounts.count(addr) != 0; }
    const Account* find(const Address& addr) const;
    Wei balance(const Address& addr) const;
    uint64_t nonce(const Address& addr) const;
    Value storage_at(const Address& addr, const std::string& key, Value fallback) const;

    // Journaled mutations.
    void create_account(const Address& addr);
    void set_code(const Address& addr, std::shared_ptr<const sol::SourceUnit> unit,
        const sol::ContractDef* code);
    void add_balance(const Address& addr, Wei amount);
    void sub_balance(const Address& addr, Wei amount);  // caller checks sufficiency
    void bump_nonce(const Address& addr);
    void set_storage(const Address& addr, const std::string& key, Value value);

    Snapshot snapshot();
    void revert_to(const Snapshot& token);  // undoes all changes since the token
    void commit(const Snapshot& token);     // keeps changes, releases the token
    void flatten();                         // drops the journal once no snapshot is live

    Wei total_supply() const;

    // Deep copy with no live snapshots; used for control runs.
    WorldState clone() const;

    bool operator==(const WorldState& other) const {
        return accounts == other.accounts && block_number == other.block_number;
    }

private:
    struct BalanceChange {
        Address addr;
        Wei old_balance;
    };
    struct NonceChange {
        Address addr;
        uint64_t old_nonce;
    };
    struct StorageChange {
        Address addr;
        std::string key;
        std::optional<Value> old_value;
    };
    struct AccountCreated {
        Address addr;
    };
    using JournalEntry =
        std::variant<BalanceChange, NonceChange, StorageChange, AccountCreated>;

    std::vector<JournalEntry> journal_;
    std::vector<Snapshot> active_;
    uint64_t next_serial_ = 1;

    void undo(const JournalEntry& entry);
};

}  // namespace reaudit::sim
