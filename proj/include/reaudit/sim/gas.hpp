// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace reaudit::sim {

// Faithful: transfer/send forward exactly the 2300 stipend, too little for a
// storage write. Paper: they forward the remaining gas like call.value, so a
// fallback can re-enter through transfer() and send() as well.
enum class GasModel { Faithful, Paper };

const char* to_string(GasModel model);

// Minimal cost table. Only the relative sizes matter: the stipend covers
// statements and reads but never a storage write.
struct GasCosts {
    uint64_t statement = 10;
    uint64_t storage_read = 200;
    uint64_t storage_write = 5000;
    uint64_t call_base = 700;
    uint64_t value_surcharge = 9000;  // stipend is carved out of this
    uint64_t stipend = 2300;
    uint64_t retention = 2300;  // held back when forwarding "all remaining"
    int max_call_depth = 1024;
};

inline const char* to_string(GasModel model) {
    return model == GasModel::Faithful ? "faithful" : "paper";
}

}  // namespace reaudit::sim
