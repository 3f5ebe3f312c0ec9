// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "reaudit/sim/types.hpp"

namespace reaudit::sim {

// Append-only execution log. Events survive reverts; the exit status of the
// enclosing frame tells the reader whether the recorded effects stuck.
struct TraceEvent {
    enum class Kind { Enter, Exit, Call, StateWrite, ValueMove };

    Kind kind = Kind::Enter;
    int depth = 0;
    Address from;       // Enter, Call, ValueMove
    Address to;         // Enter, Call, ValueMove, StateWrite
    std::string fn;     // Enter: dispatched function ("" = fallback)
    Wei value = 0;      // Enter, Call, ValueMove
    uint64_t gas = 0;   // Enter: forwarded; Exit: used
    std::string note;   // Exit: status; Call: builtin kind; StateWrite: slot=value
};

// One event per line, stable field order.
std::string render_line(const TraceEvent& event);
std::string render(const std::vector<TraceEvent>& trace);

// Highest number of simultaneously open frames dispatching `fn` on `callee`.
int max_overlapping_frames(
    const std::vector<TraceEvent>& trace, const Address& callee, const std::string& fn);

bool has_out_of_gas_frame(const std::vector<TraceEvent>& trace);

}  // namespace reaudit::sim
