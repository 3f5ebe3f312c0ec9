// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reaudit/sim/trace.hpp"

#include <algorithm>
#include <sstream>

namespace reaudit::sim {

std::string render_line(const TraceEvent& e) {
    std::ostringstream out;
    switch (e.kind) {
    case TraceEvent::Kind::Enter:
        out << "enter depth=" << e.depth << " from=" << e.from.hex() << " to=" << e.to.hex()
            << " fn=" << (e.fn.empty() ? "<fallback>" : e.fn)
            << " value=" << u128_to_string(e.value) << " gas=" << e.gas;
        break;
    case TraceEvent::Kind::Exit:
        out << "exit depth=" << e.depth << " status=" << e.note << " gasUsed=" << e.gas;
        break;
    case TraceEvent::Kind::Call:
        out << "call depth=" << e.depth << " kind=" << e.note << " from=" << e.from.hex()
            << " to=" << e.to.hex() << " value=" << u128_to_string(e.value) << " gas=" << e.gas;
        break;
    case TraceEvent::Kind::StateWrite:
        out << "write depth=" << e.depth << " account=" << e.to.hex() << " " << e.note;
        break;
    case TraceEvent::Kind::ValueMove:
        out << "move from=" << e.from.hex() << " to=" << e.to.hex()
            << " value=" << u128_to_string(e.value);
        break;
    }
    return out.str();
}

std::string render(const std::vector<TraceEvent>& trace) {
    std::string out;
    for (const auto& e : trace) {
        out += render_line(e);
        out += '\n';
    }
    return out;
}

int max_overlapping_frames(
    const std::vector<TraceEvent>& trace, const Address& callee, const std::string& fn) {
    int open = 0;
    int max_open = 0;
    // Exits carry no callee, so track the depths of open matching frames.
    std::vector<int> open_depths;
    for (const auto& e : trace) {
        if (e.kind == TraceEvent::Kind::Enter && e.to == callee && e.fn == fn) {
            open_depths.push_back(e.depth);
            open = static_cast<int>(open_depths.size());
            max_open = std::max(max_open, open);
        } else if (e.kind == TraceEvent::Kind::Exit && !open_depths.empty() &&
                   open_depths.back() == e.depth) {
            open_depths.pop_back();
        }
    }
    return max_open;
}

bool has_out_of_gas_frame(const std::vector<TraceEvent>& trace) {
    return std::any_of(trace.begin(), trace.end(), [](const TraceEvent& e) {
        return e.kind == TraceEvent::Kind::Exit && e.note == "out-of-gas";
    });
}

}  // namespace reaudit::sim
