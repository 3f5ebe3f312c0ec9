// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reaudit/analyzer.hpp"
#include "reaudit/ast.hpp"
#include "reaudit/sim/interpreter.hpp"
#include "reaudit/synth.hpp"

namespace reaudit::pipeline {

enum class Verdict { Confirmed, NotConfirmed, NotAttackable, AnalysisFailed };

const char* to_string(Verdict verdict);

struct AttackReport {
    std::string contract;
    std::string function;
    std::string signature;
    analysis::Pattern static_pattern = analysis::Pattern::SingleFunction;
    Verdict verdict = Verdict::NotConfirmed;
    int max_reentry_depth = 0;   // overlapping frames of the target function
    u128 ether_extracted = 0;    // attacker net gain across the entry transaction
    u128 entitled = 0;           // funding plus the attack-free control payout
    u128 victim_final_balance = 0;
    sim::GasModel gas_model = sim::GasModel::Faithful;
    bool conservation_ok = true;  // total supply unchanged across the run
    std::string failure_reason;   // AnalysisFailed only
    std::string trace_text;       // entry-transaction trace
    std::string trace_path;       // set when written to the trace directory
};

struct FileReport {
    std::string path;
    bool analysis_failed = false;
    std::string error;
    std::vector<analysis::VulnCandidate> candidates;
    std::vector<AttackReport> attacks;
};

struct Summary {
    int confirmed = 0;
    int potential = 0;  // static candidates not dynamically confirmed
    int safe = 0;       // parsed files without candidates
    int failed = 0;

    bool operator==(const Summary&) const = default;
};

struct PipelineReport {
    std::vector<FileReport> files;
    Summary summary;
};

struct Options {
    sim::GasModel gas_model = sim::GasModel::Faithful;
    int max_reentry = 64;
    u128 seed_victim = 1000;
    u128 funding = 0;
    bool static_only = false;
    int jobs = 1;
    std::optional<std::string> trace_dir;
    std::optional<std::string> emit_attacker_dir;
};

// Deploys the victim into the given world, seeds it through its payable path,
// deploys the synthesized attacker, runs one attack-free control in a forked
// world to price the entitled payout, then fires the entry transaction and
// classifies the outcome. The plan's target, stake, and re-entry bound are
// derived from the candidate and options; funding and entry arguments are
// taken from the plan as given. Never throws: failures come back as
// AnalysisFailed.
AttackReport run_attack(sim::WorldState world, std::shared_ptr<const sol::SourceUnit> victim,
    const analysis::VulnCandidate& candidate, synth::AttackPlan plan, const Options& options);

// parse -> find_candidates -> run_attack per candidate in a fresh world.
// Files are processed in sorted path order; per-file failures are recorded
// without aborting the batch.
PipelineReport analyze_pipeline(const std::vector<std::string>& files, const Options& options);

// Same pipeline over in-memory sources; used by tests and the batch driver.
PipelineReport analyze_sources(
    const std::vector<std::pair<std::string, std::string>>& named_sources,
    const Options& options);

// 0 = no confirmed findings, 1 = at least one confirmed, 3 = every input failed.
int exit_code(const PipelineReport& report);

nlohmann::json to_json(const PipelineReport& report);
std::string render_text(const PipelineReport& report);

}  // namespace reaudit::pipeline
