// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#include "reaudit/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <sstream>

#include "reaudit/abi.hpp"
#include "reaudit/parser.hpp"
#include "reaudit/sim/genesis.hpp"

namespace reaudit::pipeline {

using analysis::Pattern;
using analysis::VulnCandidate;
using sim::Address;
using sim::Simulator;
using sim::Transaction;
using sim::Wei;

const char* to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::Confirmed:
        return "confirmed";
    case Verdict::NotConfirmed:
        return "not-confirmed";
    case Verdict::NotAttackable:
        return "not-attackable";
    case Verdict::AnalysisFailed:
        return "analysis-failed";
    }
    return "?";
}

namespace {

struct AttackRig {
    Simulator sim;
    Address bank;
    Address victim;
    Address attacker;
};

// Deploys one attacker bound to the victim, finances it, and fires the entry
// transaction from the attacker's own account so that tx.origin equals
// msg.sender inside the victim. Returns the attacker's balance delta across
// the entry transaction.
struct EntryOutcome {
    sim::ExecutionResult result;
    Wei balance_before = 0;
    Wei balance_after = 0;

    Wei gain() const { return balance_after > balance_before ? balance_after - balance_before : 0; }
};

EntryOutcome deploy_and_attack(Simulator& sim, const Address& bank, const Address& victim,
    const sol::AbiSpec& abi, const synth::AttackPlan& plan) {
    auto attacker_unit =
        std::make_shared<const sol::SourceUnit>(synth::synthesize_attacker(abi, plan));

    auto deployed = sim.deploy(bank, attacker_unit, synth::attacker_contract_name(plan),
        {sim::Value::address(victim)}, 0);
    if (!deployed.ok())
        throw std::runtime_error("attacker deployment failed: " + deployed.reason);
    const Address attacker = *deployed.created;

    const Wei gift = plan.funding + plan.stake;
    if (gift > 0) {
        Transaction fund;
        fund.from = bank;
        fund.to = attacker;
        fund.value = gift;
        const auto funded = sim.send_transaction(fund);
        if (!funded.ok())
            throw std::runtime_error("attacker funding failed: " + funded.reason);
    }

    EntryOutcome outcome;
    outcome.balance_before = sim.world().balance(attacker);
    Transaction entry;
    entry.from = attacker;
    entry.to = attacker;
    entry.call_fn = synth::kEntryFunction;
    outcome.result = sim.send_transaction(entry);
    outcome.balance_after = sim.world().balance(attacker);
    return outcome;
}

AttackReport attack_failed(const VulnCandidate& candidate, const Options& options,
    const std::string& reason) {
    AttackReport report;
    report.contract = candidate.contract;
    report.function = candidate.function;
    report.signature = candidate.signature;
    report.static_pattern = candidate.pattern;
    report.gas_model = options.gas_model;
    report.verdict = Verdict::AnalysisFailed;
    report.failure_reason = reason;
    return report;
}

}  // namespace

AttackReport run_attack(sim::WorldState world, std::shared_ptr<const sol::SourceUnit> victim,
    const VulnCandidate& candidate, synth::AttackPlan plan, const Options& options) {
    AttackReport report;
    report.contract = candidate.contract;
    report.function = candidate.function;
    report.signature = candidate.signature;
    report.static_pattern = candidate.pattern;
    report.gas_model = options.gas_model;

    // Constructors cannot be re-entered after deployment and the fallback has
    // no callable name; both are surfaced statically but never attacked.
    if (candidate.in_constructor || candidate.function.empty() ||
        candidate.function == "constructor") {
        report.verdict = Verdict::NotAttackable;
        return report;
    }

    try {
        const Wei supply_at_start = world.total_supply();

        sim::SimOptions sim_options;
        sim_options.gas_model = options.gas_model;
        Simulator sim(std::move(world), sim_options);

        if (sim.world().accounts.empty())
            throw std::runtime_error("world has no funded account to deploy from");
        const Address bank = sim.world().accounts.begin()->first;

        auto deployed = sim.deploy(bank, victim, candidate.contract, {}, 0);
        if (!deployed.ok())
            throw std::runtime_error("victim deployment failed: " + deployed.reason);
        const Address victim_addr = *deployed.created;

        const sol::AbiSpec abi = sol::extract_abi(*victim, candidate.contract);
        const sol::AbiEntry* fallback = abi.fallback();
        const bool seedable = fallback != nullptr && fallback->payable;

        // Outside depositors' money, placed through the victim's payable path.
        if (options.seed_victim > 0 && seedable) {
            Transaction seed;
            seed.from = bank;
            seed.to = victim_addr;
            seed.value = options.seed_victim;
            const auto seeded = sim.send_transaction(seed);
            if (!seeded.ok())
                throw std::runtime_error("victim seeding failed: " + seeded.reason);
        }

        // The attacker stakes a deposit of its own inside the entry
        // transaction; deposit-gated victims pay nothing to strangers, and a
        // same-block deposit keeps block-based bonus math at zero.
        plan.target_contract = candidate.contract;
        plan.target_function = candidate.function;
        plan.max_reentry = options.max_reentry;
        plan.stake = seedable ? options.seed_victim / 8 : 0;

        // Control run: an identical but non-reentering attacker in a forked
        // world prices what one legitimate interaction pays.
        {
            Simulator control = sim.fork();
            synth::AttackPlan control_plan = plan;
            control_plan.max_reentry = 0;
            const EntryOutcome priced =
                deploy_and_attack(control, bank, victim_addr, abi, control_plan);
            report.entitled = plan.funding + priced.gain();
        }

        const EntryOutcome entry = deploy_and_attack(sim, bank, victim_addr, abi, plan);
        report.ether_extracted = entry.gain();
        report.max_reentry_depth = sim::max_overlapping_frames(
            entry.result.trace, victim_addr, candidate.function);
        report.victim_final_balance = sim.world().balance(victim_addr);
        report.trace_text = sim::render(entry.result.trace);
        report.conservation_ok = sim.world().total_supply() == supply_at_start;

        const bool reentered = report.max_reentry_depth >= 2;
        report.verdict = (reentered && report.ether_extracted > report.entitled)
            ? Verdict::Confirmed
            : Verdict::NotConfirmed;
    } catch (const synth::NonAttackableTarget&) {
        // A flagged private/internal function: surfaced statically, but there
        // is nothing for the attacker to call.
        report.verdict = Verdict::NotAttackable;
        return report;
    } catch (const std::exception& e) {
        return attack_failed(candidate, options, e.what());
    }
    return report;
}

namespace {

FileReport analyze_one(
    const std::string& name, const std::string& source, const Options& options) {
    FileReport file;
    file.path = name;
    try {
        if (source.empty())
            throw std::runtime_error("cannot read file (or file is empty)");
        auto unit = std::make_shared<const sol::SourceUnit>(sol::parse(source));
        file.candidates = analysis::find_candidates(*unit);
        if (options.emit_attacker_dir) {
            for (const auto& candidate : file.candidates) {
                if (candidate.in_constructor || candidate.function.empty())
                    continue;
                synth::AttackPlan plan;
                plan.target_contract = candidate.contract;
                plan.target_function = candidate.function;
                plan.max_reentry = options.max_reentry;
                plan.funding = options.funding;
                try {
                    const auto attacker = synth::synthesize_attacker(
                        sol::extract_abi(*unit, candidate.contract), plan);
                    std::ofstream out(*options.emit_attacker_dir + "/" +
                                      synth::attacker_contract_name(plan) + ".sol");
                    out << synth::render_attacker(attacker);
                } catch (const synth::SynthError&) {
                    // non-attackable candidates have no attacker to emit
                }
            }
        }
        if (options.static_only)
            return file;
        for (const auto& candidate : file.candidates) {
            synth::AttackPlan plan;
            plan.funding = options.funding;
            AttackReport attack = run_attack(sim::genesis(sim::GenesisConfig::default_config()),
                unit, candidate, plan, options);
            if (options.trace_dir && !attack.trace_text.empty()) {
                std::string stem;
                for (char c : name) {
                    if (std::isalnum(static_cast<unsigned char>(c)))
                        stem.push_back(c);
                    else if (!stem.empty() && stem.back() != '_')
                        stem.push_back('_');
                }
                attack.trace_path = *options.trace_dir + "/trace_" + stem + "_" +
                                    attack.contract + "_" +
                                    (attack.function.empty() ? "fallback" : attack.function) +
                                    "_" + analysis::to_string(attack.static_pattern) + ".log";
                std::ofstream out(attack.trace_path);
                out << attack.trace_text;
            }
            file.attacks.push_back(std::move(attack));
        }
    } catch (const std::exception& e) {
        file.analysis_failed = true;
        file.error = e.what();
    }
    return file;
}

Summary summarize(const std::vector<FileReport>& files, bool static_only) {
    Summary summary;
    for (const auto& file : files) {
        if (file.analysis_failed) {
            ++summary.failed;
            continue;
        }
        if (file.candidates.empty()) {
            ++summary.safe;
            continue;
        }
        if (static_only) {
            summary.potential += static_cast<int>(file.candidates.size());
            continue;
        }
        for (const auto& attack : file.attacks) {
            if (attack.verdict == Verdict::Confirmed)
                ++summary.confirmed;
            else
                ++summary.potential;
        }
    }
    return summary;
}

}  // namespace

PipelineReport analyze_sources(
    const std::vector<std::pair<std::string, std::string>>& named_sources,
    const Options& options) {
    PipelineReport report;
    report.files.resize(named_sources.size());

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || named_sources.size() <= 1) {
        for (size_t i = 0; i < named_sources.size(); ++i)
            report.files[i] =
                analyze_one(named_sources[i].first, named_sources[i].second, options);
    } else {
        std::vector<std::future<FileReport>> futures;
        futures.reserve(named_sources.size());
        for (const auto& [name, source] : named_sources) {
            futures.push_back(std::async(std::launch::async,
                [&name, &source, &options] { return analyze_one(name, source, options); }));
        }
        for (size_t i = 0; i < futures.size(); ++i)
            report.files[i] = futures[i].get();
    }

    report.summary = summarize(report.files, options.static_only);
    return report;
}

PipelineReport analyze_pipeline(const std::vector<std::string>& files, const Options& options) {
    std::vector<std::string> ordered = files;
    std::sort(ordered.begin(), ordered.end());
    std::vector<std::pair<std::string, std::string>> sources;
    sources.reserve(ordered.size());
    for (const auto& path : ordered) {
        std::ifstream in(path);
        if (!in) {
            sources.emplace_back(path, "");
            continue;
        }
        std::ostringstream text;
        text << in.rdbuf();
        sources.emplace_back(path, text.str());
    }
    // Unreadable files surface as analysis failures through the empty source.
    return analyze_sources(sources, options);
}

int exit_code(const PipelineReport& report) {
    bool any_confirmed = false;
    bool all_failed = !report.files.empty();
    for (const auto& file : report.files) {
        if (!file.analysis_failed)
            all_failed = false;
        for (const auto& attack : file.attacks)
            any_confirmed = any_confirmed || attack.verdict == Verdict::Confirmed;
    }
    if (any_confirmed)
        return 1;
    if (all_failed)
        return 3;
    return 0;
}

nlohmann::json to_json(const PipelineReport& report) {
    nlohmann::json files = nlohmann::json::array();
    for (const auto& file : report.files) {
        nlohmann::json jf;
        jf["path"] = file.path;
        jf["status"] = file.analysis_failed ? "failed" : "analyzed";
        if (file.analysis_failed)
            jf["error"] = file.error;
        nlohmann::json candidates = nlohmann::json::array();
        for (const auto& c : file.candidates) {
            nlohmann::json jc;
            jc["contract"] = c.contract;
            jc["function"] = c.function.empty() ? "<fallback>" : c.function;
            jc["pattern"] = analysis::to_string(c.pattern);
            jc["signature"] = c.signature;
            jc["callKind"] = sol::to_string(c.call_site.kind);
            jc["callStmtIndex"] = c.call_site.stmt_index;
            jc["crossPeers"] = c.cross_peers;
            jc["sharedVars"] = c.shared_vars;
            nlohmann::json writes = nlohmann::json::array();
            for (const auto& w : c.writes_after)
                writes.push_back({{"stmtIndex", w.stmt_index}, {"var", w.target_var}});
            jc["writesAfter"] = std::move(writes);
            candidates.push_back(std::move(jc));
        }
        jf["candidates"] = std::move(candidates);
        nlohmann::json attacks = nlohmann::json::array();
        for (const auto& a : file.attacks) {
            nlohmann::json ja;
            ja["contract"] = a.contract;
            ja["function"] = a.function;
            ja["signature"] = a.signature;
            ja["pattern"] = analysis::to_string(a.static_pattern);
            ja["verdict"] = to_string(a.verdict);
            ja["maxReentryDepth"] = a.max_reentry_depth;
            ja["etherExtractedWei"] = u128_to_string(a.ether_extracted);
            ja["entitledWei"] = u128_to_string(a.entitled);
            ja["victimFinalBalanceWei"] = u128_to_string(a.victim_final_balance);
            ja["gasModel"] = sim::to_string(a.gas_model);
            ja["conservationOk"] = a.conservation_ok;
            if (a.verdict == Verdict::AnalysisFailed)
                ja["failureReason"] = a.failure_reason;
            ja["trace"] = a.trace_path;
            attacks.push_back(std::move(ja));
        }
        jf["attacks"] = std::move(attacks);
        files.push_back(std::move(jf));
    }
    nlohmann::json out;
    out["files"] = std::move(files);
    out["summary"] = {{"confirmed", report.summary.confirmed},
        {"potential", report.summary.potential}, {"safe", report.summary.safe},
        {"failed", report.summary.failed}};
    return out;
}

std::string render_text(const PipelineReport& report) {
    std::ostringstream out;
    for (const auto& file : report.files) {
        out << "file: " << file.path << "\n";
        if (file.analysis_failed) {
            out << "  status: analysis-failed\n";
            out << "  error: " << file.error << "\n";
            continue;
        }
        if (file.candidates.empty()) {
            out << "  status: safe (no candidates)\n";
            continue;
        }
        for (const auto& c : file.candidates) {
            out << "  candidate: " << c.signature << " [" << analysis::to_string(c.pattern)
                << ", " << sol::to_string(c.call_site.kind) << "]\n";
        }
        for (const auto& a : file.attacks) {
            out << "  attack: " << a.signature << " [" << analysis::to_string(a.static_pattern)
                << "]\n";
            out << "    verdict: " << to_string(a.verdict) << "\n";
            if (a.verdict == Verdict::AnalysisFailed) {
                out << "    reason: " << a.failure_reason << "\n";
                continue;
            }
            if (a.verdict == Verdict::NotAttackable)
                continue;
            out << "    reentryDepth: " << a.max_reentry_depth << "\n";
            out << "    extractedWei: " << u128_to_string(a.ether_extracted) << "\n";
            out << "    entitledWei: " << u128_to_string(a.entitled) << "\n";
            out << "    victimFinalBalanceWei: " << u128_to_string(a.victim_final_balance)
                << "\n";
            out << "    gasModel: " << sim::to_string(a.gas_model) << "\n";
            out << "    trace: " << (a.trace_path.empty() ? "-" : a.trace_path) << "\n";
        }
    }
    const auto& s = report.summary;
    out << "summary: confirmed=" << s.confirmed << " potential=" << s.potential
        << " safe=" << s.safe << " failed=" << s.failed << "\n";
    return out.str();
}

}  // namespace reaudit::pipeline
