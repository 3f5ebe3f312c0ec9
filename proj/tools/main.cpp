// reaudit: reentrancy auditor for a Solidity subset
// Copyright 2026 The reaudit Authors.
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reaudit/abi.hpp"
#include "reaudit/analyzer.hpp"
#include "reaudit/parser.hpp"
#include "reaudit/pipeline.hpp"
#include "reaudit/printer.hpp"
#include "reaudit/sim/genesis.hpp"
#include "reaudit/sim/interpreter.hpp"
#include "reaudit/synth.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitAllFailed = 3;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        return std::nullopt;
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

reaudit::u128 parse_wei_or_exit(const std::string& text, const std::string& flag) {
    if (auto value = reaudit::u128_from_string(text))
        return *value;
    std::cerr << "error: " << flag << " expects a wei amount, got '" << text << "'\n";
    std::exit(kExitUsage);
}

reaudit::sim::GasModel parse_gas_model_or_exit(const std::string& text) {
    if (text == "faithful")
        return reaudit::sim::GasModel::Faithful;
    if (text == "paper")
        return reaudit::sim::GasModel::Paper;
    std::cerr << "error: --gas-model expects 'faithful' or 'paper', got '" << text << "'\n";
    std::exit(kExitUsage);
}

int cmd_scan(const std::vector<std::string>& files, const std::string& out_path) {
    std::set<std::string> lines;
    size_t failed = 0;
    for (const auto& path : files) {
        const auto source = read_file(path);
        if (!source) {
            std::cerr << path << ": cannot read file\n";
            ++failed;
            continue;
        }
        try {
            const auto unit = reaudit::sol::parse(*source);
            for (const auto& candidate : reaudit::analysis::find_candidates(unit))
                lines.insert(candidate.signature);
        } catch (const std::exception& e) {
            std::cerr << path << ": " << e.what() << "\n";
            ++failed;
        }
    }
    std::string text;
    for (const auto& line : lines) {
        text += line;
        text += '\n';
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
    } else {
        std::cout << text;
    }
    return failed == files.size() && !files.empty() ? kExitAllFailed : 0;
}

int cmd_analyze(const std::vector<std::string>& files, const reaudit::pipeline::Options& options,
    bool json_output) {
    const auto report = reaudit::pipeline::analyze_pipeline(files, options);
    if (json_output)
        std::cout << reaudit::pipeline::to_json(report).dump(2) << "\n";
    else
        std::cout << reaudit::pipeline::render_text(report);
    return reaudit::pipeline::exit_code(report);
}

int cmd_emit_attacker(const std::string& file, const std::string& function,
    std::string contract, const std::string& out_dir, int max_reentry,
    const std::string& funding_text) {
    const auto source = read_file(file);
    if (!source) {
        std::cerr << file << ": cannot read file\n";
        return kExitUsage;
    }
    try {
        const auto unit = reaudit::sol::parse(*source);
        if (contract.empty()) {
            for (const auto& c : unit.contracts)
                if (c.find_function(function))
                    contract = c.name;
        }
        if (contract.empty()) {
            std::cerr << "error: no contract in " << file << " declares " << function << "()\n";
            return kExitUsage;
        }
        reaudit::synth::AttackPlan plan;
        plan.target_contract = contract;
        plan.target_function = function;
        plan.max_reentry = max_reentry;
        plan.funding = parse_wei_or_exit(funding_text, "--funding");
        const auto abi = reaudit::sol::extract_abi(unit, contract);
        const auto attacker = reaudit::synth::synthesize_attacker(abi, plan);
        const std::string path =
            out_dir + "/" + reaudit::synth::attacker_contract_name(plan) + ".sol";
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << path << "\n";
            return kExitUsage;
        }
        out << reaudit::synth::render_attacker(attacker);
        std::cout << path << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

// Script grammar (one command per line, # starts a comment):
//   deploy @alias <file.sol> <Contract> from=<acct> [value=<wei>] [args=a,b,c]
//   send from=<acct> to=<acct> [value=<wei>] [call=fn(a,b)] [gas=<n>]
//   balance <acct>
// Accounts are 0x-addresses or @aliases bound by deploy.
class ScriptRunner {
public:
    ScriptRunner(reaudit::sim::Simulator& sim, std::ostream& out) : sim_(sim), out_(out) {}

    bool run_line(const std::string& raw) {
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream in(line);
        std::string command;
        if (!(in >> command))
            return true;
        if (command == "deploy")
            return run_deploy(in);
        if (command == "send")
            return run_send(in);
        if (command == "balance")
            return run_balance(in);
        std::cerr << "script error: unknown command '" << command << "'\n";
        return false;
    }

private:
    reaudit::sim::Simulator& sim_;
    std::ostream& out_;
    std::map<std::string, reaudit::sim::Address> aliases_;

    std::optional<reaudit::sim::Address> account(const std::string& text) {
        if (!text.empty() && text[0] == '@') {
            auto it = aliases_.find(text.substr(1));
            if (it == aliases_.end())
                return std::nullopt;
            return it->second;
        }
        return reaudit::sim::Address::from_hex(text);
    }

    std::optional<reaudit::sim::Value> value_of(const std::string& text) {
        if (text == "true" || text == "false")
            return reaudit::sim::Value::boolean(text == "true");
        if (!text.empty() && text[0] == '@') {
            auto addr = account(text);
            if (!addr)
                return std::nullopt;
            return reaudit::sim::Value::address(*addr);
        }
        if (text.size() == 42 && text.rfind("0x", 0) == 0) {
            auto addr = reaudit::sim::Address::from_hex(text);
            if (!addr)
                return std::nullopt;
            return reaudit::sim::Value::address(*addr);
        }
        if (auto n = reaudit::u128_from_string(text))
            return reaudit::sim::Value::wei(*n);
        return std::nullopt;
    }

    static std::map<std::string, std::string> keyed_args(std::istringstream& in) {
        std::map<std::string, std::string> out;
        std::string word;
        while (in >> word) {
            const size_t eq = word.find('=');
            if (eq == std::string::npos)
                out[word] = "";
            else
                out[word.substr(0, eq)] = word.substr(eq + 1);
        }
        return out;
    }

    bool run_deploy(std::istringstream& in) {
        std::string alias, file, contract;
        if (!(in >> alias >> file >> contract) || alias.empty() || alias[0] != '@') {
            std::cerr << "script error: deploy @alias <file> <Contract> from=<acct>\n";
            return false;
        }
        auto kv = keyed_args(in);
        const auto from = account(kv["from"]);
        if (!from) {
            std::cerr << "script error: deploy needs a valid from= account\n";
            return false;
        }
        const auto source = read_file(file);
        if (!source) {
            std::cerr << "script error: cannot read " << file << "\n";
            return false;
        }
        reaudit::u128 value = 0;
        if (!kv["value"].empty()) {
            auto v = reaudit::u128_from_string(kv["value"]);
            if (!v)
                return false;
            value = *v;
        }
        std::vector<reaudit::sim::Value> args;
        if (!kv["args"].empty()) {
            std::istringstream list(kv["args"]);
            std::string item;
            while (std::getline(list, item, ',')) {
                auto v = value_of(item);
                if (!v) {
                    std::cerr << "script error: bad argument '" << item << "'\n";
                    return false;
                }
                args.push_back(*v);
            }
        }
        try {
            auto unit = std::make_shared<const reaudit::sol::SourceUnit>(
                reaudit::sol::parse(*source));
            const auto result = sim_.deploy(*from, unit, contract, std::move(args), value);
            if (result.ok()) {
                aliases_[alias.substr(1)] = *result.created;
                out_ << "deployed " << alias << "=" << result.created->hex()
                     << " status=success gasUsed=" << result.gas_used << "\n";
            } else {
                out_ << "deployed " << alias << " status=" << to_string(result.status)
                     << " reason=" << result.reason << "\n";
            }
        } catch (const std::exception& e) {
            std::cerr << "script error: " << e.what() << "\n";
            return false;
        }
        return true;
    }

    bool run_send(std::istringstream& in) {
        auto kv = keyed_args(in);
        const auto from = account(kv["from"]);
        const auto to = account(kv["to"]);
        if (!from || !to) {
            std::cerr << "script error: send needs valid from= and to= accounts\n";
            return false;
        }
        reaudit::sim::Transaction tx;
        tx.from = *from;
        tx.to = *to;
        if (!kv["value"].empty()) {
            auto v = reaudit::u128_from_string(kv["value"]);
            if (!v)
                return false;
            tx.value = *v;
        }
        if (!kv["gas"].empty()) {
            auto g = reaudit::u128_from_string(kv["gas"]);
            if (!g)
                return false;
            tx.gas_limit = static_cast<uint64_t>(*g);
        }
        if (!kv["call"].empty()) {
            const std::string& call = kv["call"];
            const size_t open = call.find('(');
            if (open == std::string::npos || call.back() != ')') {
                std::cerr << "script error: call= expects fn(arg,arg)\n";
                return false;
            }
            tx.call_fn = call.substr(0, open);
            const std::string arg_list = call.substr(open + 1, call.size() - open - 2);
            if (!arg_list.empty()) {
                std::istringstream list(arg_list);
                std::string item;
                while (std::getline(list, item, ',')) {
                    auto v = value_of(item);
                    if (!v) {
                        std::cerr << "script error: bad argument '" << item << "'\n";
                        return false;
                    }
                    tx.call_args.push_back(*v);
                }
            }
        }
        const auto result = sim_.send_transaction(tx);
        out_ << "send status=" << to_string(result.status) << " gasUsed=" << result.gas_used;
        if (!result.ok())
            out_ << " reason=" << result.reason;
        out_ << "\n";
        return true;
    }

    bool run_balance(std::istringstream& in) {
        std::string acct;
        if (!(in >> acct)) {
            std::cerr << "script error: balance <acct>\n";
            return false;
        }
        const auto addr = account(acct);
        if (!addr) {
            std::cerr << "script error: unknown account " << acct << "\n";
            return false;
        }
        out_ << "balance " << acct << "=" << reaudit::u128_to_string(sim_.world().balance(*addr))
             << "\n";
        return true;
    }
};

int cmd_simulate(const std::string& genesis_path, const std::string& script_path,
    reaudit::sim::GasModel gas_model, const std::string& trace_path) {
    const auto genesis_text = read_file(genesis_path);
    if (!genesis_text) {
        std::cerr << genesis_path << ": cannot read genesis file\n";
        return kExitUsage;
    }
    const auto script_text = read_file(script_path);
    if (!script_text) {
        std::cerr << script_path << ": cannot read script file\n";
        return kExitUsage;
    }
    try {
        std::vector<std::string> warnings;
        const auto config = reaudit::sim::load_genesis_file(*genesis_text, &warnings);
        for (const auto& w : warnings)
            std::cerr << "warning: " << w << "\n";
        reaudit::sim::SimOptions options;
        options.gas_model = gas_model;
        options.tx_gas_limit = config.gas_limit;
        reaudit::sim::Simulator sim(reaudit::sim::genesis(config), options);
        ScriptRunner runner(sim, std::cout);
        std::istringstream lines(*script_text);
        std::string line;
        while (std::getline(lines, line)) {
            if (!runner.run_line(line))
                return kExitUsage;
        }
        if (!trace_path.empty()) {
            std::ofstream out(trace_path, std::ios::binary);
            for (const auto& receipt : sim.receipts())
                out << "block=" << receipt.block << " status=" << to_string(receipt.status)
                    << " gasUsed=" << receipt.gas_used << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reaudit - static + dynamic reentrancy auditor for a Solidity subset"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full static + dynamic pipeline");
    std::vector<std::string> analyze_files;
    std::string gas_model_text = "faithful";
    int max_reentry = 64;
    std::string seed_text = "1000";
    std::string funding_text = "0";
    bool json_output = false;
    std::string trace_dir;
    std::string emit_dir;
    int jobs = 1;
    analyze->add_option("files", analyze_files, "contract source files")->required();
    analyze->add_option("--gas-model", gas_model_text, "faithful|paper (default faithful)");
    analyze->add_option("--max-reentry", max_reentry, "re-entry bound for the attacker");
    analyze->add_option("--seed-victim", seed_text, "victim bankroll in wei (default 1000)");
    analyze->add_option("--funding", funding_text, "attacker's own deposit in wei (default 0)");
    analyze->add_flag("--json", json_output, "machine-readable report on stdout");
    analyze->add_option("--trace-dir", trace_dir, "write per-attack traces here");
    analyze->add_option("--emit-attacker", emit_dir, "write synthesized attackers here");
    analyze->add_option("--jobs", jobs, "analyze files in parallel");

    // scan
    auto* scan = app.add_subcommand("scan", "static stage only, emits signatures");
    std::vector<std::string> scan_files;
    std::string scan_out;
    scan->add_option("files", scan_files, "contract source files")->required();
    scan->add_option("--out", scan_out, "write the signature file here instead of stdout");

    // emit-attacker
    auto* emit = app.add_subcommand("emit-attacker", "render an attacker for one function");
    std::string emit_file, emit_function, emit_contract, emit_out = ".";
    std::string emit_funding = "0";
    int emit_max_reentry = 64;
    emit->add_option("file", emit_file, "contract source file")->required();
    emit->add_option("--function", emit_function, "target function name")->required();
    emit->add_option("--contract", emit_contract, "target contract (default: inferred)");
    emit->add_option("--out", emit_out, "output directory (default .)");
    emit->add_option("--max-reentry", emit_max_reentry, "re-entry bound");
    emit->add_option("--funding", emit_funding, "deposit in wei before the attack");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run a transaction script on the simulator");
    std::string genesis_path, script_path, sim_gas_model = "faithful", sim_trace;
    simulate->add_option("--genesis", genesis_path, "genesis JSON file")->required();
    simulate->add_option("--script", script_path, "transaction script file")->required();
    simulate->add_option("--gas-model", sim_gas_model, "faithful|paper");
    simulate->add_option("--trace", sim_trace, "write per-block receipts here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (analyze->parsed()) {
        reaudit::pipeline::Options options;
        options.gas_model = parse_gas_model_or_exit(gas_model_text);
        options.max_reentry = max_reentry;
        options.seed_victim = parse_wei_or_exit(seed_text, "--seed-victim");
        options.funding = parse_wei_or_exit(funding_text, "--funding");
        options.jobs = jobs;
        if (!trace_dir.empty())
            options.trace_dir = trace_dir;
        if (!emit_dir.empty())
            options.emit_attacker_dir = emit_dir;
        return cmd_analyze(analyze_files, options, json_output);
    }
    if (scan->parsed())
        return cmd_scan(scan_files, scan_out);
    if (emit->parsed())
        return cmd_emit_attacker(
            emit_file, emit_function, emit_contract, emit_out, emit_max_reentry, emit_funding);
    if (simulate->parsed())
        return cmd_simulate(
            genesis_path, script_path, parse_gas_model_or_exit(sim_gas_model), sim_trace);
    return kExitUsage;
}
