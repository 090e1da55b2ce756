/*
   Copyright 2026 The gasgauge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gasgauge/cli/driver.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gasgauge/depgraph/depgraph.hpp"
#include "gasgauge/frontend/normalize.hpp"
#include "gasgauge/loopscan/loops.hpp"
#include "gasgauge/report/repair.hpp"
#include "gasgauge/threshold/threshold.hpp"

namespace gasgauge::cli {

Command parse_command(std::string_view text) {
    if (text == "detect") {
        return Command::Detect;
    }
    if (text == "identify") {
        return Command::Identify;
    }
    if (text == "correct") {
        return Command::Correct;
    }
    if (text == "all") {
        return Command::All;
    }
    throw Error(ErrorKind::Io, "unknown command '" + std::string(text) + "'");
}

std::string_view to_string(Command c) {
    switch (c) {
        case Command::Detect: return "detect";
        case Command::Identify: return "identify";
        case Command::Correct: return "correct";
        case Command::All: return "all";
    }
    return "?";
}

gasvm::GasCostModel resolve_model(const DriverOptions& options) {
    gasvm::GasCostModel model = options.costModel ? gasvm::GasCostModel::load(*options.costModel) : gasvm::GasCostModel{};
    if (options.gasLimit) {
        model.blockGasLimit = *options.gasLimit;
    }
    model.validate();
    return model;
}

std::pair<std::string, U256> parse_arg(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw Error(ErrorKind::Io, "expected name=value, got '" + std::string(text) + "'");
    }
    try {
        return {std::string(text.substr(0, eq)), parse_u256(text.substr(eq + 1))};
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::Io, "bad value in '" + std::string(text) + "': " + e.what());
    }
}

namespace {

bool runs_identification(Command c) { return c == Command::Identify || c == Command::All; }
bool runs_correction(Command c) { return c == Command::Correct || c == Command::All; }

std::string loop_type(const loopscan::LoopForest& forest, int loopId) {
    bool nested = forest.depth(loopId) > 1 || forest.children.count(loopId) != 0;
    return nested ? "Nested" : "Normal/Single";
}

const depgraph::BoundVarSet* find_bound(const std::vector<depgraph::BoundVarSet>& sets, int loopId) {
    for (const auto& s : sets) {
        if (s.loopId == loopId) {
            return &s;
        }
    }
    return nullptr;
}

report::BoundVarEntry bound_var_entry(const depgraph::BoundVar& v) {
    report::BoundVarEntry e;
    e.name = v.name;
    e.cls = std::string(depgraph::to_string(v.cls));
    e.type = v.type;
    for (const auto& r : v.roots) {
        e.roots.push_back({r.name, std::string(depgraph::to_string(r.cls)), r.type});
    }
    if (v.unrooted) {
        e.flags.emplace_back("unrooted");
    }
    if (v.unboundedIterable) {
        e.flags.emplace_back("unbounded-iterable");
    }
    return e;
}

report::DetectionSection detection_section(const loopscan::DetectionReport& det,
                                           const std::vector<depgraph::BoundVarSet>& bounds, const SourceFile& src) {
    report::DetectionSection d;
    for (const auto& f : det.functions) {
        report::FunctionEntry fe;
        fe.signature = f.signature;
        fe.visibility = std::string(frontend::to_string(f.visibility));
        const auto& forest = det.forests.at(f.functionIndex);
        for (const auto& l : f.loops) {
            report::LoopEntry le;
            le.id = l.loopId;
            le.span = l.location;
            le.line = src.location(l.span.begin).line;
            le.depth = l.depth;
            le.kind = std::string(loopscan::to_string(l.kind));
            le.loopType = loop_type(forest, l.loopId);
            le.bound = l.boundText;
            if (const auto* b = find_bound(bounds, l.loopId)) {
                for (const auto& v : b->vars) {
                    le.boundVars.push_back(bound_var_entry(v));
                }
                le.crossFunctionWriters = b->crossFunctionWriters;
                le.notes = b->notes;
            }
            fe.loops.push_back(std::move(le));
        }
        d.functions.push_back(std::move(fe));
    }
    return d;
}

report::TargetEntry target_entry(const depgraph::FuzzTarget& t, const fuzzer::FuzzResult& r,
                                 const frontend::ContractAst& ast) {
    report::TargetEntry e;
    e.signature = t.functionSignature;
    for (const auto& [name, type] : t.influencing_inputs(ast)) {
        e.influencingInputs.push_back(name + ": " + type);
    }
    e.loopIds = t.loopIds;
    e.status = std::string(fuzzer::to_string(r.status));
    if (r.witness) {
        for (const auto& v : r.witness->values) {
            e.witness.push_back({v.name, frontend::type_name(v.type),
                                 gasgauge::to_string(v.type.is_array() ? v.declaredSize : v.scalar), v.truncated});
        }
    }
    e.tries = r.tries;
    for (const auto& o : r.perTryOutcomes) {
        e.outcomes.push_back(gasvm::describe(o));
    }
    e.reason = r.reason;
    return e;
}

std::string function_signature(const frontend::ContractAst& ast, int loopId) {
    return ast.functions.at(static_cast<std::size_t>(ast.loops.at(static_cast<std::size_t>(loopId)).function))
        .signature();
}

}  // namespace

DriverResult analyze(const frontend::LoadedContract& contract, const DriverOptions& options) {
    const auto& ast = contract.ast;
    const auto& src = contract.normalized;
    gasvm::GasCostModel model = resolve_model(options);

    DriverResult out;
    auto& r = out.report;
    r.command = std::string(to_string(options.command));
    r.file = contract.original.path();
    r.contract = ast.name;
    r.gasLimit = model.blockGasLimit;
    for (const auto& [name, value] : options.args) {
        bool known = ast.find_state(name) >= 0;
        for (const auto& f : ast.functions) {
            for (const auto& p : f.params) {
                known = known || p.name == name;
            }
        }
        if (!known) {
            throw Error(ErrorKind::Io, "--arg " + name + " names no parameter or state variable");
        }
    }

    loopscan::DetectionReport det = loopscan::detection_report(ast, src);
    std::vector<depgraph::BoundVarSet> bounds = depgraph::classify_all(ast, det);
    r.detection = detection_section(det, bounds, src);

    if (runs_identification(options.command)) {
        report::IdentificationSection s;
        s.strategy = std::string(fuzzer::to_string(options.strategy));
        s.seed = options.seed;
        s.maxTries = options.maxTries;
        s.restart = options.restart;
        auto targets = depgraph::select_fuzz_targets(ast, bounds);
        for (std::size_t i = 0; i < targets.size(); ++i) {
            fuzzer::FuzzOptions fo;
            fo.maxTries = options.maxTries;
            fo.strategy = options.strategy;
            fo.seed = options.seed;
            fo.targetIndex = i;
            fo.restart = options.restart;
            s.targets.push_back(target_entry(targets[i], fuzzer::fuzz(targets[i], ast, model, fo), ast));
        }
        r.identification = std::move(s);
    }

    if (runs_correction(options.command)) {
        threshold::CorrectionOptions co;
        co.params.upper = options.ceiling;
        co.params.tripleProbe = options.tripleProbe;
        co.harness.ceiling = options.ceiling;
        co.harness.args = options.args;
        co.parallel = options.parallel;
        auto results = threshold::correct_all(ast, det.forests, model, co, options.loops);

        report::CorrectionSection c;
        c.ceiling = options.ceiling;
        std::vector<report::GuardPatch> patches;
        for (const auto& t : results) {
            int fi = ast.loops.at(static_cast<std::size_t>(t.loopId)).function;
            const auto& forest = det.forests.at(fi);
            report::ThresholdEntry te;
            te.loopId = t.loopId;
            te.signature = function_signature(ast, t.loopId);
            te.loopType = loop_type(forest, t.loopId);
            te.method = std::string(threshold::to_string(t.method));
            te.threshold = t.threshold;
            te.estimate = t.estimate;
            te.initialGas = t.initialGas;
            te.gas1 = t.gas1;
            te.gas2 = t.gas2;
            te.internal = t.internal;
            te.formula = t.formulaText;
            te.probes = t.probes;
            te.nonUniform = t.nonUniform;
            te.notes = t.notes;
            te.failure = t.failure;
            c.loops.push_back(std::move(te));

            const auto* b = find_bound(bounds, t.loopId);
            report::GuardPatch p = report::emit_require(forest.get(t.loopId), t, *b, src);
            c.patches.push_back({p.loopId, p.line, p.guardText, p.boundExprText, p.omittedReason});
            patches.push_back(std::move(p));
        }
        out.patched = report::apply_patches(src, patches);
        r.correction = std::move(c);
    }
    return out;
}

int exit_code(const report::AnalysisReport& r) { return r.loop_count() == 0 ? 0 : 1; }

namespace {

struct CliState {
    std::string file;
    std::optional<gasvm::Gas> gasLimit;
    std::string format{"json"};
    std::optional<std::uint64_t> seed;
    std::string strategy{"bitflip"};
    std::uint32_t maxTries{10};
    std::int64_t ceiling{5000};
    std::string costModel;
    std::string out;
    std::string patchOut;
    std::vector<int> loops;
    std::vector<std::string> args;
    bool restart{false};
    bool triple{false};
    bool parallel{false};
    std::string function;
};

void add_common(CLI::App* app, CliState& s) {
    app->add_option("file", s.file, "MiniSol source file")->required();
    app->add_option("--gas-limit", s.gasLimit, "block gas limit");
    app->add_option("--cost-model", s.costModel, "key=value cost model file");
    app->add_option("--arg", s.args, "harness value name=value (repeatable)");
}

void add_analysis(CLI::App* app, CliState& s) {
    add_common(app, s);
    app->add_option("--format", s.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app->add_option("--seed", s.seed, "fuzzer seed (default: $GASGAUGE_SEED, else 0)");
    app->add_option("--strategy", s.strategy, "bitflip, byteflip or byteshuffle")
        ->check(CLI::IsMember({"bitflip", "byteflip", "byteshuffle"}));
    app->add_option("--max-tries", s.maxTries, "fuzzer tries per target");
    app->add_flag("--restart", s.restart, "mutate the initial input every try");
    app->add_option("--ceiling", s.ceiling, "search ceiling before extrapolation");
    app->add_option("--loops", s.loops, "loop ids to correct")->delimiter(',');
    app->add_flag("--triple", s.triple, "probe guess-1, guess and guess+1 concurrently");
    app->add_flag("--parallel", s.parallel, "analyze loops concurrently");
    app->add_option("--out", s.out, "write the report here instead of stdout");
    app->add_option("--patch-out", s.patchOut, "write the guarded contract here");
}

std::uint64_t resolve_seed(const CliState& s) {
    if (s.seed) {
        return *s.seed;
    }
    if (const char* env = std::getenv("GASGAUGE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Io, "GASGAUGE_SEED is not an unsigned integer");
        }
    }
    return 0;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw Error(ErrorKind::Io, "cannot write " + path);
    }
}

DriverOptions driver_options(Command cmd, const CliState& s) {
    DriverOptions o;
    o.command = cmd;
    o.gasLimit = s.gasLimit;
    if (!s.costModel.empty()) {
        o.costModel = s.costModel;
    }
    o.seed = resolve_seed(s);
    o.strategy = fuzzer::parse_strategy(s.strategy);
    o.maxTries = s.maxTries;
    o.restart = s.restart;
    o.ceiling = s.ceiling;
    o.loops = s.loops;
    for (const auto& a : s.args) {
        o.args.insert(parse_arg(a));
    }
    o.tripleProbe = s.triple;
    o.parallel = s.parallel;
    return o;
}

int run_trace(const frontend::LoadedContract& lc, const CliState& s, std::ostream& out) {
    DriverOptions o = driver_options(Command::Detect, s);
    gasvm::GasCostModel model = resolve_model(o);
    const frontend::FunctionDecl* fn = lc.ast.function_by_signature(s.function);
    if (!fn) {
        int fi = lc.ast.find_function(s.function);
        if (fi < 0) {
            throw Error(ErrorKind::Io, "no function '" + s.function + "'");
        }
        fn = &lc.ast.functions[static_cast<std::size_t>(fi)];
    }
    gasvm::CallSpec call;
    call.function = fn->signature();
    auto pending = o.args;
    for (const auto& p : fn->params) {
        auto it = pending.find(p.name);
        U256 v = it == pending.end() ? U256(0) : it->second;
        if (it != pending.end()) {
            pending.erase(it);
        }
        if (p.type.is_array()) {
            call.args.emplace_back(gasvm::ArrayValue::lazy(v, 1));
        } else {
            call.args.emplace_back(v);
        }
    }
    for (const auto& [name, v] : pending) {
        int si = lc.ast.find_state(name);
        if (si < 0) {
            throw Error(ErrorKind::Io, "--arg " + name + " names no parameter or state variable");
        }
        if (lc.ast.stateVars[static_cast<std::size_t>(si)].type.is_array()) {
            call.storageSeed[name] = gasvm::ArrayValue::lazy(v, 1);
        } else {
            call.storageSeed[name] = v;
        }
    }
    gasvm::Execution e = gasvm::run(lc.ast, call, model, {}, {.trace = true});
    out << gasvm::format_trace(e.trace, lc.normalized);
    out << gasvm::describe(e.outcome) << "\n";
    return gasvm::is_completed(e.outcome) ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Loop gas analysis for MiniSol contracts", "gasgauge"};
    app.require_subcommand(1);
    CliState s;
    std::vector<std::pair<CLI::App*, Command>> analyses;
    for (Command c : {Command::Detect, Command::Identify, Command::Correct, Command::All}) {
        auto* sub = app.add_subcommand(std::string(to_string(c)), "");
        add_analysis(sub, s);
        analyses.emplace_back(sub, c);
    }
    analyses[0].first->description("find loops and classify their bounds");
    analyses[1].first->description("detect, then fuzz for out-of-gas inputs");
    analyses[2].first->description("detect, then compute thresholds and guards");
    analyses[3].first->description("every phase");
    auto* trace = app.add_subcommand("trace", "run one call and print every charge");
    add_common(trace, s);
    trace->add_option("--function", s.function, "function name or signature")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "gasgauge: " << e.what() << "\n";
        return 2;
    }

    SourceFile original(s.file, "");
    std::optional<SourceFile> normalized;
    try {
        original = SourceFile::load(s.file);
        normalized = frontend::normalize_source(original);
        frontend::LoadedContract lc{original, *normalized, frontend::parse_checked(*normalized)};
        if (trace->parsed()) {
            return run_trace(lc, s, out);
        }
        Command cmd = Command::All;
        for (const auto& [sub, c] : analyses) {
            if (sub->parsed()) {
                cmd = c;
            }
        }
        DriverResult result = analyze(lc, driver_options(cmd, s));
        std::string text = report::render_report(result.report, report::parse_format(s.format));
        if (s.out.empty()) {
            out << text;
        } else {
            write_file(s.out, text);
        }
        if (!s.patchOut.empty()) {
            if (!result.patched) {
                throw Error(ErrorKind::Io, "--patch-out needs the correct or all command");
            }
            write_file(s.patchOut, result.patched->content());
        }
        return exit_code(result.report);
    } catch (const Error& e) {
        err << e.format(normalized && e.kind() != ErrorKind::Io ? *normalized : original) << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "gasgauge: internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace gasgauge::cli
