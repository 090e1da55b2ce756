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

#include "support.hpp"

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <sstream>

#include "gasgauge/frontend/normalize.hpp"

#ifndef GASGAUGE_CORPUS_DIR
#error "GASGAUGE_CORPUS_DIR must point at the corpus directory"
#endif

namespace gasgauge::testing {

namespace {

std::vector<std::string> words_after(const std::string& text, std::string_view tag) {
    std::vector<std::string> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto at = line.find(tag);
        if (at == std::string::npos) {
            continue;
        }
        std::istringstream words(line.substr(at + tag.size()));
        std::string w;
        while (words >> w) {
            out.push_back(w);
        }
    }
    return out;
}

}  // namespace

std::vector<CorpusFile> load_corpus() {
    std::vector<std::filesystem::path> paths;
    for (const auto& e : std::filesystem::directory_iterator(GASGAUGE_CORPUS_DIR)) {
        if (e.path().extension() == ".msol") {
            paths.push_back(e.path());
        }
    }
    std::sort(paths.begin(), paths.end());
    std::vector<CorpusFile> out;
    for (const auto& p : paths) {
        CorpusFile f;
        f.name = p.filename().string();
        f.source = SourceFile::load(p);
        for (const auto& w : words_after(f.source.content(), "@loops")) {
            auto eq = w.rfind('=');
            f.loops[w.substr(0, eq)] = std::stoi(w.substr(eq + 1));
        }
        for (const auto& w : words_after(f.source.content(), "@targets")) {
            f.targets.insert(w);
        }
        out.push_back(std::move(f));
    }
    return out;
}

SourceFile corpus_source(const std::string& name) {
    return SourceFile::load(std::filesystem::path(GASGAUGE_CORPUS_DIR) / name);
}

frontend::LoadedContract load_corpus_contract(const std::string& name) {
    return frontend::load_contract(corpus_source(name));
}

frontend::LoadedContract load_text(const std::string& text, const std::string& path) {
    return frontend::load_contract(SourceFile(path, text));
}

const loopscan::LoopForest& Analyzed::forest_of(int loopId) const {
    int fi = contract.ast.loops.at(static_cast<std::size_t>(loopId)).function;
    return detection.forests.at(fi);
}

const depgraph::BoundVarSet& Analyzed::bound_of(int loopId) const {
    for (const auto& b : bounds) {
        if (b.loopId == loopId) {
            return b;
        }
    }
    throw Error(ErrorKind::Internal, "no classification for loop " + std::to_string(loopId));
}

Analyzed analyze(frontend::LoadedContract contract) {
    Analyzed a{std::move(contract), {}, {}};
    a.detection = loopscan::detection_report(a.contract.ast, a.contract.normalized);
    a.bounds = depgraph::classify_all(a.contract.ast, a.detection);
    return a;
}

std::optional<std::int64_t> linear_scan_threshold(const threshold::ProbeHarness& h, std::int64_t maxN) {
    for (std::int64_t n = 0; n <= maxN; ++n) {
        auto o = h.probe(n);
        if (gasvm::is_oog(o)) {
            return n - 1;
        }
        if (!gasvm::is_completed(o)) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<BoundKnob> bound_knob(const frontend::ContractAst& ast, const depgraph::BoundVarSet& bound) {
    int fi = ast.loops.at(static_cast<std::size_t>(bound.loopId)).function;
    const auto& fn = ast.functions.at(static_cast<std::size_t>(fi));
    std::vector<depgraph::Root> roots;
    for (const auto& r : bound.all_roots()) {
        if (r.cls != depgraph::VarClass::Fixed) {
            roots.push_back(r);
        }
    }
    for (const auto& v : bound.vars) {
        if (v.unboundedIterable || v.unrooted) {
            return std::nullopt;
        }
    }
    if (roots.size() != 1) {
        return std::nullopt;
    }
    BoundKnob k;
    k.name = roots[0].name;
    if (roots[0].cls == depgraph::VarClass::Input) {
        for (std::size_t i = 0; i < fn.params.size(); ++i) {
            if (fn.params[i].name == k.name) {
                k.paramIndex = static_cast<int>(i);
                k.isArray = fn.params[i].type.is_array();
            }
        }
        return k.paramIndex < 0 ? std::nullopt : std::optional<BoundKnob>(k);
    }
    int si = ast.find_state(k.name);
    if (si < 0) {
        return std::nullopt;
    }
    const auto& type = ast.stateVars[static_cast<std::size_t>(si)].type;
    if (!type.is_array() && !type.is_scalar()) {
        return std::nullopt;
    }
    k.isState = true;
    k.isArray = type.is_array();
    return k;
}

gasvm::CallSpec with_knob(const threshold::ProbeHarness& h, const BoundKnob& knob, const U256& value) {
    gasvm::CallSpec call = h.call();
    gasvm::Value v = knob.isArray ? gasvm::Value(gasvm::ArrayValue::lazy(value, 1)) : gasvm::Value(value);
    if (knob.isState) {
        call.storageSeed[knob.name] = v;
    } else {
        call.args.at(static_cast<std::size_t>(knob.paramIndex)) = v;
    }
    return call;
}

std::optional<NaturalBoundary> natural_boundary(const threshold::ProbeHarness& h, const BoundKnob& knob,
                                                std::uint64_t maxValue) {
    struct Probe {
        bool completed;
        bool oog;
        std::uint64_t iterations;
    };
    auto probe = [&](std::uint64_t v) {
        gasvm::Execution e = gasvm::run(h.ast(), with_knob(h, knob, v), h.model(), h.base_overrides());
        auto it = e.iterations.find(h.loop_id());
        return Probe{gasvm::is_completed(e.outcome), gasvm::is_oog(e.outcome),
                     it == e.iterations.end() ? 0 : it->second};
    };
    Probe p0 = probe(0);
    if (!p0.completed) {
        return std::nullopt;
    }
    std::uint64_t good = 0;
    std::uint64_t goodIterations = p0.iterations;
    std::uint64_t bad = 1;
    while (true) {
        Probe p = probe(bad);
        if (p.oog) {
            break;
        }
        if (!p.completed || bad >= maxValue) {
            return std::nullopt;
        }
        good = bad;
        goodIterations = p.iterations;
        bad *= 2;
    }
    while (bad - good > 1) {
        std::uint64_t mid = good + (bad - good) / 2;
        Probe p = probe(mid);
        if (p.completed) {
            good = mid;
            goodIterations = p.iterations;
        } else if (p.oog) {
            bad = mid;
        } else {
            return std::nullopt;
        }
    }
    return NaturalBoundary{good, goodIterations};
}

namespace {

std::string outcome_kind(const gasvm::ExecOutcome& o) {
    struct V {
        std::string operator()(const gasvm::Completed&) const { return "Completed"; }
        std::string operator()(const gasvm::OutOfGas&) const { return "OutOfGas"; }
        std::string operator()(const gasvm::Reverted& r) const { return "Reverted{" + r.message + "}"; }
        std::string operator()(const gasvm::IterationCapExceeded&) const { return "IterationCapExceeded"; }
    };
    return std::visit(V{}, o);
}

}  // namespace

SweepResult guard_sweep(const Analyzed& original, const report::GuardPatch& patch, const BoundKnob& knob,
                        const gasvm::GasCostModel& model, const threshold::HarnessOptions& options,
                        std::uint64_t maxN) {
    std::vector<std::uint64_t> values(maxN + 1);
    std::iota(values.begin(), values.end(), 0);
    return guard_sweep(original, patch, knob, model, options, values);
}

SweepResult guard_sweep(const Analyzed& original, const report::GuardPatch& patch, const BoundKnob& knob,
                        const gasvm::GasCostModel& model, const threshold::HarnessOptions& options,
                        const std::vector<std::uint64_t>& values) {
    const int loopId = patch.loopId;
    Analyzed patched = analyze(frontend::load_contract(report::apply_patch(original.contract.normalized, patch)));
    threshold::ProbeHarness before(original.contract.ast, original.forest_of(loopId), loopId, model, options);
    threshold::ProbeHarness after(patched.contract.ast, patched.forest_of(loopId), loopId, model, options);
    const Span loopSpan = patched.contract.ast.loop(loopId).span;
    SweepResult out;
    std::optional<std::uint64_t> maxAdmitted;
    std::optional<std::uint64_t> minRejected;
    std::string admittedAt;
    std::string rejectedAt;
    for (std::uint64_t n : values) {
        auto b = gasvm::run(before.ast(), with_knob(before, knob, n), model, before.base_overrides());
        auto a = gasvm::execute(after.ast(), with_knob(after, knob, n), model, after.base_overrides());
        const auto* r = std::get_if<gasvm::Reverted>(&a);
        std::string where = "n=" + std::to_string(n) + ": ";
        std::uint64_t iterations = b.iterations.count(loopId) ? b.iterations.at(loopId) : 0;
        if (r && r->message == report::kGuardMessage) {
            ++out.rejected;
            if (!minRejected || iterations < *minRejected) {
                minRejected = iterations;
                rejectedAt = where;
            }
            if (loopSpan.contains(r->span) || r->span.begin >= loopSpan.begin) {
                out.violations.push_back(where + "guard revert is not before the loop");
            }
            continue;
        }
        ++out.admitted;
        if (gasvm::is_oog(b.outcome) || gasvm::is_oog(a)) {
            out.violations.push_back(where + "admitted but runs out of gas");
            continue;
        }
        if (outcome_kind(a) != outcome_kind(b.outcome)) {
            out.violations.push_back(where + outcome_kind(b.outcome) + " unpatched vs " + outcome_kind(a) + " patched");
        }
        if (!maxAdmitted || iterations > *maxAdmitted) {
            maxAdmitted = iterations;
            admittedAt = where;
        }
    }
    if (maxAdmitted && minRejected && *maxAdmitted >= *minRejected) {
        out.violations.push_back(admittedAt + "admits " + std::to_string(*maxAdmitted) + " iterations but " +
                                 rejectedAt + "rejects " + std::to_string(*minRejected));
    }
    return out;
}

}  // namespace gasgauge::testing
