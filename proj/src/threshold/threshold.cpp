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

#include "gasgauge/threshold/threshold.hpp"

#include <algorithm>
#include <exception>

namespace gasgauge::threshold {

using gasvm::ExecOutcome;
using gasvm::LoopOverride;
using gasvm::MeasureKResult;
using gasvm::MeasureTwoResult;

std::string_view to_string(Method m) { return m == Method::Exact ? "exact" : "estimated"; }

std::string formula_text(Gas gas1, Gas gas2, std::optional<Gas> internal) {
    std::string out = "(gasleft() - " + std::to_string(gas1) + ") / (" + std::to_string(gas2);
    if (internal) {
        out += " + " + std::to_string(*internal);
    }
    return out + ")";
}

std::int64_t estimate_threshold(const MeasureTwoResult& m) {
    if (m.gas2 == 0) {
        throw Error(ErrorKind::Analysis, "zero-cost iteration");
    }
    if (m.initialGas < m.gas1) {
        return 0;
    }
    return 1 + static_cast<std::int64_t>((m.initialGas - m.gas1) / m.gas2);
}

// ---- harness ----

ProbeHarness::ProbeHarness(const frontend::ContractAst& ast, const loopscan::LoopForest& forest, int loopId,
                           const gasvm::GasCostModel& model, const HarnessOptions& options)
    : ast_(ast), model_(model), loopId_(loopId) {
    int fi = ast.loops.at(static_cast<std::size_t>(loopId)).function;
    const auto& fn = ast.functions[static_cast<std::size_t>(fi)];
    std::vector<int> ancestors = forest.ancestors(loopId);
    descendants_ = forest.descendants(loopId);
    for (const auto& l : forest.loops) {
        if (l.loopId == loopId) {
            continue;
        }
        bool isAncestor = std::find(ancestors.begin(), ancestors.end(), l.loopId) != ancestors.end();
        base_[l.loopId] = isAncestor ? LoopOverride::force(1) : LoopOverride::disable();
    }

    const U256 size = static_cast<std::uint64_t>(options.ceiling + 2);
    std::map<std::string, U256> pending = options.args;
    call_.function = fn.signature();
    for (const auto& p : fn.params) {
        auto it = pending.find(p.name);
        if (p.type.is_array()) {
            call_.args.emplace_back(gasvm::ArrayValue::lazy(it == pending.end() ? size : it->second, options.fill));
        } else {
            call_.args.emplace_back(it == pending.end() ? options.fill : it->second);
        }
        if (it != pending.end()) {
            pending.erase(it);
        }
    }
    for (const auto& v : ast.stateVars) {
        auto it = pending.find(v.name);
        if (v.type.is_array()) {
            call_.storageSeed[v.name] = gasvm::ArrayValue::lazy(it == pending.end() ? size : it->second, options.fill);
        } else if (it != pending.end() && v.type.is_scalar()) {
            call_.storageSeed[v.name] = it->second;
        }
        if (it != pending.end()) {
            pending.erase(it);
        }
    }
    for (const auto& [name, value] : pending) {
        bool otherParam = false;
        for (const auto& f : ast.functions) {
            for (const auto& p : f.params) {
                otherParam = otherParam || p.name == name;
            }
        }
        if (!otherParam) {
            throw Error(ErrorKind::Analysis, "'" + name + "' names no parameter or state variable");
        }
    }
}

ExecOutcome ProbeHarness::probe(std::int64_t n) const {
    gasvm::Overrides ov = base_;
    ov[loopId_] = LoopOverride::force(static_cast<std::uint64_t>(n));
    return gasvm::execute(ast_, call_, model_, ov);
}

gasvm::Execution ProbeHarness::run_with(const gasvm::Overrides& target) const {
    gasvm::Overrides ov = base_;
    for (const auto& [id, o] : target) {
        ov[id] = o;
    }
    return gasvm::run(ast_, call_, model_, ov);
}

MeasureKResult ProbeHarness::measure(std::uint64_t k) const {
    return gasvm::measure_k(ast_, call_, model_, loopId_, k, base_);
}

ProbeHarness ProbeHarness::with_descendants_natural() const {
    ProbeHarness copy = *this;
    for (int d : descendants_) {
        copy.base_.erase(d);
    }
    return copy;
}

ProbeHarness ProbeHarness::with_limit(Gas blockGasLimit) const {
    ProbeHarness copy = *this;
    copy.model_.blockGasLimit = blockGasLimit;
    return copy;
}

TripleOutcome triple_probe(const ProbeHarness& h, std::int64_t guess, bool parallel) {
    std::optional<ExecOutcome> out[3];
    std::exception_ptr failure[3];
    const int first = guess > 0 ? 0 : 1;
#pragma omp parallel for if (parallel) schedule(static, 1) num_threads(3)
    for (int i = first; i < 3; ++i) {
        try {
            out[i] = h.probe(guess - 1 + i);
        } catch (...) {
            failure[i] = std::current_exception();
        }
    }
    for (auto& f : failure) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    return {out[0], *out[1], *out[2]};
}

// ---- search ----

ThresholdResult extrapolate_threshold(const MeasureTwoResult& m, Gas gasAtCeilingLeft, Gas consumedByCeiling,
                                      const ThresholdParams& params) {
    ThresholdResult r;
    r.method = Method::Estimated;
    r.initialGas = m.initialGas;
    r.gas1 = m.gas1;
    r.gas2 = m.gas2;
    Gas iterations = static_cast<Gas>(params.upper - 1);
    if (params.upper < 2 || consumedByCeiling <= m.gas1) {
        throw Error(ErrorKind::Analysis, "extrapolation needs at least two measured iterations");
    }
    Gas mean = (consumedByCeiling - m.gas1) / iterations;
    if (mean == 0) {
        throw Error(ErrorKind::Analysis, "zero-cost iteration");
    }
    r.threshold = params.upper + static_cast<std::int64_t>(gasAtCeilingLeft / mean);
    r.notes.push_back("extrapolated from " + std::to_string(params.upper) + " iterations (mean " +
                      std::to_string(mean) + " gas per iteration)");
    return r;
}

namespace {

bool is_abort(const ExecOutcome& o) { return !gasvm::is_completed(o) && !gasvm::is_oog(o); }

// Runs the measured loop to the ceiling; nullopt when that itself runs out of gas.
std::optional<ThresholdResult> try_extrapolate(const ProbeHarness& h, const MeasureTwoResult& m,
                                               const ThresholdParams& params, std::uint32_t& probes) {
    ++probes;
    try {
        MeasureKResult full = h.measure(static_cast<std::uint64_t>(params.upper));
        Gas consumed = 0;
        for (Gas g : full.iterationGas) {
            consumed += g;
        }
        Gas left = full.initialGas > consumed ? full.initialGas - consumed : 0;
        return extrapolate_threshold(m, left, consumed, params);
    } catch (const gasvm::MeasurementError&) {
        return std::nullopt;
    }
}

}  // namespace

ThresholdResult search_threshold(const ProbeHarness& h, const MeasureTwoResult& m, std::int64_t estimate,
                                 const ThresholdParams& params) {
    ThresholdResult r;
    r.loopId = h.loop_id();
    r.estimate = estimate;
    r.initialGas = m.initialGas;
    r.gas1 = m.gas1;
    r.gas2 = m.gas2;

    auto finish = [&](ThresholdResult x) {
        x.loopId = r.loopId;
        x.estimate = r.estimate;
        x.initialGas = r.initialGas;
        x.gas1 = r.gas1;
        x.gas2 = r.gas2;
        x.probes = r.probes;
        x.notes.insert(x.notes.begin(), r.notes.begin(), r.notes.end());
        return x;
    };
    auto exact = [&](std::int64_t t) {
        ThresholdResult x;
        x.method = Method::Exact;
        x.threshold = t;
        return finish(std::move(x));
    };
    auto estimated = [&](std::string note) {
        ThresholdResult x;
        x.method = Method::Estimated;
        x.threshold = estimate;
        x.notes.push_back(std::move(note));
        return finish(std::move(x));
    };
    auto extrapolated = [&]() {
        if (auto x = try_extrapolate(h, m, params, r.probes)) {
            return finish(std::move(*x));
        }
        return estimated("ForceCount(" + std::to_string(params.upper) + ") ran out of gas; two-iteration estimate kept");
    };

    const std::int64_t ceiling = params.upper;
    if (estimate > ceiling) {
        if (auto x = try_extrapolate(h, m, params, r.probes)) {
            return finish(std::move(*x));
        }
        r.notes.push_back("estimate above the ceiling but ForceCount(" + std::to_string(ceiling) +
                          ") ran out of gas; searching below it");
    }

    std::int64_t lower = params.lower;
    std::int64_t upper = params.upper;
    std::int64_t guess = std::clamp(estimate, lower, upper);
    while (lower <= upper) {
        if (lower >= ceiling) {
            return extrapolated();
        }
        std::optional<TripleOutcome> triple;
        if (params.tripleProbe) {
            triple = triple_probe(h, guess);
            r.probes += guess > 0 ? 3 : 2;
        }
        auto at_offset = [&](int d) -> ExecOutcome {
            if (triple) {
                return d < 0 ? *triple->below : d == 0 ? triple->at : triple->above;
            }
            ++r.probes;
            return h.probe(guess + d);
        };

        ExecOutcome at = at_offset(0);
        if (is_abort(at)) {
            return estimated("reverted during probing: " + gasvm::describe(at));
        }
        if (gasvm::is_oog(at)) {
            if (guess == 0) {
                return estimated("out of gas before the loop runs");
            }
            ExecOutcome below = at_offset(-1);
            if (is_abort(below)) {
                return estimated("reverted during probing: " + gasvm::describe(below));
            }
            if (!gasvm::is_oog(below)) {
                return exact(guess - 1);
            }
            upper = guess - 1;
        } else {
            ExecOutcome above = at_offset(+1);
            if (is_abort(above)) {
                return estimated("reverted during probing: " + gasvm::describe(above));
            }
            if (!gasvm::is_completed(above)) {
                return exact(guess);
            }
            lower = guess + 1;
        }
        guess = lower + (upper - lower) / 2;
    }
    if (lower >= ceiling) {
        return extrapolated();
    }
    return estimated("search did not converge");
}

// ---- per-loop driver ----

namespace {

constexpr Gas kRaisedLimitFactor = 4;

Gas raised_limit(const gasvm::GasCostModel& m) { return m.blockGasLimit * kRaisedLimitFactor + 10'000'000; }

// Iteration costs do not depend on the limit, so a loop that cannot complete two
// iterations is measured again under a larger budget and its entry gas translated back.
MeasureKResult measure_loop(const ProbeHarness& h, std::uint64_t k, std::vector<std::string>& notes) {
    try {
        return h.measure(k);
    } catch (const gasvm::MeasurementError& e) {
        if (!gasvm::is_oog(e.outcome())) {
            throw;
        }
    }
    Gas limit = h.model().blockGasLimit;
    Gas raised = raised_limit(h.model());
    MeasureKResult r = h.with_limit(raised).measure(k);
    Gas extra = raised - limit;
    r.initialGas = r.initialGas > extra ? r.initialGas - extra : 0;
    notes.push_back("fewer than " + std::to_string(k) + " iterations fit the gas limit; measured under a raised limit");
    return r;
}

}  // namespace

ThresholdResult analyze_loop(const frontend::ContractAst& ast, const loopscan::LoopForest& forest, int loopId,
                             const gasvm::GasCostModel& model, const CorrectionOptions& options) {
    ProbeHarness h(ast, forest, loopId, model, options.harness);
    std::vector<std::string> notes;
    MeasureKResult mk;
    try {
        mk = measure_loop(h, std::max<std::uint64_t>(2, options.averageK), notes);
    } catch (const gasvm::MeasurementError& e) {
        ThresholdResult r;
        r.loopId = loopId;
        r.failure = e.what();
        r.notes.push_back(std::string("loop could not be measured: ") + e.what());
        return r;
    }
    MeasureTwoResult m{mk.initialGas, mk.gas1, mk.gas2};
    std::int64_t estimate = estimate_threshold(m);
    ThresholdResult r = search_threshold(h, m, estimate, options.params);
    r.notes.insert(r.notes.begin(), notes.begin(), notes.end());

    try {
        MeasureKResult sample = h.with_limit(raised_limit(model)).measure(16);
        Gas rest = 0;
        for (std::size_t i = 1; i < sample.iterationGas.size(); ++i) {
            rest += sample.iterationGas[i];
        }
        Gas mean = rest / (sample.iterationGas.size() - 1);
        Gas diff = mean > r.gas2 ? mean - r.gas2 : r.gas2 - mean;
        r.nonUniform = diff * 10 > r.gas2;
        if (r.nonUniform) {
            r.notes.push_back("iterations 2..16 average " + std::to_string(mean) + " gas, more than 10% away from gas2");
        }
    } catch (const gasvm::MeasurementError&) {
        r.notes.push_back("16-iteration uniformity sample unavailable");
    }

    if (!h.descendants().empty()) {
        r.nestedOuter = true;
        ProbeHarness big = h.with_limit(raised_limit(model));
        gasvm::Overrides once{{loopId, LoopOverride::force(1)}};
        gasvm::Execution natural = big.with_descendants_natural().run_with(once);
        gasvm::Execution disabled = big.run_with(once);
        if (gasvm::is_completed(natural.outcome) && gasvm::is_completed(disabled.outcome)) {
            r.internal = natural.gasUsed > disabled.gasUsed ? natural.gasUsed - disabled.gasUsed : 0;
        } else {
            r.notes.push_back("internal loop gas unavailable: " + gasvm::describe(natural.outcome));
        }
    }
    r.formulaText = formula_text(r.gas1, r.gas2, r.nestedOuter ? std::optional<Gas>(r.internal) : std::nullopt);

    if (options.verify && r.method == Method::Exact) {
        bool ok = gasvm::is_completed(h.probe(r.threshold)) && gasvm::is_oog(h.probe(r.threshold + 1));
        if (!ok) {
            throw Error(ErrorKind::Internal, "exact threshold of loop " + std::to_string(loopId) + " failed re-probing");
        }
    }
    return r;
}

std::vector<ThresholdResult> nested_thresholds(const frontend::ContractAst& ast, const loopscan::LoopForest& forest,
                                               const gasvm::GasCostModel& model, const CorrectionOptions& options) {
    std::vector<ThresholdResult> out;
    for (int id : forest.post_order()) {
        out.push_back(analyze_loop(ast, forest, id, model, options));
    }
    return out;
}

std::vector<ThresholdResult> correct_all(const frontend::ContractAst& ast,
                                         const std::map<int, loopscan::LoopForest>& forests,
                                         const gasvm::GasCostModel& model, const CorrectionOptions& options,
                                         const std::vector<int>& onlyLoops) {
    std::vector<std::pair<const loopscan::LoopForest*, int>> jobs;
    for (const auto& [fi, forest] : forests) {
        for (int id : forest.post_order()) {
            if (onlyLoops.empty() || std::find(onlyLoops.begin(), onlyLoops.end(), id) != onlyLoops.end()) {
                jobs.emplace_back(&forest, id);
            }
        }
    }
    std::vector<ThresholdResult> out(jobs.size());
    std::vector<std::exception_ptr> failures(jobs.size());
    const auto n = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for if (options.parallel) schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto& [forest, id] = jobs[static_cast<std::size_t>(i)];
        try {
            out[static_cast<std::size_t>(i)] = analyze_loop(ast, *forest, id, model, options);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Internal) {
                failures[static_cast<std::size_t>(i)] = std::current_exception();
                continue;
            }
            ThresholdResult r;
            r.loopId = id;
            r.failure = e.what();
            out[static_cast<std::size_t>(i)] = std::move(r);
        } catch (...) {
            failures[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    std::sort(out.begin(), out.end(), [](const ThresholdResult& a, const ThresholdResult& b) { return a.loopId < b.loopId; });
    return out;
}

}  // namespace gasgauge::threshold
