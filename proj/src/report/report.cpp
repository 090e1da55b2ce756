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

#include "gasgauge/report/report.hpp"

#include <algorithm>
#include <sstream>

#include "gasgauge/source.hpp"

namespace gasgauge::report {

std::size_t AnalysisReport::loop_count() const {
    std::size_t n = 0;
    if (detection) {
        for (const auto& f : detection->functions) {
            n += f.loops.size();
        }
    }
    return n;
}

namespace {

Json strings(const std::vector<std::string>& v) {
    Json a = Json::array();
    for (const auto& s : v) {
        a.push_back(s);
    }
    return a;
}

Json root_json(const RootEntry& r) { return Json{{"name", r.name}, {"class", r.cls}, {"type", r.type}}; }

Json bound_var_json(const BoundVarEntry& b) {
    Json roots = Json::array();
    for (const auto& r : b.roots) {
        roots.push_back(root_json(r));
    }
    return Json{{"name", b.name}, {"class", b.cls}, {"type", b.type}, {"roots", roots}, {"flags", strings(b.flags)}};
}

Json loop_json(const LoopEntry& l) {
    Json vars = Json::array();
    for (const auto& b : l.boundVars) {
        vars.push_back(bound_var_json(b));
    }
    return Json{{"id", l.id},
                {"span", l.span},
                {"line", l.line},
                {"depth", l.depth},
                {"kind", l.kind},
                {"loopType", l.loopType},
                {"bound", l.bound},
                {"boundVars", vars},
                {"crossFunctionWriters", strings(l.crossFunctionWriters)},
                {"notes", strings(l.notes)}};
}

Json detection_json(const DetectionSection& d) {
    Json fns = Json::array();
    for (const auto& f : d.functions) {
        Json loops = Json::array();
        for (const auto& l : f.loops) {
            loops.push_back(loop_json(l));
        }
        fns.push_back(Json{{"signature", f.signature}, {"visibility", f.visibility}, {"loops", loops}});
    }
    return Json{{"functions", fns}};
}

Json identification_json(const IdentificationSection& s) {
    Json targets = Json::array();
    for (const auto& t : s.targets) {
        Json witness = Json::array();
        for (const auto& w : t.witness) {
            witness.push_back(Json{{"name", w.name}, {"type", w.type}, {"value", w.value}, {"truncated", w.truncated}});
        }
        targets.push_back(Json{{"signature", t.signature},
                               {"influencingInputs", strings(t.influencingInputs)},
                               {"loopIds", t.loopIds},
                               {"status", t.status},
                               {"witness", witness},
                               {"tries", t.tries},
                               {"outcomes", strings(t.outcomes)},
                               {"reason", t.reason}});
    }
    return Json{{"strategy", s.strategy},
                {"seed", s.seed},
                {"maxTries", s.maxTries},
                {"restart", s.restart},
                {"targets", targets}};
}

Json correction_json(const CorrectionSection& c) {
    Json loops = Json::array();
    for (const auto& t : c.loops) {
        loops.push_back(Json{{"loopId", t.loopId},
                             {"signature", t.signature},
                             {"loopType", t.loopType},
                             {"method", t.method},
                             {"threshold", t.threshold},
                             {"estimate", t.estimate},
                             {"initialGas", t.initialGas},
                             {"gas1", t.gas1},
                             {"gas2", t.gas2},
                             {"internal", t.internal},
                             {"formula", t.formula},
                             {"probes", t.probes},
                             {"nonUniform", t.nonUniform},
                             {"notes", strings(t.notes)},
                             {"failure", t.failure}});
    }
    Json patches = Json::array();
    for (const auto& p : c.patches) {
        patches.push_back(
            Json{{"loopId", p.loopId}, {"line", p.line}, {"guard", p.guard}, {"bound", p.bound}, {"omitted", p.omitted}});
    }
    return Json{{"ceiling", c.ceiling}, {"loops", loops}, {"patches", patches}};
}

template <typename T>
T field(const Json& j, const char* key) {
    return j.at(key).get<T>();
}

std::vector<std::string> string_list(const Json& j, const char* key) {
    return j.at(key).get<std::vector<std::string>>();
}

DetectionSection detection_from(const Json& j) {
    DetectionSection d;
    for (const auto& f : j.at("functions")) {
        FunctionEntry fe;
        fe.signature = field<std::string>(f, "signature");
        fe.visibility = field<std::string>(f, "visibility");
        for (const auto& l : f.at("loops")) {
            LoopEntry le;
            le.id = field<int>(l, "id");
            le.span = field<std::string>(l, "span");
            le.line = field<std::uint32_t>(l, "line");
            le.depth = field<int>(l, "depth");
            le.kind = field<std::string>(l, "kind");
            le.loopType = field<std::string>(l, "loopType");
            le.bound = field<std::string>(l, "bound");
            for (const auto& b : l.at("boundVars")) {
                BoundVarEntry be;
                be.name = field<std::string>(b, "name");
                be.cls = field<std::string>(b, "class");
                be.type = field<std::string>(b, "type");
                for (const auto& r : b.at("roots")) {
                    be.roots.push_back(
                        {field<std::string>(r, "name"), field<std::string>(r, "class"), field<std::string>(r, "type")});
                }
                be.flags = string_list(b, "flags");
                le.boundVars.push_back(std::move(be));
            }
            le.crossFunctionWriters = string_list(l, "crossFunctionWriters");
            le.notes = string_list(l, "notes");
            fe.loops.push_back(std::move(le));
        }
        d.functions.push_back(std::move(fe));
    }
    return d;
}

IdentificationSection identification_from(const Json& j) {
    IdentificationSection s;
    s.strategy = field<std::string>(j, "strategy");
    s.seed = field<std::uint64_t>(j, "seed");
    s.maxTries = field<std::uint32_t>(j, "maxTries");
    s.restart = field<bool>(j, "restart");
    for (const auto& t : j.at("targets")) {
        TargetEntry te;
        te.signature = field<std::string>(t, "signature");
        te.influencingInputs = string_list(t, "influencingInputs");
        te.loopIds = t.at("loopIds").get<std::vector<int>>();
        te.status = field<std::string>(t, "status");
        for (const auto& w : t.at("witness")) {
            te.witness.push_back({field<std::string>(w, "name"), field<std::string>(w, "type"),
                                  field<std::string>(w, "value"), field<bool>(w, "truncated")});
        }
        te.tries = field<std::uint32_t>(t, "tries");
        te.outcomes = string_list(t, "outcomes");
        te.reason = field<std::string>(t, "reason");
        s.targets.push_back(std::move(te));
    }
    return s;
}

CorrectionSection correction_from(const Json& j) {
    CorrectionSection c;
    c.ceiling = field<std::int64_t>(j, "ceiling");
    for (const auto& t : j.at("loops")) {
        ThresholdEntry te;
        te.loopId = field<int>(t, "loopId");
        te.signature = field<std::string>(t, "signature");
        te.loopType = field<std::string>(t, "loopType");
        te.method = field<std::string>(t, "method");
        te.threshold = field<std::int64_t>(t, "threshold");
        te.estimate = field<std::int64_t>(t, "estimate");
        te.initialGas = field<std::uint64_t>(t, "initialGas");
        te.gas1 = field<std::uint64_t>(t, "gas1");
        te.gas2 = field<std::uint64_t>(t, "gas2");
        te.internal = field<std::uint64_t>(t, "internal");
        te.formula = field<std::string>(t, "formula");
        te.probes = field<std::uint32_t>(t, "probes");
        te.nonUniform = field<bool>(t, "nonUniform");
        te.notes = string_list(t, "notes");
        te.failure = field<std::string>(t, "failure");
        c.loops.push_back(std::move(te));
    }
    for (const auto& p : j.at("patches")) {
        c.patches.push_back({field<int>(p, "loopId"), field<std::uint32_t>(p, "line"), field<std::string>(p, "guard"),
                             field<std::string>(p, "bound"), field<std::string>(p, "omitted")});
    }
    return c;
}

}  // namespace

Json to_json(const AnalysisReport& r) {
    Json j{{"tool", r.tool},         {"schemaVersion", r.schemaVersion}, {"command", r.command},
           {"file", r.file},         {"contract", r.contract},           {"gasLimit", r.gasLimit}};
    j["detection"] = r.detection ? detection_json(*r.detection) : Json(nullptr);
    j["identification"] = r.identification ? identification_json(*r.identification) : Json(nullptr);
    j["correction"] = r.correction ? correction_json(*r.correction) : Json(nullptr);
    return j;
}

AnalysisReport from_json(const Json& j) {
    try {
        AnalysisReport r;
        r.tool = field<std::string>(j, "tool");
        r.schemaVersion = field<int>(j, "schemaVersion");
        if (r.schemaVersion != 1) {
            throw Error(ErrorKind::Io, "unsupported report schema version " + std::to_string(r.schemaVersion));
        }
        r.command = field<std::string>(j, "command");
        r.file = field<std::string>(j, "file");
        r.contract = field<std::string>(j, "contract");
        r.gasLimit = field<std::uint64_t>(j, "gasLimit");
        if (!j.at("detection").is_null()) {
            r.detection = detection_from(j.at("detection"));
        }
        if (!j.at("identification").is_null()) {
            r.identification = identification_from(j.at("identification"));
        }
        if (!j.at("correction").is_null()) {
            r.correction = correction_from(j.at("correction"));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Io, std::string("malformed report: ") + e.what());
    }
}

Format parse_format(std::string_view text) {
    if (text == "json") {
        return Format::Json;
    }
    if (text == "text") {
        return Format::Text;
    }
    throw Error(ErrorKind::Io, "unknown format '" + std::string(text) + "' (expected json or text)");
}

namespace {

std::string join(const std::vector<std::string>& v, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? std::string(sep) : "") + v[i];
    }
    return out;
}

std::string describe_var(const BoundVarEntry& b) {
    std::string s = b.name + ": " + b.type + " (" + b.cls;
    if (!b.roots.empty()) {
        std::vector<std::string> roots;
        for (const auto& r : b.roots) {
            roots.push_back(r.name + " " + r.cls);
        }
        s += ", roots " + join(roots, ", ");
    }
    for (const auto& f : b.flags) {
        s += ", " + f;
    }
    return s + ")";
}

const ThresholdEntry* find_threshold(const AnalysisReport& r, int loopId) {
    if (!r.correction) {
        return nullptr;
    }
    for (const auto& t : r.correction->loops) {
        if (t.loopId == loopId) {
            return &t;
        }
    }
    return nullptr;
}

const PatchEntry* find_patch(const AnalysisReport& r, int loopId) {
    if (!r.correction) {
        return nullptr;
    }
    for (const auto& p : r.correction->patches) {
        if (p.loopId == loopId) {
            return &p;
        }
    }
    return nullptr;
}

void render_threshold(std::ostringstream& os, const ThresholdEntry& t, const PatchEntry* p) {
    if (!t.failure.empty()) {
        os << "    Threshold: unavailable (" << t.failure << ")\n";
        return;
    }
    os << "    Threshold: " << t.threshold << " (" << t.method << ")\n";
    os << "    Gas of first iteration: " << t.gas1 << "\n";
    os << "    Average gas of other iterations: " << t.gas2 << "\n";
    if (t.internal != 0 || t.loopType == "Nested") {
        os << "    Internal: " << t.internal << "\n";
    }
    os << "    Threshold formula: " << t.formula << "\n";
    if (t.nonUniform) {
        os << "    Warning: iteration cost is not uniform\n";
    }
    for (const auto& n : t.notes) {
        os << "    Note: " << n << "\n";
    }
    if (p) {
        if (p->omitted.empty()) {
            os << "    Guard (line " << p->line << "): " << p->guard << "\n";
        } else {
            os << "    Guard omitted: " << p->omitted << "\n";
        }
    }
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "gasgauge " << r.command << ": " << r.file;
    if (!r.contract.empty()) {
        os << " (contract " << r.contract << ")";
    }
    os << "\n";
    if (r.gasLimit != 0) {
        os << "Gas limit: " << r.gasLimit << "\n";
    }
    if (r.detection) {
        os << "Loops found: " << r.loop_count() << "\n";
        for (const auto& f : r.detection->functions) {
            os << "\nFunction: " << f.signature << "\n";
            os << "  Number of loops: " << f.loops.size() << "\n";
            for (const auto& l : f.loops) {
                os << "  Loop " << l.id << " (" << l.kind << ", " << l.span << "): " << l.loopType << "\n";
                os << "    Bound: " << l.bound << "\n";
                if (!l.boundVars.empty()) {
                    os << "    Bound variables:\n";
                    for (const auto& b : l.boundVars) {
                        os << "      " << describe_var(b) << "\n";
                    }
                }
                for (const auto& w : l.crossFunctionWriters) {
                    os << "    Written elsewhere: " << w << "\n";
                }
                for (const auto& n : l.notes) {
                    os << "    Note: " << n << "\n";
                }
                if (const auto* t = find_threshold(r, l.id)) {
                    render_threshold(os, *t, find_patch(r, l.id));
                }
            }
        }
    }
    if (r.identification) {
        const auto& s = *r.identification;
        os << "\nIdentification (" << s.strategy << ", seed " << s.seed << ", max tries " << s.maxTries
           << (s.restart ? ", restart" : "") << ")\n";
        for (const auto& t : s.targets) {
            os << "  " << t.signature << ": " << t.status;
            if (t.status == "TargetUnsupported") {
                os << " (" << t.reason << ")\n";
                continue;
            }
            os << " after " << t.tries << (t.tries == 1 ? " try" : " tries") << "\n";
            if (!t.influencingInputs.empty()) {
                os << "    Inputs: " << join(t.influencingInputs, ", ") << "\n";
            }
            for (const auto& w : t.witness) {
                os << "    Witness " << w.name;
                os << (w.type.find('[') != std::string::npos ? ".length" : "") << " = " << w.value;
                os << (w.truncated ? " (truncated)" : "") << "\n";
            }
        }
    }
    return os.str();
}

}  // namespace

std::string render_report(const AnalysisReport& r, Format format) {
    if (format == Format::Json) {
        return to_json(r).dump(2) + "\n";
    }
    return render_text(r);
}

}  // namespace gasgauge::report
