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

#include "gasgauge/gasvm/cost_model.hpp"

#include <charconv>
#include <sstream>
#include <utility>

#include "gasgauge/source.hpp"

namespace gasgauge::gasvm {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
    T out{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw Error(ErrorKind::Io, "cost model: invalid value '" + std::string(value) + "' for " + std::string(key));
    }
    return out;
}

}  // namespace

void GasCostModel::set(std::string_view key, std::string_view value) {
    std::pair<std::string_view, Gas*> fields[] = {
        {"txBase", &txBase},         {"perStatement", &perStatement},
        {"arith", &arith},           {"compare", &compare},
        {"memRead", &memRead},       {"storageRead", &storageRead},
        {"storageWrite", &storageWrite}, {"arrayPushStorage", &arrayPushStorage},
        {"loopInit", &loopInit},     {"blockGasLimit", &blockGasLimit},
        {"iterationCap", &iterationCap},
    };
    for (auto& [name, field] : fields) {
        if (name == key) {
            *field = parse_number<Gas>(key, value);
            return;
        }
    }
    if (key == "callDepthCap") {
        callDepthCap = parse_number<std::uint32_t>(key, value);
        return;
    }
    throw Error(ErrorKind::Io, "cost model: unknown key '" + std::string(key) + "'");
}

void GasCostModel::validate() const {
    if (blockGasLimit <= txBase) {
        throw Error(ErrorKind::Io, "cost model: blockGasLimit must exceed txBase");
    }
    if (counter_check_cost() == 0 || perStatement == 0) {
        throw Error(ErrorKind::Io, "cost model: loop iterations must consume gas (perStatement, memRead + compare > 0)");
    }
}

GasCostModel GasCostModel::parse(std::string_view text) {
    GasCostModel m;
    std::size_t lineNo = 0;
    while (!text.empty()) {
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::Io, "cost model line " + std::to_string(lineNo) + ": expected key=value");
        }
        m.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    m.validate();
    return m;
}

GasCostModel GasCostModel::load(const std::filesystem::path& path) {
    SourceFile f = SourceFile::load(path);
    return parse(f.content());
}

std::string GasCostModel::to_config() const {
    std::ostringstream out;
    out << "txBase=" << txBase << "\nperStatement=" << perStatement << "\narith=" << arith << "\ncompare=" << compare
        << "\nmemRead=" << memRead << "\nstorageRead=" << storageRead << "\nstorageWrite=" << storageWrite
        << "\narrayPushStorage=" << arrayPushStorage << "\nloopInit=" << loopInit
        << "\nblockGasLimit=" << blockGasLimit << "\niterationCap=" << iterationCap
        << "\ncallDepthCap=" << callDepthCap << "\n";
    return out.str();
}

}  // namespace gasgauge::gasvm
