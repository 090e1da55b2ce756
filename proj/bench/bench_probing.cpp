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

// Times threshold correction over the corpus: sequential vs triple probing, and serial vs
// parallel loops. Every variant must produce the serial sequential thresholds.
//
//   bench_probing [corpus-dir] [repeats]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "gasgauge/frontend/sema.hpp"
#include "gasgauge/loopscan/loops.hpp"
#include "gasgauge/threshold/threshold.hpp"

namespace fs = std::filesystem;
using namespace gasgauge;

namespace {

struct Variant {
    const char* name;
    bool triple;
    bool parallel;
};

std::vector<std::int64_t> thresholds(const std::vector<threshold::ThresholdResult>& rs) {
    std::vector<std::int64_t> out;
    for (const auto& r : rs) {
        out.push_back(r.threshold);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path(GASGAUGE_CORPUS_DIR);
    int repeats = argc > 2 ? std::max(1, std::stoi(argv[2])) : 3;

    std::vector<frontend::LoadedContract> contracts;
    std::vector<fs::path> paths;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().extension() == ".msol") {
            paths.push_back(e.path());
        }
    }
    std::sort(paths.begin(), paths.end());
    std::vector<loopscan::DetectionReport> reports;
    for (const auto& p : paths) {
        contracts.push_back(frontend::load_contract(SourceFile::load(p)));
    }
    for (const auto& c : contracts) {
        reports.push_back(loopscan::detection_report(c.ast, c.normalized));
    }

    const Variant variants[] = {
        {"sequential/serial", false, false},
        {"triple/serial", true, false},
        {"sequential/parallel", false, true},
        {"triple/parallel", true, true},
    };
    gasvm::GasCostModel model;
    std::vector<std::vector<std::int64_t>> reference;
    std::printf("%zu contracts, %d repeats, %d OpenMP threads\n", contracts.size(), repeats, omp_get_max_threads());
    std::printf("%-22s %10s %10s %s\n", "variant", "seconds", "probes", "agrees");
    for (const auto& v : variants) {
        threshold::CorrectionOptions o;
        o.params.tripleProbe = v.triple;
        o.parallel = v.parallel;
        double best = 1e30;
        std::uint64_t probes = 0;
        bool agrees = true;
        for (int rep = 0; rep < repeats; ++rep) {
            probes = 0;
            auto t0 = std::chrono::steady_clock::now();
            std::vector<std::vector<std::int64_t>> got;
            for (std::size_t i = 0; i < contracts.size(); ++i) {
                auto rs = threshold::correct_all(contracts[i].ast, reports[i].forests, model, o);
                for (const auto& r : rs) {
                    probes += r.probes;
                }
                got.push_back(thresholds(rs));
            }
            best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
            if (reference.empty()) {
                reference = got;
            }
            agrees = agrees && got == reference;
        }
        std::printf("%-22s %10.3f %10llu %s\n", v.name, best, static_cast<unsigned long long>(probes),
                    agrees ? "yes" : "NO");
    }
    return 0;
}
