// Copyright 2026 The amegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AMEGRAPH_REPRO_H
#define AMEGRAPH_REPRO_H

#include <cstdint>
#include <string>
#include <vector>

namespace amegraph {

struct ReproOptions {
    /// Skips the 7-qubit exhaustive run.
    bool quick = false;
    /// Every randomized criterion derives its generator from this seed.
    std::uint64_t seed = 1;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool skipped = false;
    /// Measured quantities, one "key=value" per entry.
    std::vector<std::string> details;
    /// Non-fatal observations such as a missed throughput target.
    std::vector<std::string> warnings;
    double seconds = 0;
};

constexpr int kCriterionCount = 12;

/// Throws InvalidArgument for ids outside 1..kCriterionCount.
CriterionResult run_criterion(int id, const ReproOptions &options);
std::vector<CriterionResult> run_all(const ReproOptions &options);

/// "PASS 4 name: k=v k=v" with an optional " (1.23 s)" suffix; skipped
/// criteria print SKIP and warnings follow as "WARN" lines.
std::string format_result(const CriterionResult &r, bool timing = true);

}  // namespace amegraph

#endif
