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

// Runs every acceptance criterion and prints one PASS/FAIL line each. The
// exit status is nonzero when any criterion fails.

#include <cstdlib>
#include <cstring>
#include <iostream>

#include "amegraph/repro.h"

int main(int argc, char **argv) {
    amegraph::ReproOptions options;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            options.quick = true;
        }
    }
    int failures = 0;
    for (int id = 1; id <= amegraph::kCriterionCount; ++id) {
        amegraph::CriterionResult r = amegraph::run_criterion(id, options);
        std::cout << amegraph::format_result(r) << std::endl;
        failures += r.pass ? 0 : 1;
    }
    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
