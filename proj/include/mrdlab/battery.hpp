/*
 * Copyright 2026 The mrdlab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

namespace mrdlab {

/// One check of the verification battery.
struct CheckResult {
    std::string name;
    std::string claim;    // what is being verified, human-readable
    std::string expected;
    std::string actual;
    bool pass = false;
    double seconds = 0.0;
    double limit_seconds = 0.0; // per-check wall-clock budget, also enforced
};

struct RunReport {
    std::vector<CheckResult> checks;
    bool all_pass = true;
    double total_seconds = 0.0;
};

/// Runs the full battery of exact reproduction checks. `fast` skips the
/// minimum-blocking-set search at k = 2 and the Monte Carlo convergence
/// check; everything else is identical.
RunReport run_verification_battery(bool fast);

} // namespace mrdlab
