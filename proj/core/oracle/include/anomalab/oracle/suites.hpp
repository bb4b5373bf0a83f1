// Copyright 2026 The anomalab Authors
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

#ifndef ANOMALAB_ORACLE_SUITES_HPP
#define ANOMALAB_ORACLE_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace anomalab::oracle {

struct SuiteReport {
    std::string name;
    std::size_t cases = 0;
    double max_error = 0;             // largest |exact - dense| over all cases
    std::size_t phase_mismatches = 0; // exact-phase disagreements
};

inline constexpr double kOracleTolerance = 1e-9;

/// Random-instance agreement of expectation, overlap_magnitude, entanglement_entropy, multiply and
/// commutator with the dense reference on registers of 1..max_qudits Z4 qudits.
std::vector<SuiteReport> run_oracle_suites(std::uint64_t seed, std::size_t cases, std::size_t max_qudits = 5);

bool passed(const SuiteReport &r);

}  // namespace anomalab::oracle

#endif
