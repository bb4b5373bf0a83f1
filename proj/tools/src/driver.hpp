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

#ifndef ANOMALAB_TOOLS_DRIVER_HPP
#define ANOMALAB_TOOLS_DRIVER_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "anomalab/invariants.hpp"

namespace anomalab::cli {

enum ExitStatus : int {
    kOk = 0,
    kFailed = 1,
    kConfigError = 2,
    kPreconditionError = 3,
    kInternalError = 4,
};

class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::string experiment;  // invariant | decohere | entropy | overlap | selftest
    std::array<int, 3> lattice{3, 3, 3};
    toric::SurfacePlacement placement;
    std::string edges = "all";  // all | none | comma-separated edge indices
    invariants::MembraneKind membrane = invariants::MembraneKind::fermionic;
    toric::LogicalBasis sector = toric::LogicalBasis::membrane;
    std::vector<std::array<int, 3>> boxes;  // empty: every box with extents in [1, L/2], plus the empty box
    toric::Site box_corner{0, 0, 0};
    std::vector<int> sizes{2, 3, 4};
    std::vector<std::string> families{"zero", "xbasis"};
    std::string out;  // CSV path; JSONL goes next to it with extension .jsonl
    std::uint64_t seed = 1;
    std::size_t cases = 200;
};

bool is_experiment(const std::string &name);

/// Flat `key = value` lines; `#` starts a comment. Keys not listed in ExperimentConfig are errors.
ExperimentConfig parse_config(const std::string &text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string &path, ExperimentConfig base = {});

std::vector<int> parse_int_list(const std::string &text);

struct RunOutcome {
    int status = kOk;
    std::string summary;
    std::vector<invariants::ExperimentResult> results;
};

/// Runs the experiment and writes artifacts when `out` is set. Never throws for experiment errors;
/// they are mapped onto the exit statuses.
RunOutcome run(const ExperimentConfig &config);

}  // namespace anomalab::cli

#endif
