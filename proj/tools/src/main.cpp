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

#include <iostream>
#include <utility>

#include "CLI11.hpp"
#include "anomalab/version.hpp"
#include "driver.hpp"

int main(int argc, char **argv) {
    using namespace anomalab;
    CLI::App app{"anomalab experiment driver"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string config_path, out_path, sizes;
    std::int64_t seed = -1;
    app.add_option("--config", config_path, "flat key = value config file");
    app.add_option("--out", out_path, "CSV output path (JSONL written alongside)");
    app.add_option("--seed", seed, "seed for randomized suites");
    app.add_option("--sizes", sizes, "comma list of lattice sizes for the overlap experiment");
    app.fallthrough();
    const std::pair<const char *, const char *> subcommands[] = {
        {"invariant", "24-step statistics of the Sigma surfaces on the ground state"},
        {"decohere", "symmetry classes and statistics after p = 1/2 decoherence"},
        {"entropy", "entanglement entropy of sub-boxes against the area bound"},
        {"overlap", "overlap decay between product states and the ground state"},
        {"selftest", "exact engine against dense matrix oracles"},
    };
    for (const auto &[name, help] : subcommands) {
        app.add_subcommand(name, help);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : cli::kConfigError;
    }

    cli::ExperimentConfig config;
    try {
        if (!config_path.empty()) {
            config = cli::load_config(config_path);
        }
        std::string chosen = app.get_subcommands().front()->get_name();
        if (!config.experiment.empty() && config.experiment != chosen) {
            throw cli::ConfigError("config selects '" + config.experiment + "' but the command is '" + chosen + "'");
        }
        config.experiment = chosen;
        if (!out_path.empty()) {
            config.out = out_path;
        }
        if (seed >= 0) {
            config.seed = static_cast<std::uint64_t>(seed);
        }
        if (!sizes.empty()) {
            config.sizes = cli::parse_int_list(sizes);
        }
    } catch (const cli::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kConfigError;
    }

    auto outcome = cli::run(config);
    (outcome.status == cli::kOk || outcome.status == cli::kFailed ? std::cout : std::cerr) << outcome.summary << "\n";
    return outcome.status;
}
