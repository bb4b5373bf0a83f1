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

#include "driver.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "anomalab/oracle/suites.hpp"
#include "anomalab/report.hpp"

namespace anomalab::cli {

using invariants::ExperimentResult;
using invariants::Relation;
using invariants::Value;
using stabilizer::StabilizerState;

namespace {

const std::vector<std::string> kExperiments{"invariant", "decohere", "entropy", "overlap", "selftest"};

std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(trim(cur));
    }
    return out;
}

long long parse_integer(const std::string &s, const std::string &key) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError("expected an integer for '" + key + "', got '" + s + "'");
    }
    return v;
}

std::array<int, 3> parse_triple(const std::string &s, const std::string &key) {
    auto parts = split(s, ',');
    if (parts.size() != 3) {
        throw ConfigError("expected three comma-separated integers for '" + key + "', got '" + s + "'");
    }
    std::array<int, 3> out{};
    for (int a = 0; a < 3; a++) {
        out[a] = static_cast<int>(parse_integer(parts[a], key));
    }
    return out;
}

Value param(long long v) { return static_cast<std::int64_t>(v); }

std::vector<std::pair<std::string, Value>> lattice_params(const toric::Lattice3D &lattice) {
    return {{"lx", param(lattice.dims()[0])}, {"ly", param(lattice.dims()[1])}, {"lz", param(lattice.dims()[2])}};
}

ExperimentResult make_row(const std::string &experiment, std::vector<std::pair<std::string, Value>> params,
                          const std::string &quantity, Value value, Value bound, Relation relation) {
    ExperimentResult r;
    r.experiment = experiment;
    r.parameters = std::move(params);
    r.quantity = quantity;
    r.value = value;
    r.bound = bound;
    r.relation = relation;
    return r;
}

// strong(+1) = 2, strong(other phase) = 3, weak-only = 1, none = 0
std::int64_t class_code(const toric::SymmetryClass &c) {
    switch (c.kind) {
        case toric::SymmetryKind::strong:
            return c.phase && c.phase->is_zero() ? 2 : 3;
        case toric::SymmetryKind::weak_only:
            return 1;
        case toric::SymmetryKind::none:
            return 0;
    }
    return 0;
}

std::vector<std::size_t> select_edges(const toric::Lattice3D &lattice, const std::string &selector) {
    if (selector == "all") {
        return toric::all_edges(lattice);
    }
    if (selector == "none") {
        return {};
    }
    std::vector<std::size_t> out;
    for (const auto &tok : split(selector, ',')) {
        long long e = parse_integer(tok, "edges");
        if (e < 0) {
            throw ConfigError("edge indices must be non-negative");
        }
        out.push_back(static_cast<std::size_t>(e));
    }
    return out;
}

std::string sign_text(const pauli::PhaseExponent &p) {
    switch (p.real_sign()) {
        case 1:
            return "+1";
        case -1:
            return "-1";
        default:
            return pauli::to_string(p);
    }
}

std::vector<std::pair<std::string, Value>> placement_params(const toric::Lattice3D &lattice,
                                                            const toric::SurfacePlacement &p) {
    auto params = lattice_params(lattice);
    params.push_back({"anchor_x", param(p.anchor[0])});
    params.push_back({"anchor_y", param(p.anchor[1])});
    params.push_back({"anchor_z", param(p.anchor[2])});
    params.push_back({"scale", param(p.scale)});
    return params;
}

RunOutcome run_invariant(const ExperimentConfig &c) {
    toric::Lattice3D lattice(c.lattice[0], c.lattice[1], c.lattice[2]);
    auto ground = toric::build_ground_state(lattice, {c.sector});
    auto ops = invariants::surface_operators(lattice, toric::sigma_surfaces(lattice, c.placement), c.membrane);
    auto theta = invariants::generalized_statistics(ground, invariants::twenty_four_step_sequence(), ops);
    std::int64_t expected = c.membrane == invariants::MembraneKind::fermionic ? -1 : 1;
    RunOutcome out;
    out.results.push_back(make_row("invariant", placement_params(lattice, c.placement),
                                   "U_Theta_" + invariants::to_string(c.membrane), param(theta.real_sign()),
                                   param(expected), Relation::equal));
    out.summary = "invariant: U_Theta = " + sign_text(theta) + " (" + invariants::to_string(c.membrane) +
                  " surfaces, L = " + std::to_string(c.lattice[0]) + "x" + std::to_string(c.lattice[1]) + "x" +
                  std::to_string(c.lattice[2]) + ", scale " + std::to_string(c.placement.scale) + ")";
    return out;
}

StabilizerState decohered_state(const ExperimentConfig &c, const toric::Lattice3D &lattice,
                                const StabilizerState &ground) {
    return toric::decohere_choi(lattice, ground, select_edges(lattice, c.edges));
}

RunOutcome run_decohere(const ExperimentConfig &c) {
    toric::Lattice3D lattice(c.lattice[0], c.lattice[1], c.lattice[2]);
    auto ground = toric::build_ground_state(lattice, {c.sector});
    auto edges = select_edges(lattice, c.edges);
    auto choi = toric::decohere_choi(lattice, ground, edges);
    const std::size_t n = lattice.num_edges();
    auto params = lattice_params(lattice);
    params.push_back({"decohered_edges", param(static_cast<long long>(edges.size()))});
    params.push_back({"line_sector", param(c.sector == toric::LogicalBasis::line ? 1 : 0)});
    RunOutcome out;
    auto row = [&](const std::string &q, Value v, Value b, Relation r) {
        out.results.push_back(make_row("decohere", params, q, v, b, r));
    };

    row("choi_group_log2", param(std::llround(choi.group_log2_size())), param(static_cast<long long>(4 * n)),
        Relation::equal);
    std::int64_t bad_projectors = 0;
    toric::ChoiRegister reg(n);
    for (auto e : edges) {
        auto v = stabilizer::expectation(choi, reg.lift_pair(toric::error_operator(lattice, e)));
        if (!v || !v->is_zero()) {
            bad_projectors++;
        }
    }
    row("projectors_not_stabilized", param(bad_projectors), param(0), Relation::equal);

    auto closed = toric::DualSurface::enclosing_box(lattice, c.box_corner, {1, 1, 1});
    row("class_closed_Sf", param(class_code(toric::classify_symmetry(choi, toric::membrane_fermionic(lattice, closed)))),
        param(2), Relation::equal);
    auto sigmas = toric::sigma_surfaces(lattice, c.placement);
    auto open = toric::membrane_fermionic(lattice, sigmas.at({1, 3}));
    row("class_open_Sf_squared", param(class_code(toric::classify_symmetry(choi, pauli::power(open, 2)))), param(2),
        Relation::equal);
    if (std::find(edges.begin(), edges.end(), std::size_t{0}) != edges.end()) {
        row("class_X2_edge0", param(class_code(toric::classify_symmetry(choi, toric::edge_x_squared(lattice, 0)))),
            param(2), Relation::less_than);
    }
    bool full = edges.size() == n;
    if (full || edges.empty()) {
        // membrane sector: S_b is strong before and after (closed S_f = S_b commutes with every error
        // operator) and the Z^2 line flips it. Line sector: roles swap before decoherence, both weak after.
        bool line = c.sector == toric::LogicalBasis::line;
        std::int64_t want_sb = line ? (full ? 1 : 0) : 2;
        std::int64_t want_line = line ? (full ? 1 : 2) : 0;
        row("class_logical_Sb",
            param(class_code(toric::classify_symmetry(choi, toric::logical_membranes(lattice)[0]))), param(want_sb),
            Relation::equal);
        row("class_wilson_line_Z2", param(class_code(toric::classify_symmetry(choi, toric::wilson_line(lattice, 0, 2)))),
            param(want_line), Relation::equal);
    }
    auto ops = invariants::surface_operators(lattice, sigmas, c.membrane);
    auto theta = invariants::decohered_anomaly(choi, invariants::twenty_four_step_sequence(), ops);
    row("U_Theta_decohered", param(theta.real_sign()),
        param(c.membrane == invariants::MembraneKind::fermionic ? -1 : 1), Relation::equal);
    out.summary = "decohere: " + std::to_string(edges.size()) + " of " + std::to_string(n) +
                  " edges, decohered U_Theta = " + sign_text(theta);
    return out;
}

std::vector<std::array<int, 3>> entropy_boxes(const ExperimentConfig &c) {
    if (!c.boxes.empty()) {
        return c.boxes;
    }
    std::vector<std::array<int, 3>> boxes{{0, 0, 0}};
    for (int x = 1; x <= c.lattice[0] / 2; x++) {
        for (int y = 1; y <= c.lattice[1] / 2; y++) {
            for (int z = 1; z <= c.lattice[2] / 2; z++) {
                boxes.push_back({x, y, z});
            }
        }
    }
    return boxes;
}

RunOutcome run_entropy(const ExperimentConfig &c) {
    toric::Lattice3D lattice(c.lattice[0], c.lattice[1], c.lattice[2]);
    auto ground = toric::build_ground_state(lattice, {c.sector});
    StabilizerState state = c.edges == "none" ? ground : decohered_state(c, lattice, ground);
    RunOutcome out;
    std::size_t passed = 0;
    for (const auto &box : entropy_boxes(c)) {
        out.results.push_back(invariants::entropy_bound_experiment(state, lattice, c.box_corner, box));
        passed += out.results.back().pass() ? 1 : 0;
    }
    out.summary = "entropy: " + std::to_string(passed) + " of " + std::to_string(out.results.size()) +
                  " boxes satisfy S >= A bits";
    return out;
}

RunOutcome run_overlap(const ExperimentConfig &c) {
    RunOutcome out;
    auto target = [&](const toric::Lattice3D &lattice) { return toric::build_ground_state(lattice, {c.sector}); };
    std::string notes;
    for (const auto &family : c.families) {
        invariants::StateFamily reference;
        if (family == "zero") {
            reference = invariants::zero_product_state;
        } else if (family == "xbasis") {
            reference = invariants::x_basis_product_state;
        } else {
            throw ConfigError("unknown product family '" + family + "'");
        }
        auto rows = invariants::overlap_decay_experiment(c.sizes, family, reference, target);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g", invariants::as_double(rows.back().value));
        notes += (notes.empty() ? "" : ", ") + family + " slope " + buf;
        out.results.insert(out.results.end(), rows.begin(), rows.end());
    }
    out.summary = "overlap: " + notes + " nats per qudit";
    return out;
}

RunOutcome run_selftest(const ExperimentConfig &c) {
    RunOutcome out;
    std::vector<std::pair<std::string, Value>> params{{"seed", param(static_cast<long long>(c.seed))},
                                                      {"cases", param(static_cast<long long>(c.cases))}};
    std::size_t ok = 0;
    auto suites = oracle::run_oracle_suites(c.seed, c.cases);
    for (const auto &s : suites) {
        out.results.push_back(make_row("selftest", params, "max_error_" + s.name, s.max_error,
                                       oracle::kOracleTolerance, Relation::less_than));
        out.results.push_back(make_row("selftest", params, "phase_mismatches_" + s.name,
                                       param(static_cast<long long>(s.phase_mismatches)), param(0), Relation::equal));
        ok += oracle::passed(s) ? 1 : 0;
    }
    out.summary = "selftest: " + std::to_string(ok) + " of " + std::to_string(suites.size()) +
                  " oracle suites agree (" + std::to_string(c.cases) + " cases each)";
    return out;
}

void write_artifacts(const ExperimentConfig &c, const std::vector<ExperimentResult> &results) {
    if (c.out.empty()) {
        return;
    }
    report::emit_report(results, c.out);
    std::filesystem::path jsonl(c.out);
    jsonl.replace_extension(".jsonl");
    if (jsonl.string() != c.out) {
        report::emit_jsonl(results, jsonl.string());
    }
}

}  // namespace

bool is_experiment(const std::string &name) {
    return std::find(kExperiments.begin(), kExperiments.end(), name) != kExperiments.end();
}

std::vector<int> parse_int_list(const std::string &text) {
    std::vector<int> out;
    for (const auto &tok : split(text, ',')) {
        out.push_back(static_cast<int>(parse_integer(tok, "list")));
    }
    if (out.empty()) {
        throw ConfigError("empty integer list");
    }
    return out;
}

ExperimentConfig parse_config(const std::string &text, ExperimentConfig c) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "experiment") {
            if (!is_experiment(value)) {
                throw ConfigError("unknown experiment '" + value + "'");
            }
            c.experiment = value;
        } else if (key == "lattice") {
            c.lattice = parse_triple(value, key);
        } else if (key == "anchor") {
            c.placement.anchor = parse_triple(value, key);
        } else if (key == "scale") {
            c.placement.scale = static_cast<int>(parse_integer(value, key));
        } else if (key == "edges") {
            if (value != "all" && value != "none") {
                parse_int_list(value);
            }
            c.edges = value;
        } else if (key == "membrane") {
            if (value == "fermionic") {
                c.membrane = invariants::MembraneKind::fermionic;
            } else if (value == "bosonic") {
                c.membrane = invariants::MembraneKind::bosonic;
            } else {
                throw ConfigError("membrane must be fermionic or bosonic");
            }
        } else if (key == "sector") {
            if (value == "membrane") {
                c.sector = toric::LogicalBasis::membrane;
            } else if (value == "line") {
                c.sector = toric::LogicalBasis::line;
            } else {
                throw ConfigError("sector must be membrane or line");
            }
        } else if (key == "boxes") {
            c.boxes.clear();
            for (const auto &b : split(value, ';')) {
                c.boxes.push_back(parse_triple(b, key));
            }
        } else if (key == "box_corner") {
            c.box_corner = parse_triple(value, key);
        } else if (key == "sizes") {
            c.sizes = parse_int_list(value);
        } else if (key == "families") {
            c.families = split(value, ',');
        } else if (key == "out") {
            c.out = value;
        } else if (key == "seed") {
            c.seed = static_cast<std::uint64_t>(parse_integer(value, key));
        } else if (key == "cases") {
            long long v = parse_integer(value, key);
            if (v <= 0) {
                throw ConfigError("cases must be positive");
            }
            c.cases = static_cast<std::size_t>(v);
        } else {
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    for (int a = 0; a < 3; a++) {
        if (c.lattice[a] < 1) {
            throw ConfigError("lattice extents must be positive");
        }
    }
    return c;
}

ExperimentConfig load_config(const std::string &path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), std::move(base));
}

RunOutcome run(const ExperimentConfig &config) {
    RunOutcome out;
    try {
        if (config.experiment == "invariant") {
            out = run_invariant(config);
        } else if (config.experiment == "decohere") {
            out = run_decohere(config);
        } else if (config.experiment == "entropy") {
            out = run_entropy(config);
        } else if (config.experiment == "overlap") {
            out = run_overlap(config);
        } else if (config.experiment == "selftest") {
            out = run_selftest(config);
        } else {
            throw ConfigError("unknown experiment '" + config.experiment + "'");
        }
        bool all = std::all_of(out.results.begin(), out.results.end(), [](const auto &r) { return r.pass(); });
        out.status = all && !out.results.empty() ? kOk : kFailed;
        out.summary += all ? " PASS" : " FAIL";
        write_artifacts(config, out.results);
    } catch (const ConfigError &e) {
        return {kConfigError, std::string("config error: ") + e.what(), {}};
    } catch (const invariants::CrossCheckError &e) {
        return {kInternalError, std::string("internal disagreement: ") + e.what(), {}};
    } catch (const std::invalid_argument &e) {
        return {kPreconditionError, std::string("precondition failed: ") + e.what(), {}};
    } catch (const std::out_of_range &e) {
        return {kPreconditionError, std::string("precondition failed: ") + e.what(), {}};
    } catch (const std::runtime_error &e) {
        return {kPreconditionError, std::string("error: ") + e.what(), {}};
    } catch (const std::logic_error &e) {
        return {kInternalError, std::string("internal error: ") + e.what(), {}};
    }
    return out;
}

}  // namespace anomalab::cli
