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

#include "anomalab/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace anomalab::invariants {

namespace {

constexpr const char *kTwentyFourStep =
    "014+ 034+ 023+ 014- 024- 012+ 023- 013- 024+ 014+ 013+ 024- "
    "034- 023+ 013- 012- 034+ 024+ 012+ 034- 014- 013+ 012- 023-";

}  // namespace

StatisticsSequence twenty_four_step_sequence() { return parse_sequence(kTwentyFourStep); }

std::string to_string(const StatisticsSequence &seq) {
    std::string out;
    for (const auto &letter : seq) {
        if (!out.empty()) {
            out += ' ';
        }
        out += toric::to_string(letter.label);
        out += letter.exponent > 0 ? '+' : '-';
    }
    return out;
}

StatisticsSequence parse_sequence(const std::string &text) {
    StatisticsSequence seq;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token.size() != 4 || (token.back() != '+' && token.back() != '-')) {
            throw std::invalid_argument("sequence token must look like 014+ or 014-, got '" + token + "'");
        }
        seq.push_back({toric::parse_triangle(token.substr(0, 3)), token.back() == '+' ? 1 : -1});
    }
    return seq;
}

std::vector<TriangleLabel> commuting_quadruple() { return {{1, 2}, {2, 3}, {3, 4}, {1, 4}}; }

std::string to_string(MembraneKind kind) { return kind == MembraneKind::bosonic ? "bosonic" : "fermionic"; }

SurfaceOperators surface_operators(const toric::Lattice3D &lattice,
                                   const std::map<TriangleLabel, toric::DualSurface> &surfaces, MembraneKind kind) {
    SurfaceOperators ops;
    for (const auto &[label, surface] : surfaces) {
        ops[label] = kind == MembraneKind::bosonic ? toric::membrane_bosonic(lattice, surface)
                                                   : toric::membrane_fermionic(lattice, surface);
    }
    return ops;
}

pauli::OperatorWord resolve_word(const StatisticsSequence &seq, const SurfaceOperators &ops) {
    pauli::OperatorWord word;
    std::map<TriangleLabel, std::size_t> ids;
    for (const auto &letter : seq) {
        auto it = ids.find(letter.label);
        if (it == ids.end()) {
            auto op = ops.find(letter.label);
            if (op == ops.end()) {
                throw PreconditionError("no surface operator for label " + toric::to_string(letter.label));
            }
            it = ids.emplace(letter.label, word.add_symbol(op->second)).first;
        }
        word.push(it->second, letter.exponent);
    }
    return word;
}

PhaseExponent generalized_statistics(const StabilizerState &state, const StatisticsSequence &seq,
                                     const SurfaceOperators &ops) {
    const auto d = state.qudit_dimension();
    if (seq.empty()) {
        return PhaseExponent(0, d);
    }
    if (!state.is_complete()) {
        throw PreconditionError("generalized statistics needs a complete state");
    }
    pauli::OperatorWord word = resolve_word(seq, ops);
    for (const auto &op : word.alphabet()) {
        if (op.num_qudits() != state.num_qudits() || op.qudit_dimension() != d) {
            throw PreconditionError("surface operator does not act on the state's register");
        }
        // U^2 must act as a phase on the state; otherwise the open operators do not define a statistics process
        if (!stabilizer::expectation(state, pauli::power(op, 2))) {
            throw PreconditionError("squared surface operator has zero expectation on the state");
        }
    }
    auto reduced = pauli::reduce_word(word);
    if (!reduced.residual.is_phaseless_identity()) {
        throw PreconditionError("sequence does not return to its starting configuration");
    }
    auto product = PauliOperator::identity(state.num_qudits(), d).with_phase(reduced.phase);
    auto theta = stabilizer::expectation(state, product);
    if (!theta) {
        throw PreconditionError("zero expectation for the sequence product");
    }
    auto collapse = pauli::symbolic_collapse(word, {});
    if (!(collapse.phase == *theta)) {
        throw CrossCheckError("symbolic collapse gives " + pauli::to_string(collapse.phase) + " but the word product gives " +
                              pauli::to_string(*theta));
    }
    return *theta;
}

PhaseExponent decohered_anomaly(const StabilizerState &choi, const StatisticsSequence &seq,
                                const SurfaceOperators &physical_ops) {
    if (choi.num_qudits() % 2 != 0) {
        throw std::invalid_argument("Choi register must have even size");
    }
    toric::ChoiRegister reg(choi.num_qudits() / 2);
    SurfaceOperators lifted;
    for (const auto &[label, op] : physical_ops) {
        lifted[label] = reg.lift_ket(op);
    }
    return generalized_statistics(choi, seq, lifted);
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::at_least:
            return ">=";
        case Relation::less_than:
            return "<";
        case Relation::equal:
            return "==";
    }
    return "?";
}

double as_double(const Value &v) {
    return std::visit([](auto x) { return static_cast<double>(x); }, v);
}

std::string format_value(const Value &v) {
    if (std::holds_alternative<std::int64_t>(v)) {
        return std::to_string(std::get<std::int64_t>(v));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(v));
    return buf;
}

namespace {

int compare(const Value &a, const Value &b) {
    if (std::holds_alternative<std::int64_t>(a) && std::holds_alternative<std::int64_t>(b)) {
        auto x = std::get<std::int64_t>(a), y = std::get<std::int64_t>(b);
        return x < y ? -1 : (x > y ? 1 : 0);
    }
    double x = as_double(a), y = as_double(b);
    return x < y ? -1 : (x > y ? 1 : 0);
}

}  // namespace

bool ExperimentResult::pass() const {
    int c = compare(value, bound);
    switch (relation) {
        case Relation::at_least:
            return c >= 0;
        case Relation::less_than:
            return c < 0;
        case Relation::equal:
            return c == 0;
    }
    return false;
}

std::int64_t box_face_plaquettes(const std::array<int, 3> &e) {
    return 2 * (static_cast<std::int64_t>(e[0]) * e[1] + static_cast<std::int64_t>(e[1]) * e[2] +
                static_cast<std::int64_t>(e[0]) * e[2]);
}

ExperimentResult entropy_bound_experiment(const StabilizerState &state, const toric::Lattice3D &lattice,
                                          const toric::Site &corner, const std::array<int, 3> &extents) {
    const std::size_t n = lattice.num_edges();
    bool choi = state.num_qudits() == 2 * n;
    if (!choi && state.num_qudits() != n) {
        throw std::invalid_argument("state does not live on this lattice");
    }
    auto edges = lattice.box_edges(corner, extents);
    double bits = stabilizer::entanglement_entropy(state, stabilizer::Region(edges));
    // span sizes are powers of two for d = 4, so the entropy is an integer number of bits
    double rounded = std::round(bits);
    if (std::abs(bits - rounded) > 1e-9) {
        throw std::logic_error("non-integer entropy for a Z4 stabilizer state");
    }
    ExperimentResult r;
    r.experiment = "entropy";
    r.parameters = {{"lx", std::int64_t{lattice.dims()[0]}},
                    {"ly", std::int64_t{lattice.dims()[1]}},
                    {"lz", std::int64_t{lattice.dims()[2]}},
                    {"register", std::int64_t{choi ? 2 : 1}},
                    {"box_x", std::int64_t{extents[0]}},
                    {"box_y", std::int64_t{extents[1]}},
                    {"box_z", std::int64_t{extents[2]}}};
    r.quantity = "entropy_bits";
    r.value = static_cast<std::int64_t>(rounded);
    r.bound = box_face_plaquettes(extents);
    r.relation = Relation::at_least;
    return r;
}

namespace {

StabilizerState product_state(const toric::Lattice3D &lattice, bool x_basis) {
    const std::size_t n = lattice.num_edges();
    std::vector<PauliOperator> gens;
    gens.reserve(n);
    for (std::size_t q = 0; q < n; q++) {
        gens.push_back(x_basis ? PauliOperator::single(n, toric::kQuditDimension, q, 1, 0)
                               : PauliOperator::single(n, toric::kQuditDimension, q, 0, 1));
    }
    return StabilizerState(std::move(gens));
}

}  // namespace

StabilizerState zero_product_state(const toric::Lattice3D &lattice) { return product_state(lattice, false); }
StabilizerState x_basis_product_state(const toric::Lattice3D &lattice) { return product_state(lattice, true); }

double fitted_slope(const std::vector<double> &xs, const std::vector<double> &ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw std::invalid_argument("slope fit needs at least two paired points");
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    if (sxx == 0) {
        throw std::invalid_argument("slope fit needs distinct x values");
    }
    return sxy / sxx;
}

std::vector<ExperimentResult> overlap_decay_experiment(std::vector<int> sizes, const std::string &family_name,
                                                       const StateFamily &reference, const StateFamily &target) {
    std::sort(sizes.begin(), sizes.end());
    if (std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end()) {
        throw std::invalid_argument("overlap sizes must be distinct");
    }
    if (sizes.size() < 3) {
        throw std::invalid_argument("overlap decay needs at least three sizes");
    }
    std::vector<ExperimentResult> rows;
    std::vector<double> ns, logs;
    double previous = 1.0;
    for (int L : sizes) {
        toric::Lattice3D lattice(L, L, L);
        double ov = stabilizer::overlap_magnitude(reference(lattice), target(lattice));
        ExperimentResult r;
        r.experiment = "overlap";
        r.parameters = {{"lx", std::int64_t{L}}, {"ly", std::int64_t{L}}, {"lz", std::int64_t{L}},
                        {"qudits", static_cast<std::int64_t>(lattice.num_edges())}};
        r.quantity = "overlap_" + family_name;
        r.value = ov;
        r.bound = previous;
        r.relation = Relation::less_than;
        rows.push_back(r);
        previous = ov;
        ns.push_back(static_cast<double>(lattice.num_edges()));
        logs.push_back(ov > 0 ? std::log(ov) : -INFINITY);
    }
    ExperimentResult trend;
    trend.experiment = "overlap";
    trend.parameters = {{"sizes", static_cast<std::int64_t>(sizes.size())}};
    trend.quantity = "log_overlap_slope_" + family_name;
    bool finite = std::all_of(logs.begin(), logs.end(), [](double v) { return std::isfinite(v); });
    trend.value = finite ? fitted_slope(ns, logs) : 0.0;
    trend.bound = -kMinDecaySlope;
    trend.relation = Relation::less_than;
    rows.push_back(trend);
    return rows;
}

}  // namespace anomalab::invariants
