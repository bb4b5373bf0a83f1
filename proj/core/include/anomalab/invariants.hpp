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

#ifndef ANOMALAB_INVARIANTS_HPP
#define ANOMALAB_INVARIANTS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "anomalab/toric_code.hpp"

namespace anomalab::invariants {

using pauli::PauliOperator;
using pauli::PhaseExponent;
using stabilizer::StabilizerState;
using toric::TriangleLabel;

/// Sequence or surfaces that cannot produce a well-defined phase on the given state.
class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The word-reduction and symbolic-collapse evaluations disagree.
class CrossCheckError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

struct StatisticsLetter {
    TriangleLabel label;
    int exponent;
    bool operator==(const StatisticsLetter &other) const = default;
};

using StatisticsSequence = std::vector<StatisticsLetter>;
using SurfaceOperators = std::map<TriangleLabel, PauliOperator>;

/// U_014 U_034 U_023 U_014^-1 U_024^-1 U_012 ... U_023^-1, left to right.
StatisticsSequence twenty_four_step_sequence();
/// "014+ 034+ ..." with one token per letter.
std::string to_string(const StatisticsSequence &seq);
StatisticsSequence parse_sequence(const std::string &text);

/// {012, 023, 034, 014}: the four surfaces whose operators commute pairwise.
std::vector<TriangleLabel> commuting_quadruple();

enum class MembraneKind { bosonic, fermionic };
std::string to_string(MembraneKind kind);

SurfaceOperators surface_operators(const toric::Lattice3D &lattice,
                                   const std::map<TriangleLabel, toric::DualSurface> &surfaces, MembraneKind kind);

pauli::OperatorWord resolve_word(const StatisticsSequence &seq, const SurfaceOperators &ops);

/// Phase of the ordered product of the sequence on the state, cross-checked against symbolic_collapse.
/// Every letter squared must be a strong symmetry of the state and the word must reduce to a scalar.
PhaseExponent generalized_statistics(const StabilizerState &state, const StatisticsSequence &seq,
                                     const SurfaceOperators &ops);

/// generalized_statistics on a Choi state with every letter lifted to the ket register.
PhaseExponent decohered_anomaly(const StabilizerState &choi, const StatisticsSequence &seq,
                                const SurfaceOperators &physical_ops);

using Value = std::variant<std::int64_t, double>;

enum class Relation { at_least, less_than, equal };
std::string to_string(Relation r);

struct ExperimentResult {
    std::string experiment;
    std::vector<std::pair<std::string, Value>> parameters;
    std::string quantity;
    Value value;
    Value bound;
    Relation relation;

    bool pass() const;
};

double as_double(const Value &v);
std::string format_value(const Value &v);

/// S(rho_R) in bits for R the edges of a sub-box, against A = 2(lx ly + ly lz + lx lz).
/// The box lives on the physical register; for a Choi state it is taken on the ket side.
ExperimentResult entropy_bound_experiment(const StabilizerState &state, const toric::Lattice3D &lattice,
                                          const toric::Site &corner, const std::array<int, 3> &extents);

std::int64_t box_face_plaquettes(const std::array<int, 3> &extents);

using StateFamily = std::function<StabilizerState(const toric::Lattice3D &)>;

/// Z on every edge.
StabilizerState zero_product_state(const toric::Lattice3D &lattice);
/// X on every edge.
StabilizerState x_basis_product_state(const toric::Lattice3D &lattice);

/// Smallest fitted slope magnitude, in nats per qudit, that counts as linear decay.
inline constexpr double kMinDecaySlope = 0.01;

/// |<reference_L|target_L>| for cubic lattices L^3, one row per size in increasing order
/// (each must be strictly below the previous overlap, the first below 1), then one row
/// with the least-squares slope of ln|overlap| against qudit count.
std::vector<ExperimentResult> overlap_decay_experiment(std::vector<int> sizes, const std::string &family_name,
                                                       const StateFamily &reference, const StateFamily &target);

/// Least-squares slope of ys against xs.
double fitted_slope(const std::vector<double> &xs, const std::vector<double> &ys);

}  // namespace anomalab::invariants

#endif
