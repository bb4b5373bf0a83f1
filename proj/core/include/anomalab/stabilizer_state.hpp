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

#ifndef ANOMALAB_STABILIZER_STATE_HPP
#define ANOMALAB_STABILIZER_STATE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "anomalab/pauli.hpp"
#include "anomalab/zmod.hpp"

namespace anomalab::stabilizer {

using pauli::PauliOperator;
using pauli::PhaseExponent;

/// Thrown when generators fail to commute or generate a nontrivial scalar.
class InconsistentGenerators : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation needs a complete (pure, unique) state.
class IncompleteState : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Sorted set of qudit indices.
class Region {
   public:
    Region() = default;
    explicit Region(std::vector<std::size_t> qudits);

    const std::vector<std::size_t> &qudits() const { return qudits_; }
    std::size_t size() const { return qudits_.size(); }
    Region complement(std::size_t n) const;

   private:
    std::vector<std::size_t> qudits_;
};

/// State stabilized by a commuting, phase-consistent set of Paulis.
class StabilizerState {
   public:
    enum class Completeness { required, optional };

    explicit StabilizerState(std::vector<PauliOperator> generators, Completeness completeness = Completeness::required);

    std::size_t num_qudits() const { return n_; }
    std::uint32_t qudit_dimension() const { return d_; }
    const std::vector<PauliOperator> &generators() const { return generators_; }
    /// One phaseful generator per Howell row of the (x|z) matrix.
    const std::vector<PauliOperator> &canonical_generators() const { return canonical_; }
    const zmod::ZModMatrix &howell_matrix() const { return howell_; }
    /// log2 of the number of distinct phaseless group elements.
    double group_log2_size() const;
    bool is_complete() const { return complete_; }

    /// Product of canonical generators with the same phaseless part as P, as a word, if one exists.
    std::optional<pauli::OperatorWord> witness(const PauliOperator &P) const;
    /// The phase f with P = f * g for some group element g; no completeness requirement.
    std::optional<PhaseExponent> group_phase(const PauliOperator &P) const;

   private:
    struct Canonical {};
    StabilizerState(Canonical, std::vector<PauliOperator> generators, std::vector<PauliOperator> canonical,
                    zmod::ZModMatrix howell, std::vector<std::size_t> leads, std::size_t n, std::uint32_t d,
                    bool complete);
    friend StabilizerState apply_pauli(const StabilizerState &s, const PauliOperator &P);

    std::size_t n_ = 0;
    std::uint32_t d_ = 4;
    std::vector<PauliOperator> generators_;
    std::vector<PauliOperator> canonical_;
    zmod::ZModMatrix howell_;
    std::vector<std::size_t> leads_;
    bool complete_ = false;
};

/// <psi|P|psi>: a phase when P is in the group up to phase, otherwise nothing (zero).
std::optional<PhaseExponent> expectation(const StabilizerState &s, const PauliOperator &P);

/// The state P|psi>.
StabilizerState apply_pauli(const StabilizerState &s, const PauliOperator &P);

/// Von Neumann entropy of the reduced state on R, in bits.
double entanglement_entropy(const StabilizerState &s, const Region &R);

/// |<psi1|psi2>|.
double overlap_magnitude(const StabilizerState &s1, const StabilizerState &s2);

/// Generators in the Pauli text format, one per line.
std::string to_text(const StabilizerState &s);
StabilizerState from_text(const std::string &text, std::size_t n, std::uint32_t d);

}  // namespace anomalab::stabilizer

#endif
