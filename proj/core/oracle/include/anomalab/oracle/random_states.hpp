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

#ifndef ANOMALAB_ORACLE_RANDOM_STATES_HPP
#define ANOMALAB_ORACLE_RANDOM_STATES_HPP

#include <random>

#include "anomalab/pauli.hpp"
#include "anomalab/stabilizer_state.hpp"

namespace anomalab::oracle {

/// Uniform exponents; the phase covers all of Z_{2d} when `half_phases`, else even values only.
pauli::PauliOperator random_pauli(std::size_t n, std::uint32_t d, std::mt19937_64 &rng, bool half_phases = false);

/// Product of random single-qudit stabilizer groups, scrambled by random symplectic gates,
/// phase-fixed so that every generator has order relation g^m = 1, then shifted by a random Pauli frame.
/// For d = 4 the single-qudit groups are <Z>, <X>, <X^2, Z^2> and <omega^{1/2} X Z>.
stabilizer::StabilizerState random_stabilizer_state(std::size_t n, std::uint32_t d, std::mt19937_64 &rng,
                                                    int gates = 20);

}  // namespace anomalab::oracle

#endif
