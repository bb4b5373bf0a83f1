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

#ifndef ANOMALAB_ORACLE_DENSE_HPP
#define ANOMALAB_ORACLE_DENSE_HPP

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "anomalab/pauli.hpp"
#include "anomalab/stabilizer_state.hpp"

// Brute-force state-vector reference for small registers. Basis states |j_0 ... j_{n-1}>
// are indexed with qudit 0 most significant; X|j> = |j+1>, Z|j> = omega^j |j>.
namespace anomalab::oracle {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr std::size_t kMaxDenseQudits = 6;

std::size_t dense_dimension(std::size_t n, std::uint32_t d);

Vector apply_dense(const pauli::PauliOperator &P, const Vector &v);
Matrix dense_pauli(const pauli::PauliOperator &P);

/// Normalized common +1 eigenvector, built by applying the group-average projector of every
/// generator to a seeded random vector.
Vector dense_state(const stabilizer::StabilizerState &s, std::uint64_t seed = 1);

std::complex<double> dense_expectation(const Vector &psi, const pauli::PauliOperator &P);
double dense_overlap(const Vector &a, const Vector &b);
/// Von Neumann entropy in bits of the reduced density matrix on R.
double dense_entropy(const Vector &psi, std::size_t n, std::uint32_t d, const stabilizer::Region &R);

}  // namespace anomalab::oracle

#endif
