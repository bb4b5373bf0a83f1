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

#include "anomalab/oracle/suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "anomalab/oracle/dense.hpp"
#include "anomalab/oracle/random_states.hpp"

namespace anomalab::oracle {

namespace {

constexpr std::uint32_t kD = 4;
// dense values this far from the exact answer count as a wrong exact phase, not rounding
constexpr double kPhaseSlack = 1e-6;

void record(SuiteReport &r, double error) {
    r.cases++;
    r.max_error = std::max(r.max_error, error);
    if (error > kPhaseSlack) {
        r.phase_mismatches++;
    }
}

Vector random_vector(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    Vector v(static_cast<Eigen::Index>(dense_dimension(n, kD)));
    for (auto &c : v) {
        c = {normal(rng), normal(rng)};
    }
    return v / v.norm();
}

// A random element of the stabilizer group, so that expectations are nonzero.
pauli::PauliOperator random_group_element(const stabilizer::StabilizerState &s, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> exponent(0, 2 * kD - 1);
    auto P = pauli::PauliOperator::identity(s.num_qudits(), kD);
    for (const auto &g : s.generators()) {
        P = pauli::multiply(P, pauli::power(g, exponent(rng)));
    }
    return P;
}

std::size_t random_size(std::mt19937_64 &rng, std::size_t max_qudits) {
    return std::uniform_int_distribution<std::size_t>(1, max_qudits)(rng);
}

}  // namespace

bool passed(const SuiteReport &r) { return r.cases > 0 && r.phase_mismatches == 0 && r.max_error <= kOracleTolerance; }

std::vector<SuiteReport> run_oracle_suites(std::uint64_t seed, std::size_t cases, std::size_t max_qudits) {
    std::mt19937_64 rng(seed);
    SuiteReport expect{"expectation"}, overlap{"overlap_magnitude"}, entropy{"entanglement_entropy"},
        mult{"multiply"}, comm{"commutator"};
    std::bernoulli_distribution coin(0.5);

    for (std::size_t c = 0; c < cases; c++) {
        std::size_t n = random_size(rng, max_qudits);
        auto s = random_stabilizer_state(n, kD, rng);
        Vector psi = dense_state(s, rng());
        auto P = coin(rng) ? random_group_element(s, rng) : random_pauli(n, kD, rng, true);
        auto exact = stabilizer::expectation(s, P);
        std::complex<double> want = exact ? exact->to_complex() : std::complex<double>(0.0, 0.0);
        record(expect, std::abs(want - dense_expectation(psi, P)));
    }

    for (std::size_t c = 0; c < cases; c++) {
        std::size_t n = random_size(rng, max_qudits);
        auto s1 = random_stabilizer_state(n, kD, rng);
        stabilizer::StabilizerState s2 = s1;
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
            case 0:
                s2 = random_stabilizer_state(n, kD, rng);
                break;
            case 1:
                s2 = stabilizer::apply_pauli(s1, random_pauli(n, kD, rng));
                break;
            default:
                break;
        }
        double exact = stabilizer::overlap_magnitude(s1, s2);
        record(overlap, std::abs(exact - dense_overlap(dense_state(s1, rng()), dense_state(s2, rng()))));
    }

    for (std::size_t c = 0; c < cases; c++) {
        std::size_t n = random_size(rng, max_qudits);
        auto s = random_stabilizer_state(n, kD, rng);
        std::vector<std::size_t> qudits;
        for (std::size_t q = 0; q < n; q++) {
            if (coin(rng)) {
                qudits.push_back(q);
            }
        }
        stabilizer::Region R(qudits);
        double exact = stabilizer::entanglement_entropy(s, R);
        record(entropy, std::abs(exact - dense_entropy(dense_state(s, rng()), n, kD, R)));
    }

    for (std::size_t c = 0; c < cases; c++) {
        std::size_t n = random_size(rng, max_qudits);
        auto P = random_pauli(n, kD, rng, true);
        auto Q = random_pauli(n, kD, rng, true);
        Vector v = random_vector(n, rng);
        Vector PQv = apply_dense(P, apply_dense(Q, v));
        record(mult, (apply_dense(pauli::multiply(P, Q), v) - PQv).cwiseAbs().maxCoeff());
        // PQ = [P, Q] QP
        Vector QPv = apply_dense(Q, apply_dense(P, v));
        record(comm, (PQv - pauli::commutator(P, Q).to_complex() * QPv).cwiseAbs().maxCoeff());
    }
    return {expect, overlap, entropy, mult, comm};
}

}  // namespace anomalab::oracle
