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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "anomalab/oracle/dense.hpp"
#include "anomalab/oracle/random_states.hpp"
#include "anomalab/oracle/suites.hpp"

using namespace anomalab;
using namespace anomalab::oracle;
using pauli::PauliOperator;
using stabilizer::StabilizerState;

TEST_CASE("dense basics") {
    CHECK(dense_dimension(3, 4) == 64);
    auto X = PauliOperator::single(1, 4, 0, 1, 0);
    auto Z = PauliOperator::single(1, 4, 0, 0, 1);
    Vector e0 = Vector::Zero(4);
    e0(0) = 1;
    CHECK(std::abs(apply_dense(X, e0)(1) - 1.0) < 1e-12);
    CHECK(std::abs(apply_dense(Z, apply_dense(X, e0))(1) - std::complex<double>(0, 1)) < 1e-12);
    Matrix m = dense_pauli(X);
    CHECK((m * m.adjoint() - Matrix::Identity(4, 4)).norm() < 1e-12);

    StabilizerState zero({Z});
    Vector psi = dense_state(zero);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
    CHECK(std::abs(psi(0)) == Catch::Approx(1.0));
    CHECK(std::abs(dense_expectation(psi, X)) < 1e-12);
    CHECK(dense_overlap(psi, dense_state(StabilizerState({X}))) == Catch::Approx(0.5));
}

TEST_CASE("dense states are fixed by their generators") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; trial++) {
        std::size_t n = 1 + trial % 4;
        auto s = random_stabilizer_state(n, 4, rng);
        REQUIRE(s.is_complete());
        Vector psi = dense_state(s, 5 + trial);
        CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
        for (const auto &g : s.generators()) {
            CHECK((apply_dense(g, psi) - psi).norm() < 1e-9);
        }
        // the seed only changes the global phase
        CHECK(dense_overlap(psi, dense_state(s, 99)) == Catch::Approx(1.0));
    }
}

TEST_CASE("random generators keep the symplectic form") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t n = 1 + trial % 5;
        auto s = random_stabilizer_state(n, 4, rng, 40);
        CHECK(s.is_complete());
        CHECK(s.group_log2_size() == Catch::Approx(2.0 * n));
        const auto &gens = s.generators();
        for (std::size_t i = 0; i < gens.size(); i++) {
            for (std::size_t j = 0; j < gens.size(); j++) {
                CHECK(pauli::commutator(gens[i], gens[j]).is_zero());
            }
        }
    }
    for (int trial = 0; trial < 50; trial++) {
        auto P = random_pauli(3, 4, rng, true);
        CHECK(P.num_qudits() == 3);
    }
}

TEST_CASE("oracle suites agree with the exact engine") {
    auto reports = run_oracle_suites(20261014, 200);
    REQUIRE(reports.size() == 5);
    for (const auto &r : reports) {
        INFO(r.name);
        CHECK(r.cases >= 200);
        CHECK(r.max_error < kOracleTolerance);
        CHECK(r.phase_mismatches == 0);
        CHECK(passed(r));
    }
    auto a = run_oracle_suites(5, 30);
    auto b = run_oracle_suites(5, 30);
    for (std::size_t i = 0; i < a.size(); i++) {
        CHECK(a[i].max_error == b[i].max_error);
    }
}

TEST_CASE("oracle rejects failing reports") {
    SuiteReport r{"x", 10, 1e-3, 0};
    CHECK_FALSE(passed(r));
    r.max_error = 0;
    r.phase_mismatches = 1;
    CHECK_FALSE(passed(r));
    r.phase_mismatches = 0;
    r.cases = 0;
    CHECK_FALSE(passed(r));
}
