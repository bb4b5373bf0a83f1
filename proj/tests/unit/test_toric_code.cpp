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

#include <set>

#include "anomalab/toric_code.hpp"

using namespace anomalab;
using namespace anomalab::toric;
using pauli::commutator;
using pauli::power;
using stabilizer::expectation;

namespace {

const PhaseExponent kOne(0, kQuditDimension);
const PhaseExponent kMinusOne(4, kQuditDimension);

std::vector<DualSurface> wrapping_surfaces(const Lattice3D &L) {
    std::vector<DualSurface> out;
    for (int a = 0; a < 3; a++) {
        out.push_back(DualSurface::wrapping_plane(L, a, 0));
        out.push_back(DualSurface::wrapping_plane(L, a, 2, -1));
    }
    return out;
}

std::vector<DualSurface> box_surfaces(const Lattice3D &L) {
    return {DualSurface::enclosing_box(L, {0, 0, 0}, {1, 1, 1}), DualSurface::enclosing_box(L, {1, 0, 2}, {1, 1, 1})};
}

std::vector<DualSurface> closed_surfaces(const Lattice3D &L) {
    auto out = wrapping_surfaces(L);
    for (auto &b : box_surfaces(L)) {
        out.push_back(b);
    }
    return out;
}

std::vector<DualSurface> open_surfaces(const Lattice3D &L) {
    std::vector<DualSurface> out;
    for (const auto &[label, s] : sigma_surfaces(L, {{0, 0, 0}, 1})) {
        out.push_back(s);
    }
    for (int a = 0; a < 3; a++) {
        out.push_back(DualSurface::rectangle(L, a, 1, {0, 1}, {1, 2}, +1));
        out.push_back(DualSurface::rectangle(L, a, 0, {2, 2}, {0, 1}, -1));
    }
    return out;
}

bool is_strong_plus(const SymmetryClass &c) { return c.kind == SymmetryKind::strong && c.phase == kOne; }

}  // namespace

TEST_CASE("ground state on L = 2") {
    Lattice3D L(2, 2, 2);
    auto g = build_ground_state(L);
    CHECK(g.is_complete());
    CHECK(zmod::span_size(g.howell_matrix()) == zmod::BigCount(1) << 48);
    const auto &gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); i++) {
        for (std::size_t j = i + 1; j < gens.size(); j++) {
            CHECK(commutator(gens[i], gens[j]).is_zero());
        }
    }
    for (const auto &t : hamiltonian_terms(L)) {
        CHECK(expectation(g, t) == kOne);
    }
    for (std::size_t v = 0; v < L.num_sites(); v++) {
        CHECK(expectation(g, pauli::dagger(vertex_operator(L, L.site_at(v)))) == kOne);
    }
    CHECK_THROWS_AS(build_ground_state(Lattice3D(1, 2, 2)), LatticeTooSmall);
}

TEST_CASE("logical sectors") {
    Lattice3D L(3, 3, 3);
    for (auto basis : {LogicalBasis::membrane, LogicalBasis::line}) {
        LogicalSector sector{basis, {+1, -1, +1}};
        auto g = build_ground_state(L, sector);
        for (int a = 0; a < 3; a++) {
            auto W = basis == LogicalBasis::membrane ? logical_membranes(L)[a] : wilson_line(L, a, 2);
            CHECK(expectation(g, W) == (sector.signs[a] > 0 ? kOne : kMinusOne));
        }
        CHECK_THROWS(build_ground_state(L, LogicalSector{basis, {1, 0, 1}}));
    }
    // a membrane eigenstate has no definite Wilson-line value and vice versa
    CHECK_FALSE(expectation(build_ground_state(L), wilson_line(L, 0, 2)).has_value());
    CHECK_FALSE(expectation(build_ground_state(L, {LogicalBasis::line}), logical_membranes(L)[0]).has_value());
}

TEST_CASE("bosonic membranes") {
    Lattice3D L(3, 3, 3);
    CHECK(membrane_bosonic(L, DualSurface()).is_identity());
    auto one = membrane_bosonic(L, DualSurface::rectangle(L, 2, 0, {0, 0}, {0, 0}, +1));
    CHECK(one.support() == std::vector<std::size_t>{L.edge_index({0, 0, 0}, 2)});
    CHECK(one.x(L.edge_index({0, 0, 0}, 2)) == 1);
    for (const auto &S : closed_surfaces(L)) {
        auto Sb = membrane_bosonic(L, S);
        for (const auto &t : hamiltonian_terms(L)) {
            CHECK(commutator(Sb, t).is_zero());
        }
    }
}

TEST_CASE("fermionic membranes agree with bosonic ones on closed surfaces") {
    Lattice3D L(4, 4, 4);
    for (const auto &S : closed_surfaces(L)) {
        auto Sf = membrane_fermionic(L, S);
        CHECK(Sf == membrane_bosonic(L, S));
        for (const auto &t : hamiltonian_terms(L)) {
            CHECK(commutator(Sf, t).is_zero());
        }
    }
}

TEST_CASE("open fermionic membranes") {
    Lattice3D L(4, 4, 4);
    auto g = build_ground_state(L);
    for (const auto &S : open_surfaces(L)) {
        auto Sf = membrane_fermionic(L, S);
        auto Sb = membrane_bosonic(L, S);
        CHECK(Sf.xs() == Sb.xs());
        CHECK(expectation(g, power(Sf, 2)) == kOne);
        CHECK(expectation(g, power(Sb, 2)) == kOne);
    }
    // the Z decoration of a disk is its framed boundary loop
    Lattice3D big(8, 8, 8);
    auto disk = DualSurface::rectangle(big, 2, 3, {2, 4}, {2, 4}, +1);
    auto Sf = membrane_fermionic(big, disk);
    std::set<std::size_t> cut;
    for (auto [e, s] : disk.cuts()) {
        cut.insert(e);
    }
    std::size_t z_edges = 0;
    for (std::size_t e = 0; e < big.num_edges(); e++) {
        if (Sf.z(e) != 0) {
            z_edges++;
            CHECK(cut.count(e) == 0);
            CHECK(big.edge_at(e).site[2] == 3);
        }
    }
    CHECK(z_edges == 12);
}

TEST_CASE("fermionic membranes reject orientation conflicts") {
    Lattice3D L(4, 4, 4);
    auto a = DualSurface::rectangle(L, 2, 0, {0, 0}, {0, 0}, +1);
    auto b = DualSurface::rectangle(L, 2, 0, {1, 1}, {0, 0}, -1);
    CHECK_THROWS_AS(membrane_fermionic(L, a.merged(b)), OrientationConflict);
}

TEST_CASE("Sigma surfaces realize the commutator structure") {
    for (auto [dims, placement] :
         {std::pair{std::array<int, 3>{3, 3, 3}, SurfacePlacement{{0, 0, 0}, 1}},
          std::pair{std::array<int, 3>{5, 5, 5}, SurfacePlacement{{1, 2, 3}, 2}},
          std::pair{std::array<int, 3>{4, 5, 6}, SurfacePlacement{{3, 0, 1}, 1}}}) {
        Lattice3D L(dims[0], dims[1], dims[2]);
        auto sigmas = sigma_surfaces(L, placement);
        REQUIRE(sigmas.size() == 6);
        std::map<TriangleLabel, PauliOperator> U;
        for (const auto &[label, s] : sigmas) {
            U[label] = membrane_fermionic(L, s);
            CHECK_FALSE(s.is_closed(L));
        }
        std::vector<TriangleLabel> quad{{1, 2}, {2, 3}, {3, 4}, {1, 4}};
        for (auto a : quad) {
            for (auto b : quad) {
                CHECK(commutator(U[a], U[b]).is_zero());
            }
        }
        auto c = commutator(U[{2, 4}], U[{1, 3}]);
        CHECK(c * 2 == kMinusOne);
        std::vector<std::size_t> shared;
        for (auto q : U[{2, 4}].support()) {
            if (U[{1, 3}].x(q) != 0 || U[{1, 3}].z(q) != 0) {
                shared.push_back(q);
            }
        }
        REQUIRE(shared.size() == 1);
        CHECK(U[{2, 4}].x(shared[0]) == 1);
        CHECK(U[{2, 4}].z(shared[0]) == 0);
        CHECK(U[{1, 3}].x(shared[0]) == 0);
        CHECK(U[{1, 3}].z(shared[0]) == 3);
    }
}

TEST_CASE("Sigma surfaces need room") {
    CHECK(kMinimalLatticeExtent == 3);
    CHECK_THROWS_AS(sigma_surfaces(Lattice3D(2, 3, 3), {{0, 0, 0}, 1}), LatticeTooSmall);
    CHECK_THROWS_AS(sigma_surfaces(Lattice3D(4, 4, 4), {{0, 0, 0}, 2}), LatticeTooSmall);
    CHECK_THROWS(sigma_surfaces(Lattice3D(4, 4, 4), {{0, 0, 0}, 0}));
}

TEST_CASE("triangle labels") {
    auto labels = triangle_labels();
    REQUIRE(labels.size() == 6);
    CHECK(to_string(labels.front()) == "012");
    CHECK(to_string(labels.back()) == "034");
    CHECK(parse_triangle("024") == TriangleLabel{2, 4});
    CHECK_THROWS(parse_triangle("042"));
    CHECK_THROWS(parse_triangle("015"));
    CHECK_THROWS(parse_triangle("12"));
}

TEST_CASE("error operators satisfy their three constraints") {
    Lattice3D L(4, 4, 4);
    std::vector<PauliOperator> closed, open_squares;
    for (const auto &S : closed_surfaces(L)) {
        closed.push_back(membrane_fermionic(L, S));
    }
    for (const auto &S : open_surfaces(L)) {
        open_squares.push_back(power(membrane_fermionic(L, S), 2));
    }
    for (std::size_t e = 0; e < L.num_edges(); e++) {
        auto S = error_operator(L, e);
        for (const auto &C : closed) {
            CHECK(commutator(C, S).is_zero());
        }
        for (const auto &O : open_squares) {
            CHECK(commutator(O, S).is_zero());
        }
        CHECK_FALSE(commutator(edge_x_squared(L, e), S).is_zero());
        CHECK(S.support().size() == 5);
    }
    CHECK_THROWS(error_operator(L, L.num_edges()));
}

TEST_CASE("Choi register layout") {
    ChoiRegister reg(5);
    std::set<std::size_t> seen;
    for (std::size_t q = 0; q < 5; q++) {
        seen.insert(reg.ket(q));
        seen.insert(reg.bra(q));
    }
    CHECK(seen.size() == 10);
    CHECK(*seen.rbegin() == 9);
    auto P = PauliOperator::single(5, kQuditDimension, 2, 1, 1);
    auto lifted = reg.lift_pair(P);
    CHECK(lifted.num_qudits() == 10);
    CHECK(lifted.x(2) == 1);
    CHECK(lifted.z(7) == 3);
    CHECK_THROWS(reg.lift_ket(PauliOperator::identity(4, kQuditDimension)));
}

TEST_CASE("undecohered Choi state") {
    Lattice3D L(3, 3, 3);
    auto g = build_ground_state(L);
    auto choi = decohere_choi(L, g, {});
    CHECK(choi.is_complete());
    CHECK(choi.group_log2_size() == 4.0 * L.num_edges());
    for (const auto &t : g.generators()) {
        CHECK(is_strong_plus(classify_symmetry(choi, t)));
    }
    CHECK(is_strong_plus(classify_symmetry(choi, logical_membranes(L)[1])));
    CHECK_THROWS(classify_symmetry(g, logical_membranes(L)[0]));
}

TEST_CASE("fully decohered Choi state") {
    Lattice3D L(3, 3, 3);
    for (auto basis : {LogicalBasis::membrane, LogicalBasis::line}) {
        auto g = build_ground_state(L, {basis});
        auto choi = decohere_choi(L, g, all_edges(L));
        REQUIRE(choi.is_complete());
        CHECK(choi.group_log2_size() == 4.0 * L.num_edges());
        ChoiRegister reg(L.num_edges());
        for (std::size_t e = 0; e < L.num_edges(); e++) {
            CHECK(expectation(choi, reg.lift_pair(error_operator(L, e))) == kOne);
            CHECK_FALSE(expectation(choi, reg.lift_ket(edge_x_squared(L, e))).has_value());
        }
        for (const auto &S : box_surfaces(L)) {
            CHECK(is_strong_plus(classify_symmetry(choi, membrane_fermionic(L, S))));
        }
        for (const auto &S : wrapping_surfaces(L)) {
            auto c = classify_symmetry(choi, membrane_fermionic(L, S));
            CHECK(c.kind == (basis == LogicalBasis::membrane ? SymmetryKind::strong : SymmetryKind::weak_only));
        }
        for (const auto &S : open_surfaces(L)) {
            CHECK(is_strong_plus(classify_symmetry(choi, power(membrane_fermionic(L, S), 2))));
            CHECK(classify_symmetry(choi, power(membrane_bosonic(L, S), 2)).kind == SymmetryKind::weak_only);
        }
        auto sb = classify_symmetry(choi, logical_membranes(L)[0]);
        auto line = classify_symmetry(choi, wilson_line(L, 0, 2));
        if (basis == LogicalBasis::membrane) {
            CHECK(is_strong_plus(sb));
            CHECK(line.kind == SymmetryKind::none);
        } else {
            CHECK(sb.kind == SymmetryKind::weak_only);
            CHECK(line.kind == SymmetryKind::weak_only);
        }
    }
}

TEST_CASE("logical classification before and after decoherence") {
    Lattice3D L(3, 3, 3);
    auto g = build_ground_state(L, {LogicalBasis::line});
    auto before = decohere_choi(L, g, {});
    auto after = decohere_choi(L, g, all_edges(L));
    CHECK(classify_symmetry(before, logical_membranes(L)[2]).kind == SymmetryKind::none);
    CHECK(classify_symmetry(after, logical_membranes(L)[2]).kind == SymmetryKind::weak_only);
    CHECK(is_strong_plus(classify_symmetry(before, wilson_line(L, 2, 2))));
    CHECK(classify_symmetry(after, wilson_line(L, 2, 2)).kind == SymmetryKind::weak_only);
}

TEST_CASE("partial and repeated decoherence") {
    Lattice3D L(3, 3, 3);
    auto g = build_ground_state(L);
    auto once = decohere_choi(L, g, {0, 1, 2, 40});
    auto twice = decohere_choi(L, g, {0, 1, 2, 40, 40, 0});
    CHECK(once.is_complete());
    CHECK(stabilizer::overlap_magnitude(once, twice) == Catch::Approx(1.0));
    CHECK(classify_symmetry(once, edge_x_squared(L, 5)).kind == SymmetryKind::strong);
    CHECK(classify_symmetry(once, edge_x_squared(L, 40)).kind != SymmetryKind::strong);
    CHECK_THROWS_AS(decohere_choi(L, g, {L.num_edges()}), InconsistentEdgeSet);
    CHECK_THROWS(decohere_choi(Lattice3D(4, 4, 4), g, {}));
}
