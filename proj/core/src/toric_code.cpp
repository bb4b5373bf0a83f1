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

#include "anomalab/toric_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace anomalab::toric {

using pauli::multiply;
using pauli::power;

namespace {

PauliOperator blank(const Lattice3D &lattice) { return PauliOperator(lattice.num_edges(), kQuditDimension); }

void require_ground_size(const Lattice3D &lattice) {
    for (int a = 0; a < 3; a++) {
        if (lattice.dims()[a] < 2) {
            throw LatticeTooSmall("toric code needs every lattice dimension >= 2");
        }
    }
}

}  // namespace

PauliOperator vertex_operator(const Lattice3D &lattice, const Site &v) {
    PauliOperator A = blank(lattice);
    for (const auto &[e, sign] : lattice.vertex_star(v)) {
        A.add_x(e, sign);
    }
    return A;
}

PauliOperator plaquette_operator(const Lattice3D &lattice, const Plaquette &p) {
    PauliOperator B = blank(lattice);
    for (const auto &[e, sign] : lattice.plaquette_boundary(p)) {
        B.add_z(e, sign);
    }
    return B;
}

PauliOperator edge_x_squared(const Lattice3D &lattice, std::size_t edge) {
    return PauliOperator::single(lattice.num_edges(), kQuditDimension, edge, 2, 0);
}

std::vector<PauliOperator> hamiltonian_terms(const Lattice3D &lattice) {
    std::vector<PauliOperator> terms;
    terms.reserve(lattice.num_edges() * 2 + lattice.num_sites());
    for (std::size_t e = 0; e < lattice.num_edges(); e++) {
        terms.push_back(edge_x_squared(lattice, e));
    }
    for (std::size_t v = 0; v < lattice.num_sites(); v++) {
        terms.push_back(vertex_operator(lattice, lattice.site_at(v)));
    }
    for (const auto &p : lattice.plaquettes()) {
        terms.push_back(power(plaquette_operator(lattice, p), 2));
    }
    return terms;
}

std::vector<PauliOperator> logical_membranes(const Lattice3D &lattice) {
    std::vector<PauliOperator> out;
    for (int a = 0; a < 3; a++) {
        out.push_back(membrane_bosonic(lattice, DualSurface::wrapping_plane(lattice, a, 0)));
    }
    return out;
}

PauliOperator wilson_line(const Lattice3D &lattice, int axis, int power_) {
    PauliOperator W = blank(lattice);
    for (int t = 0; t < lattice.dims()[axis]; t++) {
        Site s{0, 0, 0};
        s[axis] = t;
        W.add_z(lattice.edge_index(s, axis), power_);
    }
    return W;
}

StabilizerState build_ground_state(const Lattice3D &lattice, const LogicalSector &sector) {
    require_ground_size(lattice);
    std::vector<PauliOperator> gens = hamiltonian_terms(lattice);
    std::vector<PauliOperator> logicals;
    if (sector.basis == LogicalBasis::membrane) {
        logicals = logical_membranes(lattice);
    } else {
        for (int a = 0; a < 3; a++) {
            logicals.push_back(wilson_line(lattice, a, 2));
        }
    }
    for (int a = 0; a < 3; a++) {
        int s = sector.signs[a];
        if (s != 1 && s != -1) {
            throw std::invalid_argument("logical sector eigenvalues must be +1 or -1");
        }
        // generator s * W stabilizes the state, so W has eigenvalue s
        gens.push_back(logicals[a].with_phase(PhaseExponent(s > 0 ? 0 : kQuditDimension, kQuditDimension)));
    }
    return StabilizerState(std::move(gens));
}

PauliOperator membrane_bosonic(const Lattice3D &lattice, const DualSurface &surface) {
    PauliOperator S = blank(lattice);
    for (const auto &[e, sign] : surface.cuts()) {
        S.add_x(e, sign);
    }
    return S;
}

PauliOperator membrane_fermionic(const Lattice3D &lattice, const DualSurface &surface) {
    auto chain = surface.boundary_chain(lattice);
    for (int c : chain) {
        if (c > 1 || c < -1) {
            throw OrientationConflict("surface co-orientations disagree along a dual edge");
        }
    }
    PauliOperator S = membrane_bosonic(lattice, surface);
    for (std::size_t e = 0; e < chain.size(); e++) {
        if (chain[e] != 0) {
            S.add_z(e, chain[e]);
        }
    }
    return S;
}

std::string to_string(const TriangleLabel &t) { return "0" + std::to_string(t.j) + std::to_string(t.k); }

TriangleLabel parse_triangle(const std::string &text) {
    if (text.size() != 3 || text[0] != '0' || text[1] < '1' || text[2] > '4' || text[1] >= text[2]) {
        throw std::invalid_argument("triangle label must be 0jk with 1 <= j < k <= 4, got '" + text + "'");
    }
    return TriangleLabel{text[1] - '0', text[2] - '0'};
}

std::vector<TriangleLabel> triangle_labels() {
    std::vector<TriangleLabel> out;
    for (int j = 1; j <= 4; j++) {
        for (int k = j + 1; k <= 4; k++) {
            out.push_back({j, k});
        }
    }
    return out;
}

std::map<TriangleLabel, DualSurface> sigma_surfaces(const Lattice3D &lattice, const SurfacePlacement &placement) {
    const int r = placement.scale;
    if (r < kMinimalScale) {
        throw std::invalid_argument("surface scale must be at least 1");
    }
    for (int a = 0; a < 3; a++) {
        if (lattice.dims()[a] < minimal_extent(r)) {
            throw LatticeTooSmall("lattice too small for surfaces of scale " + std::to_string(r) + " (need extent " +
                                  std::to_string(minimal_extent(r)) + ")");
        }
    }
    const int a = placement.anchor[0], b = placement.anchor[1], c = placement.anchor[2];
    // The rays of 1 (+x) and 3 (+y) and 4 (+z) cover [1, r]; the ray of 2 (-z) covers [-r+1, 0].
    const std::pair<int, int> pos_x{a + 1, a + r}, neg_x{a - r + 1, a};
    const std::pair<int, int> pos_y{b + 1, b + r};
    const std::pair<int, int> pos_z{c + 1, c + r}, neg_z{c - r + 1, c}, all_z{c - r + 1, c + r};
    // Rectangle ranges are (u, v) = plane_axes(normal); signs give the co-orientation ray_j x ray_k.
    std::map<TriangleLabel, DualSurface> out;
    out[{1, 2}] = DualSurface::rectangle(lattice, 1, b, neg_z, pos_x, +1);
    out[{1, 3}] = DualSurface::rectangle(lattice, 2, c, pos_x, pos_y, +1);
    out[{1, 4}] = DualSurface::rectangle(lattice, 1, b, pos_z, pos_x, -1);
    out[{2, 3}] = DualSurface::rectangle(lattice, 0, a, pos_y, neg_z, +1);
    out[{2, 4}] = DualSurface::rectangle(lattice, 1, b, all_z, neg_x, +1);
    out[{3, 4}] = DualSurface::rectangle(lattice, 0, a, pos_y, pos_z, +1);
    return out;
}

std::size_t error_x_edge(const Lattice3D &lattice, std::size_t defining_edge) {
    Edge e = lattice.edge_at(defining_edge);
    int nu = (e.dir + 2) % 3;
    return lattice.edge_index(shifted(e.site, nu, -1), nu);
}

Plaquette error_loop(const Lattice3D &lattice, std::size_t defining_edge) {
    Edge e = lattice.edge_at(defining_edge);
    return Plaquette{e.site, (e.dir + 2) % 3};
}

PauliOperator error_operator(const Lattice3D &lattice, std::size_t defining_edge) {
    if (defining_edge >= lattice.num_edges()) {
        throw std::out_of_range("edge index outside the lattice");
    }
    PauliOperator S = plaquette_operator(lattice, error_loop(lattice, defining_edge));
    S.add_x(error_x_edge(lattice, defining_edge), 1);
    return S;
}

PauliOperator ChoiRegister::lift_ket(const PauliOperator &P) const {
    if (P.num_qudits() != n_) {
        throw std::invalid_argument("operator does not act on the physical register");
    }
    return pauli::embed(P, 2 * n_, 0);
}

PauliOperator ChoiRegister::lift_bra(const PauliOperator &P) const {
    if (P.num_qudits() != n_) {
        throw std::invalid_argument("operator does not act on the physical register");
    }
    return pauli::embed(pauli::complex_conjugate(P), 2 * n_, n_);
}

PauliOperator ChoiRegister::lift_pair(const PauliOperator &P) const { return multiply(lift_ket(P), lift_bra(P)); }

stabilizer::Region ChoiRegister::ket_region(const std::vector<std::size_t> &qudits) const {
    for (auto q : qudits) {
        if (q >= n_) {
            throw std::invalid_argument("qudit outside the physical register");
        }
    }
    return stabilizer::Region(qudits);
}

StabilizerState doubled_state(const StabilizerState &pure) {
    ChoiRegister reg(pure.num_qudits());
    std::vector<PauliOperator> gens;
    gens.reserve(2 * pure.generators().size());
    for (const auto &g : pure.generators()) {
        gens.push_back(reg.lift_ket(g));
    }
    for (const auto &g : pure.generators()) {
        gens.push_back(reg.lift_bra(g));
    }
    return StabilizerState(std::move(gens));
}

std::vector<std::size_t> all_edges(const Lattice3D &lattice) {
    std::vector<std::size_t> out(lattice.num_edges());
    for (std::size_t e = 0; e < out.size(); e++) {
        out[e] = e;
    }
    return out;
}

namespace {

// Commutator exponent (in half-phase units) of g with an operator supported on `support`.
std::int64_t sparse_commutator(const PauliOperator &g, const PauliOperator &M, const std::vector<std::size_t> &support) {
    std::int64_t e = 0;
    for (auto q : support) {
        e += static_cast<std::int64_t>(g.z(q)) * M.x(q) - static_cast<std::int64_t>(g.x(q)) * M.z(q);
    }
    std::int64_t d = g.qudit_dimension();
    return ((2 * e) % (2 * d) + 2 * d) % (2 * d);
}

}  // namespace

StabilizerState decohere_choi(const Lattice3D &lattice, const StabilizerState &ground,
                              const std::vector<std::size_t> &edges) {
    const std::size_t n = lattice.num_edges();
    if (ground.num_qudits() != n || ground.qudit_dimension() != kQuditDimension) {
        throw std::invalid_argument("ground state does not live on this lattice");
    }
    ChoiRegister reg(n);
    StabilizerState doubled = doubled_state(ground);
    std::vector<PauliOperator> gens = doubled.generators();
    const std::int64_t minus_one = kQuditDimension;  // half-phase exponent of -1

    // (1 + M)/2 with M^2 in the group: keep the part of the group commuting with M, then add M.
    for (auto e : edges) {
        if (e >= n) {
            throw InconsistentEdgeSet("edge index outside the lattice");
        }
        PauliOperator M = reg.lift_pair(error_operator(lattice, e));
        auto support = M.support();
        std::vector<std::size_t> flipped;
        for (std::size_t i = 0; i < gens.size(); i++) {
            std::int64_t c = sparse_commutator(gens[i], M, support);
            if (c == minus_one) {
                flipped.push_back(i);
            } else if (c != 0) {
                throw InconsistentEdgeSet("error operator does not square into the stabilizer group");
            }
        }
        if (!flipped.empty()) {
            std::size_t pivot = flipped.front();
            std::size_t best = gens[pivot].support().size();
            for (auto i : flipped) {
                std::size_t s = gens[i].support().size();
                if (s < best) {
                    best = s;
                    pivot = i;
                }
            }
            for (auto i : flipped) {
                if (i != pivot) {
                    gens[i] = multiply(gens[i], gens[pivot]);
                }
            }
            gens[pivot] = power(gens[pivot], 2);
        }
        gens.push_back(std::move(M));
    }
    // drop identities left behind by the pivot squares
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const PauliOperator &g) { return g.is_identity(); }),
               gens.end());
    try {
        return StabilizerState(std::move(gens));
    } catch (const stabilizer::InconsistentGenerators &err) {
        throw InconsistentEdgeSet(std::string("decohered generators are inconsistent: ") + err.what());
    }
}

std::string to_string(const SymmetryClass &c) {
    switch (c.kind) {
        case SymmetryKind::strong:
            return "strong(" + std::string(c.phase && c.phase->real_sign() == -1 ? "-1" : "+1") + ")";
        case SymmetryKind::weak_only:
            return "weak-only";
        case SymmetryKind::none:
            return "none";
    }
    return "none";
}

SymmetryClass classify_symmetry(const StabilizerState &choi, const PauliOperator &P) {
    ChoiRegister reg(P.num_qudits());
    if (choi.num_qudits() != reg.size()) {
        throw std::invalid_argument("operator register does not match the Choi register");
    }
    if (auto phase = stabilizer::expectation(choi, reg.lift_ket(P))) {
        return SymmetryClass{SymmetryKind::strong, phase};
    }
    auto weak = stabilizer::expectation(choi, reg.lift_pair(P));
    if (weak && weak->is_zero()) {
        return SymmetryClass{SymmetryKind::weak_only, std::nullopt};
    }
    return SymmetryClass{SymmetryKind::none, std::nullopt};
}

}  // namespace anomalab::toric
