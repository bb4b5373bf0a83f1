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

#ifndef ANOMALAB_TORIC_CODE_HPP
#define ANOMALAB_TORIC_CODE_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "anomalab/lattice.hpp"
#include "anomalab/pauli.hpp"
#include "anomalab/stabilizer_state.hpp"

namespace anomalab::toric {

using pauli::PauliOperator;
using pauli::PhaseExponent;
using stabilizer::StabilizerState;

inline constexpr std::uint32_t kQuditDimension = 4;

class LatticeTooSmall : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class OrientationConflict : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Which wrapping operators fix the logical state.
/// membrane: S_b on the planes x = 0, y = 0, z = 0.
/// line: Z^2 Wilson lines through the origin along x, y, z.
enum class LogicalBasis { membrane, line };

/// Eigenvalues (+1 or -1) of the three wrapping operators of the chosen basis.
struct LogicalSector {
    LogicalBasis basis = LogicalBasis::membrane;
    std::array<int, 3> signs{+1, +1, +1};
};

/// A_v: X on outgoing edges, X^dagger on incoming edges.
PauliOperator vertex_operator(const Lattice3D &lattice, const Site &v);
/// B_p: Z around the plaquette, counter-clockwise about its normal.
PauliOperator plaquette_operator(const Lattice3D &lattice, const Plaquette &p);
PauliOperator edge_x_squared(const Lattice3D &lattice, std::size_t edge);
/// X_e^2 for every edge, A_v for every vertex, B_p^2 for every plaquette.
std::vector<PauliOperator> hamiltonian_terms(const Lattice3D &lattice);
/// Bosonic membranes on the three wrapping planes at level 0.
std::vector<PauliOperator> logical_membranes(const Lattice3D &lattice);
/// prod Z^power along the line through the origin in direction `axis`.
PauliOperator wilson_line(const Lattice3D &lattice, int axis, int power);

StabilizerState build_ground_state(const Lattice3D &lattice, const LogicalSector &sector = {});

/// prod X_e^{sign_e} over cut edges.
PauliOperator membrane_bosonic(const Lattice3D &lattice, const DualSurface &surface);

/// prod S_e with S_e = X_e^{s} B_{f(e)}^{s}, f(e) the framing plaquette of e and s its sign.
/// The Z parts add up to the framed copy of the dual boundary, so they cancel on closed surfaces.
/// The overall phase is fixed by writing the product in X-then-Z order with phase 0.
PauliOperator membrane_fermionic(const Lattice3D &lattice, const DualSurface &surface);

/// Face label 0jk of the subdivided 4-simplex, 1 <= j < k <= 4.
struct TriangleLabel {
    int j;
    int k;
    auto operator<=>(const TriangleLabel &other) const = default;
};

std::string to_string(const TriangleLabel &t);
TriangleLabel parse_triangle(const std::string &text);
/// The six labels 012, 013, 014, 023, 024, 034.
std::vector<TriangleLabel> triangle_labels();

struct SurfacePlacement {
    Site anchor{0, 0, 0};
    int scale = 1;
};

inline constexpr int kMinimalScale = 1;
/// Smallest periodic extent that keeps the six surfaces and their framings from wrapping into each other.
constexpr int minimal_extent(int scale) { return 2 * scale + 1; }
inline constexpr int kMinimalLatticeExtent = minimal_extent(kMinimalScale);

/// Open surfaces with corner 0 at the anchor. Vertices 1..4 sit on rays +x, -z, +y, +z,
/// and Sigma_0jk fills the sector between the rays of j and k.
std::map<TriangleLabel, DualSurface> sigma_surfaces(const Lattice3D &lattice, const SurfacePlacement &placement);

/// Edge carrying the X factor of the error operator for a defining edge e = (t, mu):
/// the edge (t - e_nu, nu) with nu = mu - 1 mod 3.
std::size_t error_x_edge(const Lattice3D &lattice, std::size_t defining_edge);
/// Plaquette carrying the Z loop: normal nu at corner t; its boundary contains e.
Plaquette error_loop(const Lattice3D &lattice, std::size_t defining_edge);
/// X_b B_q for the edge/loop pair above.
PauliOperator error_operator(const Lattice3D &lattice, std::size_t defining_edge);

/// Ket copy on [0, n), conjugated bra copy on [n, 2n).
class ChoiRegister {
   public:
    explicit ChoiRegister(std::size_t n) : n_(n) {}

    std::size_t physical_size() const { return n_; }
    std::size_t size() const { return 2 * n_; }
    std::size_t ket(std::size_t q) const { return q; }
    std::size_t bra(std::size_t q) const { return n_ + q; }

    /// P acting on the ket side.
    PauliOperator lift_ket(const PauliOperator &P) const;
    /// P^* acting on the bra side.
    PauliOperator lift_bra(const PauliOperator &P) const;
    /// P^+ (P^-)^*, the Choi image of rho -> P rho P^dagger.
    PauliOperator lift_pair(const PauliOperator &P) const;
    stabilizer::Region ket_region(const std::vector<std::size_t> &qudits) const;

   private:
    std::size_t n_;
};

class InconsistentEdgeSet : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Choi state of |psi><psi|.
StabilizerState doubled_state(const StabilizerState &pure);

/// Choi state of prod_e N_e(rho) at p = 1/2 over the listed defining edges.
StabilizerState decohere_choi(const Lattice3D &lattice, const StabilizerState &ground,
                              const std::vector<std::size_t> &edges);

std::vector<std::size_t> all_edges(const Lattice3D &lattice);

enum class SymmetryKind { strong, weak_only, none };

struct SymmetryClass {
    SymmetryKind kind;
    std::optional<PhaseExponent> phase;  // set for strong
};

std::string to_string(const SymmetryClass &c);

/// Strong when P^+ has a definite phase on the Choi state, weak when P^+ (P^-)^* has expectation 1.
SymmetryClass classify_symmetry(const StabilizerState &choi, const PauliOperator &P);

}  // namespace anomalab::toric

#endif
