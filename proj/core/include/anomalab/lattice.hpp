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

#ifndef ANOMALAB_LATTICE_HPP
#define ANOMALAB_LATTICE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace anomalab::toric {

/// Integer lattice coordinate; wrapped by Lattice3D.
using Site = std::array<int, 3>;

struct Edge {
    Site site;  // tail vertex
    int dir;    // 0 = x, 1 = y, 2 = z
    bool operator==(const Edge &other) const = default;
};

/// Plaquette spanned by the two directions other than `normal`, with minimal corner `corner`.
struct Plaquette {
    Site corner;
    int normal;
};

/// (edge index, coefficient) pairs.
using OrientedEdges = std::vector<std::pair<std::size_t, int>>;

/// Periodic cubic lattice with one qudit per edge; edge index = 3 * site_index + dir.
class Lattice3D {
   public:
    Lattice3D(int lx, int ly, int lz);

    const std::array<int, 3> &dims() const { return dims_; }
    std::size_t num_sites() const { return static_cast<std::size_t>(dims_[0]) * dims_[1] * dims_[2]; }
    std::size_t num_edges() const { return 3 * num_sites(); }

    Site wrap(Site s) const;
    std::size_t site_index(const Site &s) const;
    Site site_at(std::size_t index) const;
    std::size_t edge_index(const Site &s, int dir) const;
    std::size_t edge_index(const Edge &e) const { return edge_index(e.site, e.dir); }
    Edge edge_at(std::size_t index) const;

    /// Counter-clockwise boundary seen from +normal: (corner,u,+) (corner+u,v,+) (corner+v,u,-) (corner,v,-).
    OrientedEdges plaquette_boundary(const Plaquette &p) const;
    /// Edges leaving the vertex get +1, edges entering it get -1.
    OrientedEdges vertex_star(const Site &v) const;
    std::vector<Plaquette> plaquettes() const;

    /// Edges with both endpoints in the closed vertex box [corner, corner + extents].
    std::vector<std::size_t> box_edges(const Site &corner, const std::array<int, 3> &extents) const;

   private:
    std::array<int, 3> dims_;
};

/// The two in-plane directions (u, v) for a plaquette normal, with u x v = +normal.
std::pair<int, int> plane_axes(int normal);
Site shifted(const Site &s, int dir, int amount);

/// Surface on the dual lattice recorded by the direct edges it cuts, each with a co-orientation sign.
class DualSurface {
   public:
    DualSurface() = default;
    explicit DualSurface(OrientedEdges cuts);

    const OrientedEdges &cuts() const { return cuts_; }
    bool empty() const { return cuts_.empty(); }

    /// Union with another surface on disjoint edges.
    DualSurface merged(const DualSurface &other) const;

    /// Rectangle of edges in direction `normal` at coordinate `level`, spanning
    /// [u_lo, u_hi] x [v_lo, v_hi] in the two in-plane axes.
    static DualSurface rectangle(const Lattice3D &lattice, int normal, int level, std::pair<int, int> u_range,
                                 std::pair<int, int> v_range, int sign);
    /// Closed plane perpendicular to `normal` wrapping the torus.
    static DualSurface wrapping_plane(const Lattice3D &lattice, int normal, int level, int sign = +1);
    /// Closed surface around the vertices of a box, co-oriented outward.
    static DualSurface enclosing_box(const Lattice3D &lattice, const Site &corner, const std::array<int, 3> &extents);

    /// Dual boundary pushed onto direct edges by the fixed framing offset, as an integer chain.
    std::vector<int> boundary_chain(const Lattice3D &lattice) const;
    bool is_closed(const Lattice3D &lattice) const;
    /// True when two cut faces meeting along a dual edge induce the same orientation on it.
    bool has_orientation_conflict(const Lattice3D &lattice) const;

    /// Lines `x y z dir sign`.
    std::string to_text(const Lattice3D &lattice) const;
    static DualSurface from_text(const Lattice3D &lattice, const std::string &text);

   private:
    OrientedEdges cuts_;
};

/// Plaquette decorating a cut edge: the dual plaquette of (s, dir) moved by -(1/2, 1/2, 1/2).
Plaquette framing_plaquette(const Lattice3D &lattice, const Edge &e);

}  // namespace anomalab::toric

#endif
