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

#include "anomalab/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace anomalab::toric {

std::pair<int, int> plane_axes(int normal) {
    switch (normal) {
        case 0:
            return {1, 2};
        case 1:
            return {2, 0};
        case 2:
            return {0, 1};
        default:
            throw std::invalid_argument("direction must be 0, 1 or 2");
    }
}

Site shifted(const Site &s, int dir, int amount) {
    Site out = s;
    out[dir] += amount;
    return out;
}

Lattice3D::Lattice3D(int lx, int ly, int lz) : dims_{lx, ly, lz} {
    if (lx < 1 || ly < 1 || lz < 1) {
        throw std::invalid_argument("lattice dimensions must be positive");
    }
}

Site Lattice3D::wrap(Site s) const {
    for (int a = 0; a < 3; a++) {
        s[a] %= dims_[a];
        if (s[a] < 0) {
            s[a] += dims_[a];
        }
    }
    return s;
}

std::size_t Lattice3D::site_index(const Site &s) const {
    Site w = wrap(s);
    return (static_cast<std::size_t>(w[0]) * dims_[1] + w[1]) * dims_[2] + w[2];
}

Site Lattice3D::site_at(std::size_t index) const {
    if (index >= num_sites()) {
        throw std::out_of_range("site index outside the lattice");
    }
    int z = static_cast<int>(index % dims_[2]);
    index /= dims_[2];
    int y = static_cast<int>(index % dims_[1]);
    int x = static_cast<int>(index / dims_[1]);
    return {x, y, z};
}

std::size_t Lattice3D::edge_index(const Site &s, int dir) const {
    if (dir < 0 || dir > 2) {
        throw std::invalid_argument("direction must be 0, 1 or 2");
    }
    return 3 * site_index(s) + static_cast<std::size_t>(dir);
}

Edge Lattice3D::edge_at(std::size_t index) const {
    if (index >= num_edges()) {
        throw std::out_of_range("edge index outside the lattice");
    }
    return Edge{site_at(index / 3), static_cast<int>(index % 3)};
}

OrientedEdges Lattice3D::plaquette_boundary(const Plaquette &p) const {
    auto [u, v] = plane_axes(p.normal);
    return {{edge_index(p.corner, u), +1},
            {edge_index(shifted(p.corner, u, 1), v), +1},
            {edge_index(shifted(p.corner, v, 1), u), -1},
            {edge_index(p.corner, v), -1}};
}

OrientedEdges Lattice3D::vertex_star(const Site &v) const {
    OrientedEdges out;
    for (int d = 0; d < 3; d++) {
        out.push_back({edge_index(v, d), +1});
        out.push_back({edge_index(shifted(v, d, -1), d), -1});
    }
    return out;
}

std::vector<Plaquette> Lattice3D::plaquettes() const {
    std::vector<Plaquette> out;
    out.reserve(num_edges());
    for (std::size_t i = 0; i < num_sites(); i++) {
        for (int d = 0; d < 3; d++) {
            out.push_back(Plaquette{site_at(i), d});
        }
    }
    return out;
}

std::vector<std::size_t> Lattice3D::box_edges(const Site &corner, const std::array<int, 3> &extents) const {
    for (int a = 0; a < 3; a++) {
        if (extents[a] < 0 || extents[a] >= dims_[a]) {
            throw std::invalid_argument("box exceeds the lattice");
        }
    }
    std::vector<std::size_t> out;
    for (int x = 0; x <= extents[0]; x++) {
        for (int y = 0; y <= extents[1]; y++) {
            for (int z = 0; z <= extents[2]; z++) {
                Site local{x, y, z};
                Site s{corner[0] + x, corner[1] + y, corner[2] + z};
                for (int d = 0; d < 3; d++) {
                    if (local[d] + 1 <= extents[d]) {
                        out.push_back(edge_index(s, d));
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Plaquette framing_plaquette(const Lattice3D &lattice, const Edge &e) {
    auto [u, v] = plane_axes(e.dir);
    return Plaquette{lattice.wrap(shifted(shifted(e.site, u, -1), v, -1)), e.dir};
}

DualSurface::DualSurface(OrientedEdges cuts) : cuts_(std::move(cuts)) {
    std::sort(cuts_.begin(), cuts_.end());
    for (std::size_t i = 0; i < cuts_.size(); i++) {
        if (cuts_[i].second != 1 && cuts_[i].second != -1) {
            throw std::invalid_argument("orientation signs must be +1 or -1");
        }
        if (i > 0 && cuts_[i].first == cuts_[i - 1].first) {
            throw std::invalid_argument("surface cuts the same edge twice");
        }
    }
}

DualSurface DualSurface::merged(const DualSurface &other) const {
    OrientedEdges all = cuts_;
    all.insert(all.end(), other.cuts_.begin(), other.cuts_.end());
    return DualSurface(std::move(all));
}

DualSurface DualSurface::rectangle(const Lattice3D &lattice, int normal, int level, std::pair<int, int> u_range,
                                   std::pair<int, int> v_range, int sign) {
    auto [u, v] = plane_axes(normal);
    OrientedEdges cuts;
    for (int a = u_range.first; a <= u_range.second; a++) {
        for (int b = v_range.first; b <= v_range.second; b++) {
            Site s{};
            s[normal] = level;
            s[u] = a;
            s[v] = b;
            cuts.push_back({lattice.edge_index(s, normal), sign});
        }
    }
    return DualSurface(std::move(cuts));
}

DualSurface DualSurface::wrapping_plane(const Lattice3D &lattice, int normal, int level, int sign) {
    auto [u, v] = plane_axes(normal);
    return rectangle(lattice, normal, level, {0, lattice.dims()[u] - 1}, {0, lattice.dims()[v] - 1}, sign);
}

DualSurface DualSurface::enclosing_box(const Lattice3D &lattice, const Site &corner,
                                       const std::array<int, 3> &extents) {
    for (int a = 0; a < 3; a++) {
        if (extents[a] < 0 || extents[a] + 1 >= lattice.dims()[a]) {
            throw std::invalid_argument("enclosing box does not fit in the lattice");
        }
    }
    OrientedEdges cuts;
    for (int d = 0; d < 3; d++) {
        auto [u, v] = plane_axes(d);
        for (int a = 0; a <= extents[u]; a++) {
            for (int b = 0; b <= extents[v]; b++) {
                Site lo = corner;
                lo[u] += a;
                lo[v] += b;
                Site hi = lo;
                lo[d] -= 1;              // enters the box at its low face
                hi[d] += extents[d];     // leaves the box at its high face
                cuts.push_back({lattice.edge_index(lo, d), -1});
                cuts.push_back({lattice.edge_index(hi, d), +1});
            }
        }
    }
    return DualSurface(std::move(cuts));
}

std::vector<int> DualSurface::boundary_chain(const Lattice3D &lattice) const {
    std::vector<int> chain(lattice.num_edges(), 0);
    for (const auto &[e, sign] : cuts_) {
        for (const auto &[f, c] : lattice.plaquette_boundary(framing_plaquette(lattice, lattice.edge_at(e)))) {
            chain[f] += sign * c;
        }
    }
    return chain;
}

bool DualSurface::is_closed(const Lattice3D &lattice) const {
    auto chain = boundary_chain(lattice);
    return std::all_of(chain.begin(), chain.end(), [](int c) { return c == 0; });
}

bool DualSurface::has_orientation_conflict(const Lattice3D &lattice) const {
    auto chain = boundary_chain(lattice);
    return std::any_of(chain.begin(), chain.end(), [](int c) { return std::abs(c) > 1; });
}

std::string DualSurface::to_text(const Lattice3D &lattice) const {
    std::ostringstream out;
    for (const auto &[e, sign] : cuts_) {
        Edge edge = lattice.edge_at(e);
        out << edge.site[0] << ' ' << edge.site[1] << ' ' << edge.site[2] << ' ' << edge.dir << ' '
            << (sign > 0 ? "+1" : "-1") << '\n';
    }
    return out.str();
}

DualSurface DualSurface::from_text(const Lattice3D &lattice, const std::string &text) {
    OrientedEdges cuts;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream words(line);
        int x, y, z, dir, sign;
        std::string rest;
        if (!(words >> x >> y >> z >> dir >> sign) || (words >> rest) || dir < 0 || dir > 2) {
            throw std::invalid_argument("bad surface line " + std::to_string(line_no) + ": " + line);
        }
        cuts.push_back({lattice.edge_index(Site{x, y, z}, dir), sign});
    }
    return DualSurface(std::move(cuts));
}

}  // namespace anomalab::toric
