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

#include <fstream>
#include <map>
#include <sstream>

#include "anomalab/lattice.hpp"

using namespace anomalab::toric;

namespace {

std::string read_fixture(const std::string &name) {
    std::ifstream in(std::string(ANOMALAB_FIXTURE_DIR) + "/" + name);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("lattice counts and indexing") {
    Lattice3D L(2, 3, 4);
    CHECK(L.num_sites() == 24);
    CHECK(L.num_edges() == 72);
    for (std::size_t e = 0; e < L.num_edges(); e++) {
        auto edge = L.edge_at(e);
        CHECK(L.edge_index(edge) == e);
    }
    CHECK(L.wrap({-1, 3, 9}) == Site{1, 0, 1});
    CHECK(L.edge_index({-2, 0, 0}, 1) == L.edge_index({0, 0, 0}, 1));
    CHECK_THROWS(Lattice3D(0, 2, 2));
    CHECK_THROWS(L.edge_index({0, 0, 0}, 3));
}

TEST_CASE("plaquettes have four edges and vertices six") {
    Lattice3D L(3, 3, 3);
    auto plaquettes = L.plaquettes();
    CHECK(plaquettes.size() == 3 * L.num_sites());
    std::map<std::size_t, int> incidence;
    for (const auto &p : plaquettes) {
        auto b = L.plaquette_boundary(p);
        CHECK(b.size() == 4);
        int sum = 0;
        for (auto [e, s] : b) {
            incidence[e]++;
            sum += s;
        }
        CHECK(sum == 0);
    }
    for (std::size_t e = 0; e < L.num_edges(); e++) {
        CHECK(incidence[e] == 4);
    }
    for (std::size_t v = 0; v < L.num_sites(); v++) {
        auto star = L.vertex_star(L.site_at(v));
        CHECK(star.size() == 6);
        int out = 0;
        for (auto [e, s] : star) {
            out += s > 0 ? 1 : 0;
        }
        CHECK(out == 3);
    }
}

TEST_CASE("plaquette boundaries are closed 1-cycles") {
    Lattice3D L(3, 3, 3);
    for (const auto &p : L.plaquettes()) {
        // each corner of the loop is entered once and left once
        std::map<std::size_t, int> degree;
        for (auto [e, s] : L.plaquette_boundary(p)) {
            auto edge = L.edge_at(e);
            degree[L.site_index(edge.site)] -= s;
            degree[L.site_index(shifted(edge.site, edge.dir, 1))] += s;
        }
        for (auto [v, deg] : degree) {
            CHECK(deg == 0);
        }
    }
}

TEST_CASE("plane axes are right-handed") {
    CHECK(plane_axes(0) == std::pair<int, int>{1, 2});
    CHECK(plane_axes(1) == std::pair<int, int>{2, 0});
    CHECK(plane_axes(2) == std::pair<int, int>{0, 1});
}

TEST_CASE("closed and open dual surfaces") {
    Lattice3D L(4, 4, 4);
    for (int normal = 0; normal < 3; normal++) {
        auto plane = DualSurface::wrapping_plane(L, normal, 1);
        CHECK(plane.cuts().size() == 16);
        CHECK(plane.is_closed(L));
        CHECK_FALSE(plane.has_orientation_conflict(L));
    }
    auto box = DualSurface::enclosing_box(L, {0, 0, 0}, {1, 2, 1});
    CHECK(box.cuts().size() == 2 * (2 * 3 + 3 * 2 + 2 * 2));
    CHECK(box.is_closed(L));
    CHECK_FALSE(box.has_orientation_conflict(L));
    CHECK_THROWS(DualSurface::enclosing_box(L, {0, 0, 0}, {3, 1, 1}));

    auto disk = DualSurface::rectangle(L, 2, 0, {0, 1}, {0, 1}, +1);
    CHECK(disk.cuts().size() == 4);
    CHECK_FALSE(disk.is_closed(L));
    CHECK_FALSE(disk.has_orientation_conflict(L));
    CHECK(DualSurface().is_closed(L));
}

TEST_CASE("opposite co-orientations on neighbouring cuts conflict") {
    Lattice3D L(4, 4, 4);
    auto a = DualSurface::rectangle(L, 2, 0, {0, 0}, {0, 0}, +1);
    auto b = DualSurface::rectangle(L, 2, 0, {1, 1}, {0, 0}, -1);
    CHECK(a.merged(b).has_orientation_conflict(L));
    auto c = DualSurface::rectangle(L, 2, 0, {1, 1}, {0, 0}, +1);
    CHECK_FALSE(a.merged(c).has_orientation_conflict(L));
    CHECK_THROWS(a.merged(a));
}

TEST_CASE("surface validation and text format") {
    Lattice3D L(3, 3, 3);
    CHECK_THROWS(DualSurface({{0, 2}}));
    CHECK_THROWS(DualSurface({{0, 1}, {0, -1}}));
    auto plane = DualSurface::from_text(L, read_fixture("plane_z1_L3.surface"));
    CHECK(plane.cuts().size() == 9);
    CHECK(plane.is_closed(L));
    auto expected = DualSurface::wrapping_plane(L, 2, 1);
    auto sorted = [](OrientedEdges v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(plane.cuts()) == sorted(expected.cuts()));
    auto back = DualSurface::from_text(L, plane.to_text(L));
    CHECK(sorted(back.cuts()) == sorted(plane.cuts()));
    CHECK_THROWS(DualSurface::from_text(L, "0 0 0 5 1\n"));
    CHECK_THROWS(DualSurface::from_text(L, "0 0 0 1\n"));
}

TEST_CASE("box edges") {
    Lattice3D L(3, 3, 3);
    CHECK(L.box_edges({0, 0, 0}, {0, 0, 0}).empty());
    CHECK(L.box_edges({0, 0, 0}, {1, 1, 1}).size() == 12);
    CHECK(L.box_edges({2, 2, 2}, {1, 1, 1}).size() == 12);
    CHECK(L.box_edges({0, 0, 0}, {2, 1, 0}).size() == 7);
    CHECK_THROWS(L.box_edges({0, 0, 0}, {3, 1, 1}));
    CHECK_THROWS(L.box_edges({0, 0, 0}, {-1, 1, 1}));
}

TEST_CASE("framing plaquettes sit at the fixed offset") {
    Lattice3D L(4, 4, 4);
    auto f = framing_plaquette(L, Edge{{1, 1, 1}, 2});
    CHECK(f.normal == 2);
    CHECK(L.wrap(f.corner) == Site{0, 0, 1});
    auto g = framing_plaquette(L, Edge{{1, 1, 1}, 0});
    CHECK(g.normal == 0);
    CHECK(L.wrap(g.corner) == Site{1, 0, 0});
}
