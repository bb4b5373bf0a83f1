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

#ifndef ANOMALAB_CHAIN_COMPLEX_HPP
#define ANOMALAB_CHAIN_COMPLEX_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "anomalab/zmod.hpp"

namespace anomalab::chain {

using VertexId = std::uint32_t;

/// The one-point compactification vertex. Largest id, so it sorts last.
inline constexpr VertexId kInfinity = std::numeric_limits<VertexId>::max();

/// Oriented simplex with strictly increasing vertex ids.
class Simplex {
   public:
    Simplex() = default;
    explicit Simplex(std::vector<VertexId> vertices);

    const std::vector<VertexId> &vertices() const { return vertices_; }
    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    /// Face with vertex m omitted.
    Simplex face(std::size_t m) const;

    auto operator<=>(const Simplex &other) const = default;

   private:
    std::vector<VertexId> vertices_;
};

std::string to_string(const Simplex &s);

class SimplicialComplex {
   public:
    /// Inserts the simplex and all of its faces.
    void add_simplex(const Simplex &s);
    void set_position(VertexId v, std::array<double, 3> position) { positions_[v] = position; }

    bool contains(const Simplex &s) const;
    int top_dimension() const { return static_cast<int>(simplices_.size()) - 1; }
    /// Sorted k-simplices (empty for k out of range).
    std::vector<Simplex> simplices(int k) const;
    std::size_t count(int k) const;
    std::vector<VertexId> vertices() const;
    std::optional<std::array<double, 3>> position(VertexId v) const;
    std::int64_t euler_characteristic() const;

    /// One simplex per line, vertices separated by spaces, `inf` for the point at infinity.
    std::string to_text() const;
    static SimplicialComplex from_text(const std::string &text);

   private:
    std::vector<std::set<Simplex>> simplices_;
    std::map<VertexId, std::array<double, 3>> positions_;
};

/// Sparse Z_d-valued chain. Zero coefficients are never stored.
class Chain {
   public:
    Chain(int dimension, std::uint32_t modulus);

    int dimension() const { return dimension_; }
    std::uint32_t modulus() const { return modulus_; }
    const std::map<Simplex, std::uint32_t> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff * s (coeff taken mod d).
    void add(const Simplex &s, std::int64_t coeff);
    std::uint32_t coefficient(const Simplex &s) const;

    Chain operator+(const Chain &other) const;
    Chain scaled(std::int64_t k) const;
    bool operator==(const Chain &other) const = default;

   private:
    int dimension_;
    std::uint32_t modulus_;
    std::map<Simplex, std::uint32_t> terms_;
};

/// Alternating face sum.
Chain boundary(const Chain &c);

/// Matrix of the boundary map from k-chains to (k-1)-chains; rows index sorted k-simplices.
zmod::ZModMatrix boundary_matrix(const SimplicialComplex &X, int k, std::uint32_t modulus);

/// Some s with boundary(s) = a, if a is a boundary in X.
std::optional<Chain> is_boundary(const SimplicialComplex &X, const Chain &a);

/// Order of the k-th homology group with Z_d coefficients.
zmod::BigCount homology_order(const SimplicialComplex &X, int k, std::uint32_t modulus);

/// Subdivided d-simplex <1..d+1> with center 0, coned off by the point at infinity.
SimplicialComplex minimal_sphere_complex(int d);

}  // namespace anomalab::chain

#endif
