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

// Generic Howell elimination shared by ZModMatrix and Pauli-row reductions.
// Private to the core library.

#ifndef ANOMALAB_SRC_HOWELL_HPP
#define ANOMALAB_SRC_HOWELL_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace anomalab::detail {

/// Per-modulus lookup tables.
class Ring {
   public:
    explicit Ring(std::uint32_t d);

    std::uint32_t modulus() const { return d_; }
    /// Unit u with u * a = gcd(a, d) mod d (1 for a = 0).
    std::uint32_t normalizer(std::uint32_t a) const { return normalizer_[a]; }
    /// Smallest positive k with k * a = 0 mod d, reduced mod d (so 0 when a is a unit).
    std::uint32_t annihilator(std::uint32_t a) const { return (d_ / std::gcd(a, d_)) % d_; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : d_ - a; }

   private:
    std::uint32_t d_;
    std::vector<std::uint32_t> normalizer_;
};

struct Bezout {
    std::uint32_t s, t, u, v;  // [s t; u v] is unimodular, u*a + v*b = 0.
};

/// Row operations over an output pair (a in row i, b in row j), a != 0.
Bezout bezout(std::uint32_t a, std::uint32_t b, std::uint32_t d);

/// Rows must provide:
///   size(), entry(i, col), swap(i, j), combine(i, j, Bezout), scale(i, u),
///   axpy(i, j, q) for row_i += q * row_j, append_scaled(i, k) for a new row k * row_i,
///   is_zero(i) and truncate(n).
template <class Rows>
void howell_reduce(Rows &rows, std::size_t num_cols, const Ring &ring) {
    const std::uint32_t d = ring.modulus();
    std::size_t r = 0;
    for (std::size_t col = 0; col < num_cols && r < rows.size(); col++) {
        for (std::size_t i = r; i < rows.size(); i++) {
            std::uint32_t b = rows.entry(i, col);
            if (b == 0 || i == r) {
                continue;
            }
            std::uint32_t a = rows.entry(r, col);
            if (a == 0) {
                rows.swap(r, i);
            } else if (b % a == 0) {
                rows.axpy(i, r, ring.neg(b / a));
            } else {
                rows.combine(r, i, bezout(a, b, d));
            }
        }
        std::uint32_t a = rows.entry(r, col);
        if (a == 0) {
            continue;
        }
        std::uint32_t u = ring.normalizer(a);
        if (u != 1) {
            rows.scale(r, u);
        }
        std::uint32_t p = rows.entry(r, col);
        for (std::size_t i = 0; i < r; i++) {
            std::uint32_t q = rows.entry(i, col) / p;
            if (q != 0) {
                rows.axpy(i, r, ring.neg(q % d));
            }
        }
        std::uint32_t k = ring.annihilator(p);
        if (k != 0) {
            rows.append_scaled(r, k);
            if (rows.is_zero(rows.size() - 1)) {
                rows.truncate(rows.size() - 1);
            }
        }
        r++;
    }
    rows.truncate(r);
}

}  // namespace anomalab::detail

#endif
