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

#ifndef ANOMALAB_ZMOD_HPP
#define ANOMALAB_ZMOD_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace anomalab::zmod {

using BigCount = boost::multiprecision::cpp_int;

/// An element of the ring Z_d.
class ZModElement {
   public:
    ZModElement() = default;
    ZModElement(std::int64_t value, std::uint32_t modulus);

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return modulus_; }

    ZModElement operator+(const ZModElement &other) const;
    ZModElement operator-(const ZModElement &other) const;
    ZModElement operator*(const ZModElement &other) const;
    ZModElement operator-() const;
    ZModElement &operator+=(const ZModElement &other);
    ZModElement &operator-=(const ZModElement &other);
    ZModElement &operator*=(const ZModElement &other);
    bool operator==(const ZModElement &other) const = default;

   private:
    void check_same_modulus(const ZModElement &other) const;

    std::uint32_t value_ = 0;
    std::uint32_t modulus_ = 2;
};

std::ostream &operator<<(std::ostream &out, const ZModElement &e);

/// Dense row-major matrix over Z_d. Entries are stored reduced.
class ZModMatrix {
   public:
    ZModMatrix() = default;
    ZModMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus);

    static ZModMatrix identity(std::size_t n, std::uint32_t modulus);
    static ZModMatrix from_rows(const std::vector<std::vector<std::int64_t>> &rows, std::size_t cols,
                                std::uint32_t modulus);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return modulus_; }

    ZModElement at(std::size_t r, std::size_t c) const { return ZModElement(get(r, c), modulus_); }
    void set(std::size_t r, std::size_t c, const ZModElement &e);

    // Raw access for hot loops; values are in [0, modulus).
    std::uint32_t get(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void put(std::size_t r, std::size_t c, std::int64_t v);
    const std::uint32_t *row_data(std::size_t r) const { return data_.data() + r * cols_; }
    std::uint32_t *row_data(std::size_t r) { return data_.data() + r * cols_; }

    std::vector<std::uint32_t> row(std::size_t r) const;
    void append_row(const std::vector<std::uint32_t> &row);

    ZModMatrix operator*(const ZModMatrix &other) const;
    bool operator==(const ZModMatrix &other) const = default;

    /// Rows restricted to the given column indices, in that order.
    ZModMatrix select_columns(const std::vector<std::size_t> &columns) const;
    /// Rows of this matrix followed by rows of other.
    ZModMatrix stacked(const ZModMatrix &other) const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t modulus_ = 2;
    std::vector<std::uint32_t> data_;
};

std::ostream &operator<<(std::ostream &out, const ZModMatrix &m);

struct HowellResult {
    ZModMatrix H;
    ZModMatrix T;
};

/// Howell normal form H with transform T such that T * M = H.
/// Zero rows are dropped, so H and T have the same row count.
HowellResult howell_form(const ZModMatrix &M);

/// Howell form without the transform.
ZModMatrix howell_basis(const ZModMatrix &M);

/// Coefficients c with c * M = b, if b lies in the row span of M.
std::optional<std::vector<std::uint32_t>> solve_in_span(const ZModMatrix &M, const std::vector<std::uint32_t> &b);

/// Cardinality of the row span of M.
BigCount span_size(const ZModMatrix &M);

/// log2 of the row span cardinality (exact for power-of-two moduli).
double span_log2(const ZModMatrix &M);

/// Row span of span(A) intersected with span(B) in Howell form.
ZModMatrix span_intersection(const ZModMatrix &A, const ZModMatrix &B);

/// Howell basis of the left kernel {c : c * M = 0}.
ZModMatrix left_kernel(const ZModMatrix &M);

/// Multiplicative inverse of a unit, or 0 if u is not a unit mod d.
std::uint32_t inverse_mod(std::uint32_t u, std::uint32_t d);

}  // namespace anomalab::zmod

#endif
