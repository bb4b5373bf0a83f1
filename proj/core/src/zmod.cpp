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

#include "anomalab/zmod.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "howell.hpp"

namespace anomalab {
namespace detail {

namespace {

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t &s, std::int64_t &t) {
    std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t r = a - q * b;
        a = b;
        b = r;
        std::int64_t s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    s = s0;
    t = t0;
    return a;
}

std::uint32_t reduce(std::int64_t v, std::uint32_t d) {
    std::int64_t r = v % static_cast<std::int64_t>(d);
    return static_cast<std::uint32_t>(r < 0 ? r + d : r);
}

}  // namespace

Ring::Ring(std::uint32_t d) : d_(d), normalizer_(d, 1) {
    if (d < 2) {
        throw std::invalid_argument("modulus must be at least 2");
    }
    for (std::uint32_t a = 1; a < d; a++) {
        std::uint32_t g = std::gcd(a, d);
        for (std::uint32_t u = 1; u < d; u++) {
            if (std::gcd(u, d) == 1 && (static_cast<std::uint64_t>(u) * a) % d == g) {
                normalizer_[a] = u;
                break;
            }
        }
    }
}

Bezout bezout(std::uint32_t a, std::uint32_t b, std::uint32_t d) {
    std::int64_t s, t;
    std::int64_t g = ext_gcd(a, b, s, t);
    return Bezout{reduce(s, d), reduce(t, d), reduce(-static_cast<std::int64_t>(b) / g, d),
                  reduce(static_cast<std::int64_t>(a) / g, d)};
}

namespace {

/// Dense rows of fixed width; the first `key_cols` columns drive elimination.
class MatrixRows {
   public:
    MatrixRows(std::size_t width, std::uint32_t d) : width_(width), d_(d) {}

    std::size_t size() const { return rows_.size(); }
    std::uint32_t entry(std::size_t i, std::size_t col) const { return rows_[i][col]; }
    void swap(std::size_t i, std::size_t j) { std::swap(rows_[i], rows_[j]); }
    void combine(std::size_t i, std::size_t j, const Bezout &b) {
        auto &ri = rows_[i];
        auto &rj = rows_[j];
        for (std::size_t c = 0; c < width_; c++) {
            std::uint64_t x = ri[c], y = rj[c];
            ri[c] = static_cast<std::uint32_t>((b.s * x + b.t * y) % d_);
            rj[c] = static_cast<std::uint32_t>((b.u * x + b.v * y) % d_);
        }
    }
    void scale(std::size_t i, std::uint32_t u) {
        for (auto &v : rows_[i]) {
            v = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v) * u) % d_);
        }
    }
    void axpy(std::size_t i, std::size_t j, std::uint32_t q) {
        auto &ri = rows_[i];
        const auto &rj = rows_[j];
        for (std::size_t c = 0; c < width_; c++) {
            ri[c] = static_cast<std::uint32_t>((ri[c] + static_cast<std::uint64_t>(q) * rj[c]) % d_);
        }
    }
    void append_scaled(std::size_t i, std::uint32_t k) {
        rows_.push_back(rows_[i]);
        scale(rows_.size() - 1, k);
    }
    bool is_zero(std::size_t i) const {
        for (auto v : rows_[i]) {
            if (v != 0) {
                return false;
            }
        }
        return true;
    }
    void truncate(std::size_t n) { rows_.resize(n); }

    std::vector<std::vector<std::uint32_t>> rows_;

   private:
    std::size_t width_;
    std::uint32_t d_;
};

}  // namespace
}  // namespace detail

namespace zmod {

using detail::MatrixRows;
using detail::Ring;

ZModElement::ZModElement(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
    if (modulus < 1) {
        throw std::invalid_argument("modulus must be positive");
    }
    value_ = detail::reduce(value, modulus);
}

void ZModElement::check_same_modulus(const ZModElement &other) const {
    if (modulus_ != other.modulus_) {
        throw std::invalid_argument("arithmetic between different moduli");
    }
}

ZModElement ZModElement::operator+(const ZModElement &other) const {
    check_same_modulus(other);
    return ZModElement(static_cast<std::int64_t>(value_) + other.value_, modulus_);
}

ZModElement ZModElement::operator-(const ZModElement &other) const {
    check_same_modulus(other);
    return ZModElement(static_cast<std::int64_t>(value_) - other.value_, modulus_);
}

ZModElement ZModElement::operator*(const ZModElement &other) const {
    check_same_modulus(other);
    return ZModElement(static_cast<std::int64_t>(value_) * other.value_, modulus_);
}

ZModElement ZModElement::operator-() const { return ZModElement(-static_cast<std::int64_t>(value_), modulus_); }

ZModElement &ZModElement::operator+=(const ZModElement &other) { return *this = *this + other; }
ZModElement &ZModElement::operator-=(const ZModElement &other) { return *this = *this - other; }
ZModElement &ZModElement::operator*=(const ZModElement &other) { return *this = *this * other; }

std::ostream &operator<<(std::ostream &out, const ZModElement &e) {
    return out << e.value() << " (mod " << e.modulus() << ")";
}

ZModMatrix::ZModMatrix(std::size_t rows, std::size_t cols, std::uint32_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
    if (modulus < 2) {
        throw std::invalid_argument("modulus must be at least 2");
    }
}

ZModMatrix ZModMatrix::identity(std::size_t n, std::uint32_t modulus) {
    ZModMatrix m(n, n, modulus);
    for (std::size_t i = 0; i < n; i++) {
        m.data_[i * n + i] = 1;
    }
    return m;
}

ZModMatrix ZModMatrix::from_rows(const std::vector<std::vector<std::int64_t>> &rows, std::size_t cols,
                                 std::uint32_t modulus) {
    ZModMatrix m(rows.size(), cols, modulus);
    for (std::size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("ragged row in from_rows");
        }
        for (std::size_t c = 0; c < cols; c++) {
            m.put(r, c, rows[r][c]);
        }
    }
    return m;
}

void ZModMatrix::set(std::size_t r, std::size_t c, const ZModElement &e) {
    if (e.modulus() != modulus_) {
        throw std::invalid_argument("entry modulus differs from matrix modulus");
    }
    data_.at(r * cols_ + c) = e.value();
}

void ZModMatrix::put(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = detail::reduce(v, modulus_); }

std::vector<std::uint32_t> ZModMatrix::row(std::size_t r) const {
    return std::vector<std::uint32_t>(row_data(r), row_data(r) + cols_);
}

void ZModMatrix::append_row(const std::vector<std::uint32_t> &row) {
    if (row.size() != cols_) {
        throw std::invalid_argument("row length differs from column count");
    }
    for (auto v : row) {
        data_.push_back(v % modulus_);
    }
    rows_++;
}

ZModMatrix ZModMatrix::operator*(const ZModMatrix &other) const {
    if (cols_ != other.rows_ || modulus_ != other.modulus_) {
        throw std::invalid_argument("matrix product dimension or modulus mismatch");
    }
    ZModMatrix out(rows_, other.cols_, modulus_);
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t k = 0; k < cols_; k++) {
            std::uint64_t a = get(i, k);
            if (a == 0) {
                continue;
            }
            for (std::size_t j = 0; j < other.cols_; j++) {
                auto &dst = out.data_[i * other.cols_ + j];
                dst = static_cast<std::uint32_t>((dst + a * other.get(k, j)) % modulus_);
            }
        }
    }
    return out;
}

ZModMatrix ZModMatrix::select_columns(const std::vector<std::size_t> &columns) const {
    ZModMatrix out(rows_, columns.size(), modulus_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < columns.size(); c++) {
            out.data_[r * columns.size() + c] = get(r, columns[c]);
        }
    }
    return out;
}

ZModMatrix ZModMatrix::stacked(const ZModMatrix &other) const {
    if (cols_ != other.cols_ || modulus_ != other.modulus_) {
        throw std::invalid_argument("stacking matrices of different shape or modulus");
    }
    ZModMatrix out = *this;
    out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
    out.rows_ += other.rows_;
    return out;
}

std::ostream &operator<<(std::ostream &out, const ZModMatrix &m) {
    out << "ZModMatrix(" << m.rows() << "x" << m.cols() << ", mod " << m.modulus() << ")\n";
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            out << (c ? " " : "") << m.get(r, c);
        }
        out << "\n";
    }
    return out;
}

namespace {

// Eliminates on the first `key_cols` columns of the augmented rows.
MatrixRows reduce_augmented(const ZModMatrix &M, bool with_transform) {
    std::size_t width = M.cols() + (with_transform ? M.rows() : 0);
    MatrixRows rows(width, M.modulus());
    rows.rows_.reserve(M.rows() * 2);
    for (std::size_t r = 0; r < M.rows(); r++) {
        std::vector<std::uint32_t> row(width, 0);
        std::copy(M.row_data(r), M.row_data(r) + M.cols(), row.begin());
        if (with_transform) {
            row[M.cols() + r] = 1;
        }
        rows.rows_.push_back(std::move(row));
    }
    detail::howell_reduce(rows, M.cols(), Ring(M.modulus()));
    return rows;
}

}  // namespace

HowellResult howell_form(const ZModMatrix &M) {
    MatrixRows rows = reduce_augmented(M, true);
    HowellResult out{ZModMatrix(rows.size(), M.cols(), M.modulus()), ZModMatrix(rows.size(), M.rows(), M.modulus())};
    for (std::size_t r = 0; r < rows.size(); r++) {
        for (std::size_t c = 0; c < M.cols(); c++) {
            out.H.put(r, c, rows.rows_[r][c]);
        }
        for (std::size_t c = 0; c < M.rows(); c++) {
            out.T.put(r, c, rows.rows_[r][M.cols() + c]);
        }
    }
    return out;
}

ZModMatrix howell_basis(const ZModMatrix &M) {
    MatrixRows rows = reduce_augmented(M, false);
    ZModMatrix H(rows.size(), M.cols(), M.modulus());
    for (std::size_t r = 0; r < rows.size(); r++) {
        std::copy(rows.rows_[r].begin(), rows.rows_[r].end(), H.row_data(r));
    }
    return H;
}

namespace {

std::size_t leading_column(const ZModMatrix &H, std::size_t r) {
    for (std::size_t c = 0; c < H.cols(); c++) {
        if (H.get(r, c) != 0) {
            return c;
        }
    }
    return H.cols();
}

// Reduces b against Howell rows; returns per-row coefficients, or nothing if b is outside the span.
std::optional<std::vector<std::uint32_t>> reduce_against(const ZModMatrix &H, std::vector<std::uint32_t> b) {
    const std::uint32_t d = H.modulus();
    std::vector<std::uint32_t> coeffs(H.rows(), 0);
    std::size_t col = 0;
    for (std::size_t r = 0; r < H.rows(); r++) {
        std::size_t lead = leading_column(H, r);
        for (; col < lead; col++) {
            if (b[col] != 0) {
                return std::nullopt;
            }
        }
        std::uint32_t p = H.get(r, lead);
        if (b[lead] % p != 0) {
            return std::nullopt;
        }
        std::uint32_t q = b[lead] / p;
        coeffs[r] = q;
        if (q != 0) {
            const std::uint32_t *hr = H.row_data(r);
            for (std::size_t c = lead; c < H.cols(); c++) {
                b[c] = static_cast<std::uint32_t>((b[c] + static_cast<std::uint64_t>(d - q) * hr[c]) % d);
            }
        }
        col = lead + 1;
    }
    for (; col < H.cols(); col++) {
        if (b[col] != 0) {
            return std::nullopt;
        }
    }
    return coeffs;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> solve_in_span(const ZModMatrix &M, const std::vector<std::uint32_t> &b) {
    if (b.size() != M.cols()) {
        throw std::invalid_argument("solve_in_span: vector length differs from column count");
    }
    std::vector<std::uint32_t> reduced(b.size());
    for (std::size_t i = 0; i < b.size(); i++) {
        if (b[i] >= M.modulus()) {
            throw std::invalid_argument("solve_in_span: vector entry not reduced mod d");
        }
        reduced[i] = b[i];
    }
    HowellResult h = howell_form(M);
    auto coeffs = reduce_against(h.H, reduced);
    if (!coeffs) {
        return std::nullopt;
    }
    const std::uint32_t d = M.modulus();
    std::vector<std::uint32_t> c(M.rows(), 0);
    for (std::size_t r = 0; r < h.H.rows(); r++) {
        std::uint64_t q = (*coeffs)[r];
        if (q == 0) {
            continue;
        }
        for (std::size_t k = 0; k < M.rows(); k++) {
            c[k] = static_cast<std::uint32_t>((c[k] + q * h.T.get(r, k)) % d);
        }
    }
    return c;
}

namespace {

std::vector<std::uint32_t> span_factors(const ZModMatrix &H) {
    std::vector<std::uint32_t> factors;
    for (std::size_t r = 0; r < H.rows(); r++) {
        factors.push_back(H.modulus() / H.get(r, leading_column(H, r)));
    }
    return factors;
}

}  // namespace

BigCount span_size(const ZModMatrix &M) {
    BigCount count = 1;
    for (auto f : span_factors(howell_basis(M))) {
        count *= f;
    }
    return count;
}

double span_log2(const ZModMatrix &M) {
    double bits = 0;
    for (auto f : span_factors(howell_basis(M))) {
        bits += std::log2(static_cast<double>(f));
    }
    return bits;
}

ZModMatrix span_intersection(const ZModMatrix &A, const ZModMatrix &B) {
    if (A.cols() != B.cols() || A.modulus() != B.modulus()) {
        throw std::invalid_argument("span_intersection: shape or modulus mismatch");
    }
    // Zassenhaus: rows [a | a] and [b | 0]; rows with zero left half carry the intersection.
    const std::size_t n = A.cols();
    ZModMatrix Z(A.rows() + B.rows(), 2 * n, A.modulus());
    for (std::size_t r = 0; r < A.rows(); r++) {
        for (std::size_t c = 0; c < n; c++) {
            Z.put(r, c, A.get(r, c));
            Z.put(r, n + c, A.get(r, c));
        }
    }
    for (std::size_t r = 0; r < B.rows(); r++) {
        for (std::size_t c = 0; c < n; c++) {
            Z.put(A.rows() + r, c, B.get(r, c));
        }
    }
    ZModMatrix H = howell_basis(Z);
    ZModMatrix out(0, n, A.modulus());
    for (std::size_t r = 0; r < H.rows(); r++) {
        if (leading_column(H, r) >= n) {
            std::vector<std::uint32_t> row(H.row_data(r) + n, H.row_data(r) + 2 * n);
            out.append_row(row);
        }
    }
    return out;
}

ZModMatrix left_kernel(const ZModMatrix &M) {
    // Howell of [M | I]: rows whose M-part vanishes span the kernel.
    const std::size_t m = M.rows();
    ZModMatrix aug(m, M.cols() + m, M.modulus());
    for (std::size_t r = 0; r < m; r++) {
        for (std::size_t c = 0; c < M.cols(); c++) {
            aug.put(r, c, M.get(r, c));
        }
        aug.put(r, M.cols() + r, 1);
    }
    ZModMatrix H = howell_basis(aug);
    ZModMatrix out(0, m, M.modulus());
    for (std::size_t r = 0; r < H.rows(); r++) {
        if (leading_column(H, r) >= M.cols()) {
            out.append_row(std::vector<std::uint32_t>(H.row_data(r) + M.cols(), H.row_data(r) + M.cols() + m));
        }
    }
    return out;
}

std::uint32_t inverse_mod(std::uint32_t u, std::uint32_t d) {
    std::int64_t s, t;
    if (detail::ext_gcd(u % d, d, s, t) != 1) {
        return 0;
    }
    return detail::reduce(s, d);
}

}  // namespace zmod
}  // namespace anomalab
