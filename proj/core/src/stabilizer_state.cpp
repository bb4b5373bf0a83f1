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

#include "anomalab/stabilizer_state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "howell.hpp"

namespace anomalab::stabilizer {

using pauli::multiply;
using pauli::power;

namespace {

/// Howell rows carried as phaseful Paulis, so every row operation is a group operation.
class PauliRows {
   public:
    explicit PauliRows(std::vector<PauliOperator> rows) : rows_(std::move(rows)) {}

    std::size_t size() const { return rows_.size(); }
    std::uint32_t entry(std::size_t i, std::size_t col) const {
        const auto &P = rows_[i];
        std::size_t n = P.num_qudits();
        return col < n ? P.x(col) : P.z(col - n);
    }
    void swap(std::size_t i, std::size_t j) { std::swap(rows_[i], rows_[j]); }
    void combine(std::size_t i, std::size_t j, const detail::Bezout &b) {
        PauliOperator a = multiply(power(rows_[i], b.s), power(rows_[j], b.t));
        PauliOperator c = multiply(power(rows_[i], b.u), power(rows_[j], b.v));
        rows_[i] = std::move(a);
        rows_[j] = std::move(c);
    }
    void scale(std::size_t i, std::uint32_t u) { rows_[i] = power(rows_[i], u); }
    void axpy(std::size_t i, std::size_t j, std::uint32_t q) { rows_[i] = multiply(rows_[i], power(rows_[j], q)); }
    void append_scaled(std::size_t i, std::uint32_t k) { rows_.push_back(power(rows_[i], k)); }
    bool is_zero(std::size_t i) const { return rows_[i].is_phaseless_identity(); }
    void truncate(std::size_t n) {
        for (std::size_t i = n; i < rows_.size(); i++) {
            if (!rows_[i].is_identity()) {
                inconsistent_ = true;
            }
        }
        rows_.resize(n);
    }

    std::vector<PauliOperator> rows_;
    bool inconsistent_ = false;
};

std::size_t leading_column(const zmod::ZModMatrix &H, std::size_t r) {
    for (std::size_t c = 0; c < H.cols(); c++) {
        if (H.get(r, c) != 0) {
            return c;
        }
    }
    return H.cols();
}

zmod::ZModMatrix symplectic_matrix(const std::vector<PauliOperator> &rows, std::size_t n, std::uint32_t d) {
    zmod::ZModMatrix M(rows.size(), 2 * n, d);
    for (std::size_t r = 0; r < rows.size(); r++) {
        auto *dst = M.row_data(r);
        std::copy(rows[r].xs().begin(), rows[r].xs().end(), dst);
        std::copy(rows[r].zs().begin(), rows[r].zs().end(), dst + n);
    }
    return M;
}

// Coefficients c with sum c_r H_r = v, or nothing.
std::optional<std::vector<std::uint32_t>> howell_coefficients(const zmod::ZModMatrix &H,
                                                              const std::vector<std::size_t> &leads,
                                                              std::vector<std::uint32_t> v) {
    const std::uint32_t d = H.modulus();
    std::vector<std::uint32_t> coeffs(H.rows(), 0);
    std::size_t col = 0;
    for (std::size_t r = 0; r < H.rows(); r++) {
        std::size_t lead = leads[r];
        for (; col < lead; col++) {
            if (v[col]) {
                return std::nullopt;
            }
        }
        std::uint32_t p = H.get(r, lead);
        if (v[lead] % p) {
            return std::nullopt;
        }
        std::uint32_t q = v[lead] / p;
        coeffs[r] = q;
        if (q) {
            const auto *h = H.row_data(r);
            for (std::size_t c = lead; c < H.cols(); c++) {
                v[c] = static_cast<std::uint32_t>((v[c] + static_cast<std::uint64_t>(d - q) * h[c]) % d);
            }
        }
        col = lead + 1;
    }
    for (; col < H.cols(); col++) {
        if (v[col]) {
            return std::nullopt;
        }
    }
    return coeffs;
}

bool check_complete(const zmod::ZModMatrix &H, const std::vector<std::size_t> &leads, std::size_t n,
                    std::uint32_t d) {
    zmod::BigCount size = 1, full = 1;
    for (std::size_t r = 0; r < H.rows(); r++) {
        size *= d / H.get(r, leads[r]);
    }
    for (std::size_t q = 0; q < n; q++) {
        full *= d;
    }
    return size == full;
}

}  // namespace

Region::Region(std::vector<std::size_t> qudits) : qudits_(std::move(qudits)) {
    std::sort(qudits_.begin(), qudits_.end());
    qudits_.erase(std::unique(qudits_.begin(), qudits_.end()), qudits_.end());
}

Region Region::complement(std::size_t n) const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t q = 0; q < n; q++) {
        if (k < qudits_.size() && qudits_[k] == q) {
            k++;
        } else {
            out.push_back(q);
        }
    }
    return Region(std::move(out));
}

StabilizerState::StabilizerState(std::vector<PauliOperator> generators, Completeness completeness)
    : generators_(std::move(generators)) {
    if (generators_.empty()) {
        throw std::invalid_argument("a stabilizer state needs at least one generator");
    }
    n_ = generators_.front().num_qudits();
    d_ = generators_.front().qudit_dimension();
    for (const auto &g : generators_) {
        if (g.num_qudits() != n_ || g.qudit_dimension() != d_) {
            throw std::invalid_argument("generators act on different registers");
        }
    }

    PauliRows rows(generators_);
    detail::howell_reduce(rows, 2 * n_, detail::Ring(d_));
    if (rows.inconsistent_) {
        throw InconsistentGenerators("generators produce a nontrivial scalar");
    }
    canonical_ = std::move(rows.rows_);
    howell_ = symplectic_matrix(canonical_, n_, d_);
    for (std::size_t r = 0; r < howell_.rows(); r++) {
        leads_.push_back(leading_column(howell_, r));
    }

    // Commuting canonical rows generate an abelian group.
    for (std::size_t i = 0; i < canonical_.size(); i++) {
        for (std::size_t j = i + 1; j < canonical_.size(); j++) {
            if (!pauli::commutator(canonical_[i], canonical_[j]).is_zero()) {
                throw InconsistentGenerators("generators do not commute");
            }
        }
    }
    // Relations among Howell rows are generated by k_i * row_i = (rows below), k_i the annihilator of the pivot.
    for (std::size_t i = 0; i < canonical_.size(); i++) {
        std::uint32_t p = howell_.get(i, leads_[i]);
        if (p == 1) {
            continue;
        }
        PauliOperator rel = power(canonical_[i], d_ / p);
        auto phase = group_phase(rel);
        if (!phase || !phase->is_zero()) {
            throw InconsistentGenerators("generators produce a nontrivial scalar");
        }
    }

    complete_ = check_complete(howell_, leads_, n_, d_);
    if (completeness == Completeness::required && !complete_) {
        throw IncompleteState("stabilizer group does not determine a unique state");
    }
}

StabilizerState::StabilizerState(Canonical, std::vector<PauliOperator> generators, std::vector<PauliOperator> canonical,
                                 zmod::ZModMatrix howell, std::vector<std::size_t> leads, std::size_t n,
                                 std::uint32_t d, bool complete)
    : n_(n),
      d_(d),
      generators_(std::move(generators)),
      canonical_(std::move(canonical)),
      howell_(std::move(howell)),
      leads_(std::move(leads)),
      complete_(complete) {}

double StabilizerState::group_log2_size() const {
    double bits = 0;
    for (std::size_t r = 0; r < howell_.rows(); r++) {
        bits += std::log2(static_cast<double>(d_ / howell_.get(r, leads_[r])));
    }
    return bits;
}

std::optional<pauli::OperatorWord> StabilizerState::witness(const PauliOperator &P) const {
    if (P.num_qudits() != n_ || P.qudit_dimension() != d_) {
        throw std::invalid_argument("operator and state act on different registers");
    }
    auto coeffs = howell_coefficients(howell_, leads_, P.symplectic());
    if (!coeffs) {
        return std::nullopt;
    }
    pauli::OperatorWord w;
    for (std::size_t r = 0; r < coeffs->size(); r++) {
        if ((*coeffs)[r] == 0) {
            continue;
        }
        std::size_t id = w.add_symbol(canonical_[r]);
        for (std::uint32_t k = 0; k < (*coeffs)[r]; k++) {
            w.push(id, +1);
        }
    }
    return w;
}

std::optional<PhaseExponent> StabilizerState::group_phase(const PauliOperator &P) const {
    auto w = witness(P);
    if (!w) {
        return std::nullopt;
    }
    if (w->empty()) {
        return P.phase();
    }
    // P = phase(P) g and the group element with phaseless part g carries phase(word).
    return P.phase() - pauli::reduce_word(*w).phase;
}

std::optional<PhaseExponent> expectation(const StabilizerState &s, const PauliOperator &P) {
    if (!s.is_complete()) {
        throw IncompleteState("expectation needs a complete state");
    }
    return s.group_phase(P);
}

StabilizerState apply_pauli(const StabilizerState &s, const PauliOperator &P) {
    if (P.num_qudits() != s.n_ || P.qudit_dimension() != s.d_) {
        throw std::invalid_argument("operator and state act on different registers");
    }
    std::vector<PauliOperator> gens, canon;
    gens.reserve(s.generators_.size());
    canon.reserve(s.canonical_.size());
    for (const auto &g : s.generators_) {
        gens.push_back(pauli::conjugate_by(P, g));
    }
    for (const auto &g : s.canonical_) {
        canon.push_back(pauli::conjugate_by(P, g));
    }
    // Conjugation only moves phases, so the Howell rows are unchanged.
    return StabilizerState(StabilizerState::Canonical{}, std::move(gens), std::move(canon), s.howell_, s.leads_, s.n_,
                           s.d_, s.complete_);
}

namespace {

std::vector<std::size_t> symplectic_columns(const Region &R, std::size_t n) {
    std::vector<std::size_t> cols;
    for (auto q : R.qudits()) {
        if (q >= n) {
            throw std::invalid_argument("region index outside the register");
        }
        cols.push_back(q);
    }
    for (auto q : R.qudits()) {
        cols.push_back(n + q);
    }
    return cols;
}

}  // namespace

double entanglement_entropy(const StabilizerState &s, const Region &R) {
    if (!s.is_complete()) {
        throw IncompleteState("entanglement entropy needs a complete state");
    }
    const std::size_t n = s.num_qudits();
    const double log_d = std::log2(static_cast<double>(s.qudit_dimension()));
    // S(R) = |R| log d - log|G_R| with |G_R| = |G| / |proj_{R^c} G|.
    // For pure states S(R) = S(R^c), so count on the smaller side.
    Region small = R.size() * 2 <= n ? R : R.complement(n);
    Region large = small.complement(n);
    double proj_small = zmod::span_log2(s.howell_matrix().select_columns(symplectic_columns(small, n)));
    double log_group_large = s.group_log2_size() - proj_small;
    double S = static_cast<double>(large.size()) * log_d - log_group_large;
    return S == 0.0 ? 0.0 : S;
}

double overlap_magnitude(const StabilizerState &s1, const StabilizerState &s2) {
    if (s1.num_qudits() != s2.num_qudits() || s1.qudit_dimension() != s2.qudit_dimension()) {
        throw std::invalid_argument("states act on different registers");
    }
    if (!s1.is_complete() || !s2.is_complete()) {
        throw IncompleteState("overlap needs complete states");
    }
    const std::size_t n = s1.num_qudits();
    const std::uint32_t d = s1.qudit_dimension();
    zmod::ZModMatrix common = zmod::span_intersection(s1.howell_matrix(), s2.howell_matrix());
    for (std::size_t r = 0; r < common.rows(); r++) {
        std::vector<std::uint32_t> v = common.row(r);
        PauliOperator P(std::vector<std::uint32_t>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)),
                        std::vector<std::uint32_t>(v.begin() + static_cast<std::ptrdiff_t>(n), v.end()), 0, d);
        if (*s1.group_phase(P) != *s2.group_phase(P)) {
            return 0.0;
        }
    }
    // |<1|2>|^2 = |S1 cap S2| / d^n = d^n / |S1 + S2|
    double sum_bits = zmod::span_log2(s1.howell_matrix().stacked(s2.howell_matrix()));
    double bits = static_cast<double>(n) * std::log2(static_cast<double>(d)) - sum_bits;
    return std::exp2(bits / 2.0);
}

std::string to_text(const StabilizerState &s) {
    std::string out;
    for (const auto &g : s.generators()) {
        out += pauli::to_text(g);
        out += '\n';
    }
    return out;
}

StabilizerState from_text(const std::string &text, std::size_t n, std::uint32_t d) {
    std::vector<PauliOperator> gens;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') {
            continue;
        }
        gens.push_back(pauli::from_text(line, n, d));
    }
    return StabilizerState(std::move(gens));
}

}  // namespace anomalab::stabilizer
