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

#ifndef ANOMALAB_PAULI_HPP
#define ANOMALAB_PAULI_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace anomalab::pauli {

/// Exponent k of exp(i*pi/d), living in Z_{2d}. Even k are powers of omega = exp(2*pi*i/d).
class PhaseExponent {
   public:
    PhaseExponent() = default;
    PhaseExponent(std::int64_t k, std::uint32_t d);
    static PhaseExponent omega_power(std::int64_t j, std::uint32_t d) { return PhaseExponent(2 * j, d); }

    std::uint32_t value() const { return k_; }
    std::uint32_t qudit_dimension() const { return d_; }
    bool is_zero() const { return k_ == 0; }
    bool is_even() const { return k_ % 2 == 0; }
    std::complex<double> to_complex() const;
    /// +1 / -1 when the phase is real, otherwise 0.
    int real_sign() const;

    PhaseExponent operator+(const PhaseExponent &other) const;
    PhaseExponent operator-(const PhaseExponent &other) const;
    PhaseExponent operator-() const;
    PhaseExponent operator*(std::int64_t m) const;
    PhaseExponent &operator+=(const PhaseExponent &other) { return *this = *this + other; }
    bool operator==(const PhaseExponent &other) const = default;

   private:
    std::uint32_t k_ = 0;
    std::uint32_t d_ = 4;
};

std::string to_string(const PhaseExponent &p);

/// exp(i*pi*phase/d) * prod_q X_q^{x_q} Z_q^{z_q}, X to the left of Z on every qudit.
class PauliOperator {
   public:
    PauliOperator() = default;
    PauliOperator(std::size_t n, std::uint32_t d);
    PauliOperator(std::vector<std::uint32_t> x, std::vector<std::uint32_t> z, std::int64_t phase, std::uint32_t d);

    static PauliOperator identity(std::size_t n, std::uint32_t d) { return PauliOperator(n, d); }
    static PauliOperator single(std::size_t n, std::uint32_t d, std::size_t qudit, std::int64_t x_exp,
                                std::int64_t z_exp);

    std::size_t num_qudits() const { return x_.size(); }
    std::uint32_t qudit_dimension() const { return d_; }
    std::uint32_t x(std::size_t q) const { return x_[q]; }
    std::uint32_t z(std::size_t q) const { return z_[q]; }
    const std::vector<std::uint32_t> &xs() const { return x_; }
    const std::vector<std::uint32_t> &zs() const { return z_; }
    PhaseExponent phase() const { return PhaseExponent(phase_, d_); }

    void set_x(std::size_t q, std::int64_t e);
    void set_z(std::size_t q, std::int64_t e);
    void add_x(std::size_t q, std::int64_t e) { set_x(q, static_cast<std::int64_t>(x_[q]) + e); }
    void add_z(std::size_t q, std::int64_t e) { set_z(q, static_cast<std::int64_t>(z_[q]) + e); }
    PauliOperator with_phase(const PhaseExponent &p) const;
    PauliOperator phaseless() const { return with_phase(PhaseExponent(0, d_)); }

    bool is_identity() const { return phase_ == 0 && is_phaseless_identity(); }
    bool is_phaseless_identity() const;
    /// Qudits where x or z is nonzero.
    std::vector<std::size_t> support() const;
    /// (x | z) concatenated.
    std::vector<std::uint32_t> symplectic() const;

    bool operator==(const PauliOperator &other) const = default;

   private:
    std::uint32_t d_ = 4;
    std::uint32_t phase_ = 0;
    std::vector<std::uint32_t> x_;
    std::vector<std::uint32_t> z_;
};

PauliOperator multiply(const PauliOperator &P, const PauliOperator &Q);
PauliOperator dagger(const PauliOperator &P);
/// P^k for any integer k (negative powers use the adjoint).
PauliOperator power(const PauliOperator &P, std::int64_t k);
/// The scalar P Q P^-1 Q^-1.
PhaseExponent commutator(const PauliOperator &P, const PauliOperator &Q);
/// Entrywise complex conjugate in the computational basis.
PauliOperator complex_conjugate(const PauliOperator &P);
/// P g P^dagger.
PauliOperator conjugate_by(const PauliOperator &P, const PauliOperator &g);
/// Embeds P into a larger register at the given offset.
PauliOperator embed(const PauliOperator &P, std::size_t register_size, std::size_t offset);
/// P on the first register times Q on the second.
PauliOperator tensor(const PauliOperator &P, const PauliOperator &Q);

/// Sparse factor text, e.g. `X[e12]^1 Z[e7]^3 phase:2`. Identity prints as `I phase:k`.
std::string to_text(const PauliOperator &P);
PauliOperator from_text(const std::string &text, std::size_t n, std::uint32_t d);

/// Word over an alphabet of distinct operators; letters are (alphabet index, +1 or -1).
class OperatorWord {
   public:
    struct Letter {
        std::size_t id;
        int exponent;
        bool operator==(const Letter &other) const = default;
    };

    OperatorWord() = default;
    explicit OperatorWord(const std::vector<std::pair<PauliOperator, int>> &letters);

    /// Index of op in the alphabet, inserting it if new.
    std::size_t intern(const PauliOperator &op);
    /// Appends op to the alphabet without searching for an equal entry.
    std::size_t add_symbol(const PauliOperator &op);
    void push(std::size_t id, int exponent);
    void push(const PauliOperator &op, int exponent) { push(intern(op), exponent); }

    const std::vector<PauliOperator> &alphabet() const { return alphabet_; }
    const std::vector<Letter> &letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

   private:
    std::vector<PauliOperator> alphabet_;
    std::vector<Letter> letters_;
};

struct WordReduction {
    PhaseExponent phase;
    PauliOperator residual;  // phase zero; the accumulated phase is in `phase`
};

/// Left-to-right product of the word.
WordReduction reduce_word(const OperatorWord &w);

struct CommutatorFactor {
    std::size_t a;
    std::size_t b;
    std::int64_t exponent;  // the factor is [U_a, U_b]^exponent
    bool operator==(const CommutatorFactor &other) const = default;
};

struct CollapseResult {
    PhaseExponent phase;
    /// Factors produced by the rewrites, before cancellation.
    std::vector<CommutatorFactor> emitted;
    /// Net factors after cancelling [U,U'][U^-1,U'] pairs, with a < b.
    std::vector<CommutatorFactor> residual;
};

/// Evaluates an identity-reducing word by moving letters onto their inverses, one commutator per swap.
/// Swaps between members of a common commuting set emit nothing; the sets are checked before use.
CollapseResult symbolic_collapse(const OperatorWord &w, const std::vector<std::vector<std::size_t>> &commuting_sets);

}  // namespace anomalab::pauli

#endif
