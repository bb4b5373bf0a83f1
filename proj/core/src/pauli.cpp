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

#include "anomalab/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace anomalab::pauli {

namespace {

std::uint32_t mod(std::int64_t v, std::uint32_t m) {
    std::int64_t r = v % static_cast<std::int64_t>(m);
    return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

void check_compatible(const PauliOperator &P, const PauliOperator &Q) {
    if (P.num_qudits() != Q.num_qudits() || P.qudit_dimension() != Q.qudit_dimension()) {
        throw std::invalid_argument("Pauli operators act on different registers");
    }
}

// sum_q a_q b_q mod d
std::uint32_t dot(const std::vector<std::uint32_t> &a, const std::vector<std::uint32_t> &b, std::uint32_t d) {
    std::uint64_t acc = 0;
    for (std::size_t q = 0; q < a.size(); q++) {
        acc += static_cast<std::uint64_t>(a[q]) * b[q];
    }
    return static_cast<std::uint32_t>(acc % d);
}

}  // namespace

PhaseExponent::PhaseExponent(std::int64_t k, std::uint32_t d) : k_(mod(k, 2 * d)), d_(d) {
    if (d < 2) {
        throw std::invalid_argument("qudit dimension must be at least 2");
    }
}

std::complex<double> PhaseExponent::to_complex() const {
    return std::polar(1.0, std::numbers::pi * static_cast<double>(k_) / static_cast<double>(d_));
}

int PhaseExponent::real_sign() const {
    if (k_ == 0) {
        return 1;
    }
    if (k_ == d_) {
        return -1;
    }
    return 0;
}

PhaseExponent PhaseExponent::operator+(const PhaseExponent &other) const {
    if (other.d_ != d_) {
        throw std::invalid_argument("adding phases of different qudit dimension");
    }
    return PhaseExponent(static_cast<std::int64_t>(k_) + other.k_, d_);
}

PhaseExponent PhaseExponent::operator-(const PhaseExponent &other) const { return *this + (-other); }
PhaseExponent PhaseExponent::operator-() const { return PhaseExponent(-static_cast<std::int64_t>(k_), d_); }
PhaseExponent PhaseExponent::operator*(std::int64_t m) const {
    return PhaseExponent(static_cast<std::int64_t>(k_) * mod(m, 2 * d_), d_);
}

std::string to_string(const PhaseExponent &p) {
    return "exp(i*pi*" + std::to_string(p.value()) + "/" + std::to_string(p.qudit_dimension()) + ")";
}

PauliOperator::PauliOperator(std::size_t n, std::uint32_t d) : d_(d), x_(n, 0), z_(n, 0) {
    if (d < 2) {
        throw std::invalid_argument("qudit dimension must be at least 2");
    }
}

PauliOperator::PauliOperator(std::vector<std::uint32_t> x, std::vector<std::uint32_t> z, std::int64_t phase,
                             std::uint32_t d)
    : d_(d), phase_(mod(phase, 2 * d)), x_(std::move(x)), z_(std::move(z)) {
    if (d < 2) {
        throw std::invalid_argument("qudit dimension must be at least 2");
    }
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("x and z vectors differ in length");
    }
    for (auto &v : x_) {
        v %= d;
    }
    for (auto &v : z_) {
        v %= d;
    }
}

PauliOperator PauliOperator::single(std::size_t n, std::uint32_t d, std::size_t qudit, std::int64_t x_exp,
                                    std::int64_t z_exp) {
    PauliOperator P(n, d);
    P.set_x(qudit, x_exp);
    P.set_z(qudit, z_exp);
    return P;
}

void PauliOperator::set_x(std::size_t q, std::int64_t e) { x_.at(q) = mod(e, d_); }
void PauliOperator::set_z(std::size_t q, std::int64_t e) { z_.at(q) = mod(e, d_); }

PauliOperator PauliOperator::with_phase(const PhaseExponent &p) const {
    if (p.qudit_dimension() != d_) {
        throw std::invalid_argument("phase of a different qudit dimension");
    }
    PauliOperator out = *this;
    out.phase_ = p.value();
    return out;
}

bool PauliOperator::is_phaseless_identity() const {
    return std::all_of(x_.begin(), x_.end(), [](auto v) { return v == 0; }) &&
           std::all_of(z_.begin(), z_.end(), [](auto v) { return v == 0; });
}

std::vector<std::size_t> PauliOperator::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < x_.size(); q++) {
        if (x_[q] || z_[q]) {
            out.push_back(q);
        }
    }
    return out;
}

std::vector<std::uint32_t> PauliOperator::symplectic() const {
    std::vector<std::uint32_t> v(x_);
    v.insert(v.end(), z_.begin(), z_.end());
    return v;
}

PauliOperator multiply(const PauliOperator &P, const PauliOperator &Q) {
    check_compatible(P, Q);
    const std::uint32_t d = P.qudit_dimension();
    const std::size_t n = P.num_qudits();
    std::vector<std::uint32_t> x(n), z(n);
    for (std::size_t q = 0; q < n; q++) {
        x[q] = (P.x(q) + Q.x(q)) % d;
        z[q] = (P.z(q) + Q.z(q)) % d;
    }
    // Z^{z_P} X^{x_Q} = omega^{z_P . x_Q} X^{x_Q} Z^{z_P}
    std::int64_t phase = static_cast<std::int64_t>(P.phase().value()) + Q.phase().value() + 2 * dot(P.zs(), Q.xs(), d);
    return PauliOperator(std::move(x), std::move(z), phase, d);
}

PauliOperator dagger(const PauliOperator &P) {
    const std::uint32_t d = P.qudit_dimension();
    const std::size_t n = P.num_qudits();
    std::vector<std::uint32_t> x(n), z(n);
    for (std::size_t q = 0; q < n; q++) {
        x[q] = (d - P.x(q)) % d;
        z[q] = (d - P.z(q)) % d;
    }
    // (X^x Z^z)^dagger = Z^-z X^-x = omega^{x.z} X^-x Z^-z
    std::int64_t phase = -static_cast<std::int64_t>(P.phase().value()) + 2 * dot(P.xs(), P.zs(), d);
    return PauliOperator(std::move(x), std::move(z), phase, d);
}

PauliOperator power(const PauliOperator &P, std::int64_t k) {
    const std::uint32_t d = P.qudit_dimension();
    std::int64_t kk = mod(k, 2 * d);
    const std::size_t n = P.num_qudits();
    std::vector<std::uint32_t> x(n), z(n);
    for (std::size_t q = 0; q < n; q++) {
        x[q] = static_cast<std::uint32_t>((kk * P.x(q)) % d);
        z[q] = static_cast<std::uint32_t>((kk * P.z(q)) % d);
    }
    // (X^x Z^z)^k = omega^{(x.z) k (k-1) / 2} X^{kx} Z^{kz}
    std::int64_t phase = kk * P.phase().value() + static_cast<std::int64_t>(dot(P.xs(), P.zs(), d)) * kk * (kk - 1);
    return PauliOperator(std::move(x), std::move(z), phase, d);
}

PhaseExponent commutator(const PauliOperator &P, const PauliOperator &Q) {
    check_compatible(P, Q);
    const std::uint32_t d = P.qudit_dimension();
    std::int64_t e = static_cast<std::int64_t>(dot(P.zs(), Q.xs(), d)) - dot(P.xs(), Q.zs(), d);
    return PhaseExponent::omega_power(e, d);
}

PauliOperator complex_conjugate(const PauliOperator &P) {
    const std::uint32_t d = P.qudit_dimension();
    std::vector<std::uint32_t> z(P.num_qudits());
    for (std::size_t q = 0; q < z.size(); q++) {
        z[q] = (d - P.z(q)) % d;
    }
    return PauliOperator(P.xs(), std::move(z), -static_cast<std::int64_t>(P.phase().value()), d);
}

PauliOperator conjugate_by(const PauliOperator &P, const PauliOperator &g) {
    return g.with_phase(g.phase() + commutator(P, g));
}

PauliOperator embed(const PauliOperator &P, std::size_t register_size, std::size_t offset) {
    if (offset + P.num_qudits() > register_size) {
        throw std::invalid_argument("embedding does not fit in the target register");
    }
    std::vector<std::uint32_t> x(register_size, 0), z(register_size, 0);
    std::copy(P.xs().begin(), P.xs().end(), x.begin() + static_cast<std::ptrdiff_t>(offset));
    std::copy(P.zs().begin(), P.zs().end(), z.begin() + static_cast<std::ptrdiff_t>(offset));
    return PauliOperator(std::move(x), std::move(z), P.phase().value(), P.qudit_dimension());
}

PauliOperator tensor(const PauliOperator &P, const PauliOperator &Q) {
    if (P.qudit_dimension() != Q.qudit_dimension()) {
        throw std::invalid_argument("tensor product of different qudit dimensions");
    }
    std::vector<std::uint32_t> x(P.xs()), z(P.zs());
    x.insert(x.end(), Q.xs().begin(), Q.xs().end());
    z.insert(z.end(), Q.zs().begin(), Q.zs().end());
    return PauliOperator(std::move(x), std::move(z),
                         static_cast<std::int64_t>(P.phase().value()) + Q.phase().value(), P.qudit_dimension());
}

std::string to_text(const PauliOperator &P) {
    // all X factors first, matching the canonical X-then-Z operator order
    std::ostringstream out;
    bool any = false;
    for (const char *kind : {"X", "Z"}) {
        const auto &exps = kind[0] == 'X' ? P.xs() : P.zs();
        for (std::size_t q = 0; q < exps.size(); q++) {
            if (exps[q]) {
                out << (any ? " " : "") << kind << "[e" << q << "]^" << exps[q];
                any = true;
            }
        }
    }
    if (!any) {
        out << "I";
    }
    out << " phase:" << P.phase().value();
    return out.str();
}

PauliOperator from_text(const std::string &text, std::size_t n, std::uint32_t d) {
    PauliOperator P(n, d);
    std::int64_t phase = 0;
    std::istringstream in(text);
    std::string tok;
    auto fail = [&](const std::string &why) {
        throw std::invalid_argument("bad Pauli text '" + text + "': " + why);
    };
    while (in >> tok) {
        if (tok == "I") {
            continue;
        }
        if (tok.rfind("phase:", 0) == 0) {
            try {
                phase = std::stoll(tok.substr(6));
            } catch (const std::exception &) {
                fail("unparseable phase");
            }
            continue;
        }
        // K[e<idx>]^<exp>
        if (tok.size() < 7 || (tok[0] != 'X' && tok[0] != 'Z') || tok[1] != '[' || tok[2] != 'e') {
            fail("unknown token " + tok);
        }
        auto close = tok.find("]^");
        if (close == std::string::npos) {
            fail("missing ]^ in " + tok);
        }
        std::size_t q = 0;
        std::int64_t e = 0;
        try {
            q = std::stoul(tok.substr(3, close - 3));
            e = std::stoll(tok.substr(close + 2));
        } catch (const std::exception &) {
            fail("unparseable index or exponent in " + tok);
        }
        if (q >= n) {
            fail("qudit index out of range");
        }
        if (tok[0] == 'X') {
            P.add_x(q, e);
        } else {
            P.add_z(q, e);
        }
    }
    return P.with_phase(PhaseExponent(phase, d));
}

OperatorWord::OperatorWord(const std::vector<std::pair<PauliOperator, int>> &letters) {
    for (const auto &[op, e] : letters) {
        push(op, e);
    }
}

std::size_t OperatorWord::intern(const PauliOperator &op) {
    if (!alphabet_.empty()) {
        check_compatible(alphabet_.front(), op);
    }
    for (std::size_t i = 0; i < alphabet_.size(); i++) {
        if (alphabet_[i] == op) {
            return i;
        }
    }
    alphabet_.push_back(op);
    return alphabet_.size() - 1;
}

std::size_t OperatorWord::add_symbol(const PauliOperator &op) {
    if (!alphabet_.empty()) {
        check_compatible(alphabet_.front(), op);
    }
    alphabet_.push_back(op);
    return alphabet_.size() - 1;
}

void OperatorWord::push(std::size_t id, int exponent) {
    if (id >= alphabet_.size()) {
        throw std::invalid_argument("letter id outside the alphabet");
    }
    if (exponent != 1 && exponent != -1) {
        throw std::invalid_argument("letter exponent must be +1 or -1");
    }
    letters_.push_back({id, exponent});
}

WordReduction reduce_word(const OperatorWord &w) {
    if (w.empty()) {
        throw std::invalid_argument("reduce_word needs a non-empty word");
    }
    const auto &first = w.alphabet()[w.letters()[0].id];
    PauliOperator acc = PauliOperator::identity(first.num_qudits(), first.qudit_dimension());
    std::vector<PauliOperator> inverses;
    inverses.reserve(w.alphabet().size());
    for (const auto &op : w.alphabet()) {
        inverses.push_back(dagger(op));
    }
    for (const auto &letter : w.letters()) {
        acc = multiply(acc, letter.exponent > 0 ? w.alphabet()[letter.id] : inverses[letter.id]);
    }
    return WordReduction{acc.phase(), acc.phaseless()};
}

CollapseResult symbolic_collapse(const OperatorWord &w, const std::vector<std::vector<std::size_t>> &commuting_sets) {
    const auto &alphabet = w.alphabet();
    if (w.empty()) {
        throw std::invalid_argument("symbolic_collapse needs a non-empty word");
    }
    const std::uint32_t d = alphabet.front().qudit_dimension();
    const std::size_t m = alphabet.size();

    std::vector<std::vector<bool>> exempt(m, std::vector<bool>(m, false));
    for (const auto &set : commuting_sets) {
        for (auto a : set) {
            for (auto b : set) {
                if (a >= m || b >= m) {
                    throw std::invalid_argument("commuting set names a letter outside the alphabet");
                }
                if (!commutator(alphabet[a], alphabet[b]).is_zero()) {
                    throw std::invalid_argument("commuting set contains a non-commuting pair");
                }
                exempt[a][b] = true;
            }
        }
    }

    CollapseResult out;
    std::vector<OperatorWord::Letter> word = w.letters();
    const std::size_t bound = word.size() * word.size();
    std::size_t swaps = 0;
    while (!word.empty()) {
        OperatorWord::Letter head = word.front();
        std::size_t j = 1;
        while (j < word.size() && !(word[j].id == head.id && word[j].exponent == -head.exponent)) {
            j++;
        }
        if (j == word.size()) {
            throw std::invalid_argument("word does not reduce to the identity: unmatched letter");
        }
        // U W U^-1 = W * prod_{V in W} [U, V]
        for (std::size_t i = 1; i < j; i++) {
            if (++swaps > bound) {
                throw std::runtime_error("symbolic_collapse exceeded its rewrite bound");
            }
            const auto &v = word[i];
            if (v.id == head.id || exempt[head.id][v.id]) {
                continue;
            }
            out.emitted.push_back({head.id, v.id, static_cast<std::int64_t>(head.exponent) * v.exponent});
        }
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
        word.erase(word.begin());
    }

    // [U_b, U_a] = [U_a, U_b]^-1, so [U,U'][U^-1,U'] pairs cancel in the net exponent.
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> net;
    for (const auto &f : out.emitted) {
        if (f.a < f.b) {
            net[{f.a, f.b}] += f.exponent;
        } else {
            net[{f.b, f.a}] -= f.exponent;
        }
    }
    out.phase = PhaseExponent(0, d);
    for (const auto &[key, e] : net) {
        if (e == 0) {
            continue;
        }
        out.residual.push_back({key.first, key.second, e});
        out.phase += commutator(alphabet[key.first], alphabet[key.second]) * e;
    }
    return out;
}

}  // namespace anomalab::pauli
