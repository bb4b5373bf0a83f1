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

#include "anomalab/oracle/dense.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace anomalab::oracle {

namespace {

std::vector<std::uint32_t> digits_of(std::size_t index, std::size_t n, std::uint32_t d) {
    std::vector<std::uint32_t> digits(n);
    for (std::size_t q = n; q-- > 0;) {
        digits[q] = static_cast<std::uint32_t>(index % d);
        index /= d;
    }
    return digits;
}

std::size_t index_of(const std::vector<std::uint32_t> &digits, std::uint32_t d) {
    std::size_t index = 0;
    for (auto j : digits) {
        index = index * d + j;
    }
    return index;
}

std::complex<double> omega_half(std::int64_t k, std::uint32_t d) {
    // omega^{k/2} = exp(i pi k / d)
    double angle = M_PI * static_cast<double>(k) / static_cast<double>(d);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::size_t dense_dimension(std::size_t n, std::uint32_t d) {
    if (n > kMaxDenseQudits) {
        throw std::invalid_argument("dense oracle limited to small registers");
    }
    std::size_t dim = 1;
    for (std::size_t q = 0; q < n; q++) {
        dim *= d;
    }
    return dim;
}

Vector apply_dense(const pauli::PauliOperator &P, const Vector &v) {
    const std::size_t n = P.num_qudits();
    const std::uint32_t d = P.qudit_dimension();
    const std::size_t dim = dense_dimension(n, d);
    if (static_cast<std::size_t>(v.size()) != dim) {
        throw std::invalid_argument("vector size does not match the operator register");
    }
    Vector out = Vector::Zero(static_cast<Eigen::Index>(dim));
    const auto global = omega_half(P.phase().value(), d);
    for (std::size_t i = 0; i < dim; i++) {
        auto digits = digits_of(i, n, d);
        std::int64_t zexp = 0;
        for (std::size_t q = 0; q < n; q++) {
            zexp += static_cast<std::int64_t>(P.z(q)) * digits[q];
            digits[q] = (digits[q] + P.x(q)) % d;
        }
        // X^x Z^z |j> = omega^{z.j} |j + x>
        out[static_cast<Eigen::Index>(index_of(digits, d))] += global * omega_half(2 * zexp, d) * v[static_cast<Eigen::Index>(i)];
    }
    return out;
}

Matrix dense_pauli(const pauli::PauliOperator &P) {
    const std::size_t dim = dense_dimension(P.num_qudits(), P.qudit_dimension());
    Matrix M(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t c = 0; c < dim; c++) {
        Vector e = Vector::Zero(static_cast<Eigen::Index>(dim));
        e[static_cast<Eigen::Index>(c)] = 1.0;
        M.col(static_cast<Eigen::Index>(c)) = apply_dense(P, e);
    }
    return M;
}

Vector dense_state(const stabilizer::StabilizerState &s, std::uint64_t seed) {
    const std::size_t n = s.num_qudits();
    const std::uint32_t d = s.qudit_dimension();
    const std::size_t dim = dense_dimension(n, d);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    for (int attempt = 0; attempt < 8; attempt++) {
        Vector v(static_cast<Eigen::Index>(dim));
        for (auto &c : v) {
            c = {normal(rng), normal(rng)};
        }
        for (const auto &g : s.generators()) {
            // (1/m) sum_k g^k projects onto the +1 eigenspace once g^m = 1
            Vector acc = v;
            Vector term = v;
            std::size_t m = 1;
            for (; m <= 4 * d; m++) {
                if (pauli::power(g, static_cast<std::int64_t>(m)).is_identity()) {
                    break;
                }
                term = apply_dense(g, term);
                acc += term;
            }
            if (m > 4 * d) {
                throw std::invalid_argument("generator has no +1 eigenvalue");
            }
            v = acc / static_cast<double>(m);
        }
        double norm = v.norm();
        if (norm > 1e-6) {
            return v / norm;
        }
    }
    throw std::invalid_argument("generators have no common +1 eigenvector");
}

std::complex<double> dense_expectation(const Vector &psi, const pauli::PauliOperator &P) {
    return psi.dot(apply_dense(P, psi));
}

double dense_overlap(const Vector &a, const Vector &b) { return std::abs(a.dot(b)); }

double dense_entropy(const Vector &psi, std::size_t n, std::uint32_t d, const stabilizer::Region &R) {
    const std::size_t dim = dense_dimension(n, d);
    auto rest = R.complement(n);
    const std::size_t da = dense_dimension(R.size(), d);
    const std::size_t db = dim / da;
    Matrix A = Matrix::Zero(static_cast<Eigen::Index>(da), static_cast<Eigen::Index>(db));
    for (std::size_t i = 0; i < dim; i++) {
        auto digits = digits_of(i, n, d);
        std::size_t a = 0, b = 0;
        for (auto q : R.qudits()) {
            a = a * d + digits[q];
        }
        for (auto q : rest.qudits()) {
            b = b * d + digits[q];
        }
        A(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = psi[static_cast<Eigen::Index>(i)];
    }
    Matrix rho = A * A.adjoint();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(rho);
    double S = 0;
    for (auto lambda : eig.eigenvalues()) {
        if (lambda > 1e-12) {
            S -= lambda * std::log2(lambda);
        }
    }
    return S;
}

}  // namespace anomalab::oracle
