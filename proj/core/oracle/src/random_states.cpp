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

#include "anomalab/oracle/random_states.hpp"

#include <numeric>
#include <stdexcept>

namespace anomalab::oracle {

using pauli::PauliOperator;

PauliOperator random_pauli(std::size_t n, std::uint32_t d, std::mt19937_64 &rng, bool half_phases) {
    std::uniform_int_distribution<std::uint32_t> digit(0, d - 1);
    std::vector<std::uint32_t> x(n), z(n);
    for (std::size_t q = 0; q < n; q++) {
        x[q] = digit(rng);
        z[q] = digit(rng);
    }
    std::uniform_int_distribution<std::int64_t> phase(0, 2 * d - 1);
    std::int64_t p = phase(rng);
    if (!half_phases) {
        p &= ~std::int64_t{1};
    }
    return PauliOperator(std::move(x), std::move(z), p, d);
}

namespace {

struct Symplectic {
    std::vector<std::int64_t> x, z;
};

// Gates act on every generator's (x, z) at once; each preserves sum_q z_q x'_q - x_q z'_q.
void fourier(std::vector<Symplectic> &gens, std::size_t q) {
    for (auto &g : gens) {
        auto x = g.x[q];
        g.x[q] = g.z[q];
        g.z[q] = -x;
    }
}

void shear(std::vector<Symplectic> &gens, std::size_t q) {
    for (auto &g : gens) {
        g.z[q] += g.x[q];
    }
}

void scale(std::vector<Symplectic> &gens, std::size_t q, std::int64_t a, std::int64_t a_inv) {
    for (auto &g : gens) {
        g.x[q] *= a;
        g.z[q] *= a_inv;
    }
}

void sum_gate(std::vector<Symplectic> &gens, std::size_t c, std::size_t t) {
    for (auto &g : gens) {
        g.x[t] += g.x[c];
        g.z[c] -= g.z[t];
    }
}

std::uint32_t order_of(const PauliOperator &g) {
    const std::uint32_t d = g.qudit_dimension();
    std::uint32_t m = 1;
    for (std::size_t q = 0; q < g.num_qudits(); q++) {
        for (auto e : {g.x(q), g.z(q)}) {
            std::uint32_t k = d / std::gcd(e, d);
            m = std::lcm(m, k);
        }
    }
    return m;
}

}  // namespace

stabilizer::StabilizerState random_stabilizer_state(std::size_t n, std::uint32_t d, std::mt19937_64 &rng, int gates) {
    std::vector<Symplectic> gens;
    auto blank = [&] { return Symplectic{std::vector<std::int64_t>(n, 0), std::vector<std::int64_t>(n, 0)}; };
    std::uniform_int_distribution<int> pick(0, d == 4 ? 3 : 1);
    for (std::size_t q = 0; q < n; q++) {
        Symplectic g = blank();
        switch (pick(rng)) {
            case 0:
                g.z[q] = 1;
                gens.push_back(g);
                break;
            case 1:
                g.x[q] = 1;
                gens.push_back(g);
                break;
            case 2: {
                Symplectic h = blank();
                g.x[q] = 2;
                h.z[q] = 2;
                gens.push_back(g);
                gens.push_back(h);
                break;
            }
            default:
                g.x[q] = 1;
                g.z[q] = 1;
                gens.push_back(g);
                break;
        }
    }
    std::vector<std::int64_t> units;
    for (std::uint32_t a = 1; a < d; a++) {
        if (std::gcd(a, d) == 1) {
            units.push_back(a);
        }
    }
    std::uniform_int_distribution<std::size_t> qudit(0, n - 1);
    std::uniform_int_distribution<int> kind(0, n > 1 ? 3 : 2);
    std::uniform_int_distribution<std::size_t> unit(0, units.size() - 1);
    for (int i = 0; i < gates; i++) {
        std::size_t q = qudit(rng);
        switch (kind(rng)) {
            case 0:
                fourier(gens, q);
                break;
            case 1:
                shear(gens, q);
                break;
            case 2: {
                std::int64_t a = units[unit(rng)], a_inv = 1;
                while ((a * a_inv) % d != 1) {
                    a_inv++;
                }
                scale(gens, q, a, a_inv);
                break;
            }
            default: {
                std::size_t t = qudit(rng);
                if (t != q) {
                    sum_gate(gens, q, t);
                }
                break;
            }
        }
    }
    PauliOperator frame = random_pauli(n, d, rng, false);
    std::vector<PauliOperator> out;
    for (const auto &g : gens) {
        std::vector<std::uint32_t> x(n), z(n);
        for (std::size_t q = 0; q < n; q++) {
            x[q] = static_cast<std::uint32_t>(((g.x[q] % d) + d) % d);
            z[q] = static_cast<std::uint32_t>(((g.z[q] % d) + d) % d);
        }
        PauliOperator P(std::move(x), std::move(z), 0, d);
        // choose the phase so that P^m = 1 for the order m of its exponents
        std::uint32_t m = order_of(P);
        auto excess = pauli::power(P, m).phase().value();
        std::int64_t fix = -1;
        for (std::int64_t p = 0; p < 2 * static_cast<std::int64_t>(d); p++) {
            if ((static_cast<std::int64_t>(m) * p + excess) % (2 * d) == 0) {
                fix = p;
                break;
            }
        }
        if (fix < 0) {
            throw std::logic_error("no phase makes the generator order consistent");
        }
        out.push_back(pauli::conjugate_by(frame, P.with_phase(pauli::PhaseExponent(fix, d))));
    }
    return stabilizer::StabilizerState(std::move(out));
}

}  // namespace anomalab::oracle
