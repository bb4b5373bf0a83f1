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

#include "anomalab/chain_complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace anomalab::chain {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
        throw std::invalid_argument("simplex needs at least one vertex");
    }
    for (std::size_t i = 1; i < vertices_.size(); i++) {
        if (vertices_[i - 1] >= vertices_[i]) {
            throw std::invalid_argument("simplex vertices must be strictly increasing");
        }
    }
}

Simplex Simplex::face(std::size_t m) const {
    std::vector<VertexId> out;
    out.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); i++) {
        if (i != m) {
            out.push_back(vertices_[i]);
        }
    }
    return Simplex(std::move(out));
}

std::string to_string(const Simplex &s) {
    std::string out;
    for (std::size_t i = 0; i < s.vertices().size(); i++) {
        if (i) {
            out += ' ';
        }
        VertexId v = s.vertices()[i];
        out += v == kInfinity ? std::string("inf") : std::to_string(v);
    }
    return out;
}

void SimplicialComplex::add_simplex(const Simplex &s) {
    int k = s.dimension();
    if (static_cast<int>(simplices_.size()) <= k) {
        simplices_.resize(k + 1);
    }
    if (!simplices_[k].insert(s).second) {
        return;
    }
    if (k > 0) {
        for (std::size_t m = 0; m <= static_cast<std::size_t>(k); m++) {
            add_simplex(s.face(m));
        }
    }
}

bool SimplicialComplex::contains(const Simplex &s) const {
    int k = s.dimension();
    return k < static_cast<int>(simplices_.size()) && simplices_[k].count(s) > 0;
}

std::vector<Simplex> SimplicialComplex::simplices(int k) const {
    if (k < 0 || k >= static_cast<int>(simplices_.size())) {
        return {};
    }
    return std::vector<Simplex>(simplices_[k].begin(), simplices_[k].end());
}

std::size_t SimplicialComplex::count(int k) const {
    if (k < 0 || k >= static_cast<int>(simplices_.size())) {
        return 0;
    }
    return simplices_[k].size();
}

std::vector<VertexId> SimplicialComplex::vertices() const {
    std::vector<VertexId> out;
    for (const auto &s : simplices(0)) {
        out.push_back(s.vertices()[0]);
    }
    return out;
}

std::optional<std::array<double, 3>> SimplicialComplex::position(VertexId v) const {
    auto it = positions_.find(v);
    if (it == positions_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < simplices_.size(); k++) {
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(simplices_[k].size());
    }
    return chi;
}

std::string SimplicialComplex::to_text() const {
    std::string out;
    for (int k = 0; k <= top_dimension(); k++) {
        for (const auto &s : simplices_[k]) {
            out += to_string(s);
            out += '\n';
        }
    }
    return out;
}

SimplicialComplex SimplicialComplex::from_text(const std::string &text) {
    SimplicialComplex X;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream words(line);
        std::vector<VertexId> vs;
        std::string w;
        while (words >> w) {
            if (w == "inf") {
                vs.push_back(kInfinity);
                continue;
            }
            try {
                std::size_t used = 0;
                unsigned long v = std::stoul(w, &used);
                if (used != w.size() || v >= kInfinity) {
                    throw std::invalid_argument(w);
                }
                vs.push_back(static_cast<VertexId>(v));
            } catch (const std::exception &) {
                throw std::invalid_argument("bad vertex '" + w + "' on line " + std::to_string(line_no));
            }
        }
        if (vs.empty()) {
            continue;
        }
        std::sort(vs.begin(), vs.end());
        X.add_simplex(Simplex(vs));
    }
    return X;
}

Chain::Chain(int dimension, std::uint32_t modulus) : dimension_(dimension), modulus_(modulus) {
    if (dimension < 0 || modulus < 2) {
        throw std::invalid_argument("chain needs dimension >= 0 and modulus >= 2");
    }
}

void Chain::add(const Simplex &s, std::int64_t coeff) {
    if (s.dimension() != dimension_) {
        throw std::invalid_argument("simplex dimension differs from chain dimension");
    }
    std::int64_t d = modulus_;
    std::int64_t cur = coefficient(s);
    std::int64_t v = ((cur + coeff) % d + d) % d;
    if (v == 0) {
        terms_.erase(s);
    } else {
        terms_[s] = static_cast<std::uint32_t>(v);
    }
}

std::uint32_t Chain::coefficient(const Simplex &s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
}

Chain Chain::operator+(const Chain &other) const {
    if (other.dimension_ != dimension_ || other.modulus_ != modulus_) {
        throw std::invalid_argument("adding chains of different dimension or modulus");
    }
    Chain out = *this;
    for (const auto &[s, c] : other.terms_) {
        out.add(s, c);
    }
    return out;
}

Chain Chain::scaled(std::int64_t k) const {
    Chain out(dimension_, modulus_);
    for (const auto &[s, c] : terms_) {
        out.add(s, k * static_cast<std::int64_t>(c));
    }
    return out;
}

Chain boundary(const Chain &c) {
    if (c.dimension() == 0) {
        throw std::invalid_argument("boundary of a 0-chain is undefined");
    }
    Chain out(c.dimension() - 1, c.modulus());
    for (const auto &[s, coeff] : c.terms()) {
        for (std::size_t m = 0; m < s.vertices().size(); m++) {
            std::int64_t sign = (m % 2 == 0) ? 1 : static_cast<std::int64_t>(c.modulus()) - 1;
            out.add(s.face(m), sign * coeff);
        }
    }
    return out;
}

zmod::ZModMatrix boundary_matrix(const SimplicialComplex &X, int k, std::uint32_t modulus) {
    auto rows = X.simplices(k);
    auto cols = X.simplices(k - 1);
    zmod::ZModMatrix D(rows.size(), cols.size(), modulus);
    if (k <= 0) {
        return D;
    }
    for (std::size_t r = 0; r < rows.size(); r++) {
        for (std::size_t m = 0; m < rows[r].vertices().size(); m++) {
            auto it = std::lower_bound(cols.begin(), cols.end(), rows[r].face(m));
            std::size_t c = static_cast<std::size_t>(it - cols.begin());
            D.put(r, c, static_cast<std::int64_t>(D.get(r, c)) + (m % 2 == 0 ? 1 : -1));
        }
    }
    return D;
}

std::optional<Chain> is_boundary(const SimplicialComplex &X, const Chain &a) {
    int k = a.dimension();
    if (k >= X.top_dimension()) {
        throw std::invalid_argument("is_boundary: chain dimension must be below the top dimension");
    }
    for (const auto &[s, coeff] : a.terms()) {
        if (!X.contains(s)) {
            throw std::invalid_argument("is_boundary: chain has a simplex outside the complex");
        }
    }
    Chain s(k + 1, a.modulus());
    if (a.is_zero()) {
        return s;
    }
    auto targets = X.simplices(k);
    auto sources = X.simplices(k + 1);
    std::vector<std::uint32_t> b(targets.size(), 0);
    for (const auto &[simplex, coeff] : a.terms()) {
        auto it = std::lower_bound(targets.begin(), targets.end(), simplex);
        b[static_cast<std::size_t>(it - targets.begin())] = coeff;
    }
    auto c = zmod::solve_in_span(boundary_matrix(X, k + 1, a.modulus()), b);
    if (!c) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < sources.size(); i++) {
        if ((*c)[i] != 0) {
            s.add(sources[i], (*c)[i]);
        }
    }
    return s;
}

zmod::BigCount homology_order(const SimplicialComplex &X, int k, std::uint32_t modulus) {
    // |H_k| = |ker d_k| / |im d_{k+1}|, and |ker d_k| = d^{n_k} / |im d_k|.
    zmod::BigCount chains = 1;
    for (std::size_t i = 0; i < X.count(k); i++) {
        chains *= modulus;
    }
    zmod::BigCount image_k = k > 0 ? zmod::span_size(boundary_matrix(X, k, modulus)) : zmod::BigCount(1);
    zmod::BigCount image_k1 = zmod::span_size(boundary_matrix(X, k + 1, modulus));
    return chains / (image_k * image_k1);
}

SimplicialComplex minimal_sphere_complex(int d) {
    if (d < 1 || d > 3) {
        throw std::invalid_argument("minimal_sphere_complex supports d in {1, 2, 3}");
    }
    SimplicialComplex X;
    // outer vertices 1..d+1
    std::vector<VertexId> outer;
    for (VertexId v = 1; v <= static_cast<VertexId>(d + 1); v++) {
        outer.push_back(v);
    }
    for (std::size_t skip = 0; skip < outer.size(); skip++) {
        std::vector<VertexId> facet;
        for (std::size_t i = 0; i < outer.size(); i++) {
            if (i != skip) {
                facet.push_back(outer[i]);
            }
        }
        std::vector<VertexId> inner = facet;
        inner.insert(inner.begin(), 0);
        X.add_simplex(Simplex(inner));
        facet.push_back(kInfinity);
        X.add_simplex(Simplex(facet));
    }
    // barycentric placement of the subdivided simplex
    std::array<double, 3> center{0, 0, 0};
    for (std::size_t i = 0; i < outer.size(); i++) {
        std::array<double, 3> p{0, 0, 0};
        if (i > 0) {
            p[i - 1] = 1.0;
        }
        X.set_position(outer[i], p);
        for (int a = 0; a < 3; a++) {
            center[a] += p[a] / static_cast<double>(outer.size());
        }
    }
    X.set_position(0, center);
    return X;
}

}  // namespace anomalab::chain
