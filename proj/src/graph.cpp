/*
   Copyright 2026 The ratgf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <ratgf/errors.hpp>
#include <ratgf/graph.hpp>
#include <ratgf/linalg.hpp>

#include <stdexcept>

namespace ratgf {

std::string to_string(EdgeLabel label) {
    switch (label) {
        case EdgeLabel::vertical: return "vertical";
        case EdgeLabel::horizontal: return "horizontal";
        case EdgeLabel::other: return "other";
    }
    return "other";
}

EdgeLabel parse_edge_label(const std::string& s) {
    if (s == "vertical") return EdgeLabel::vertical;
    if (s == "horizontal") return EdgeLabel::horizontal;
    if (s == "other") return EdgeLabel::other;
    throw std::invalid_argument("unknown edge label '" + s + "'");
}

LabeledGraph::LabeledGraph(std::size_t n_vertices) : n_(n_vertices) {
    if (n_ == 0) throw std::invalid_argument("a graph needs at least one vertex");
}

void LabeledGraph::add_edge(std::size_t u, std::size_t v, EdgeLabel label, unsigned long multiplicity) {
    if (u >= n_ || v >= n_)
        throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") outside " +
                                    std::to_string(n_) + " vertices");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (multiplicity == 0) throw std::invalid_argument("edge multiplicity must be positive");
    edges_.push_back({u, v, label, multiplicity});
}

LabeledGraph path_graph(std::size_t k) {
    LabeledGraph g(k);
    for (std::size_t i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1, EdgeLabel::other);
    return g;
}

LabeledGraph grid_graph(std::size_t k, std::size_t n) {
    if (k == 0 || n == 0) throw std::invalid_argument("grid dimensions must be positive");
    LabeledGraph g(k * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t v = j * k + i;
            if (i + 1 < k) g.add_edge(v, v + 1, EdgeLabel::vertical);
            if (j + 1 < n) g.add_edge(v, v + k, EdgeLabel::horizontal);
        }
    return g;
}

LabeledGraph product_with_path(const LabeledGraph& g, std::size_t n) {
    if (n == 0) throw std::invalid_argument("product with an empty path");
    const std::size_t m = g.n_vertices();
    LabeledGraph p(m * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (const Edge& e : g.edges()) p.add_edge(j * m + e.u, j * m + e.v, EdgeLabel::vertical, e.multiplicity);
        if (j + 1 < n)
            for (std::size_t v = 0; v < m; ++v) p.add_edge(j * m + v, (j + 1) * m + v, EdgeLabel::horizontal);
    }
    return p;
}

Matrix<Integer> laplacian(const LabeledGraph& g) {
    const std::size_t n = g.n_vertices();
    Matrix<Integer> l(n, n);
    for (const Edge& e : g.edges()) {
        const Integer w(e.multiplicity);
        l(e.u, e.u) += w;
        l(e.v, e.v) += w;
        l(e.u, e.v) -= w;
        l(e.v, e.u) -= w;
    }
    return l;
}

Matrix<PolyZ> laplacian(const LabeledGraph& g, VerticalWeight weight) {
    const std::size_t n = g.n_vertices();
    Matrix<PolyZ> l(n, n);
    for (const Edge& e : g.edges()) {
        const Integer m(e.multiplicity);
        const PolyZ w = weight == VerticalWeight::symbol_v && e.label == EdgeLabel::vertical
                            ? PolyZ::monomial(m, 1)
                            : PolyZ(m);
        l(e.u, e.u) += w;
        l(e.v, e.v) += w;
        l(e.u, e.v) -= w;
        l(e.v, e.u) -= w;
    }
    return l;
}

Integer spanning_tree_count(const LabeledGraph& g) {
    const std::size_t last = g.n_vertices() - 1;
    return det_bareiss(laplacian(g).without({last}, {last}));
}

Integer two_forest_count(const LabeledGraph& g, std::size_t a, std::size_t b) {
    if (a == b) throw BadVertexPair("marked vertices coincide (" + std::to_string(a) + ")");
    if (a >= g.n_vertices() || b >= g.n_vertices())
        throw BadVertexPair("marked vertex outside the graph");
    std::vector<std::size_t> drop{std::min(a, b), std::max(a, b)};
    return det_bareiss(laplacian(g).without(drop, drop));
}

PolyZ ver_polynomial(const LabeledGraph& g) {
    const std::size_t last = g.n_vertices() - 1;
    return det_bareiss(laplacian(g, VerticalWeight::symbol_v).without({last}, {last}));
}

}  // namespace ratgf
