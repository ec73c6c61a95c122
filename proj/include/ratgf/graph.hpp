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


#ifndef RATGF_GRAPH_HPP
#define RATGF_GRAPH_HPP

#include <ratgf/integer.hpp>
#include <ratgf/matrix.hpp>
#include <ratgf/poly.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace ratgf {

enum class EdgeLabel { vertical, horizontal, other };

std::string to_string(EdgeLabel label);
/// Inverse of to_string; throws std::invalid_argument on anything else.
EdgeLabel parse_edge_label(const std::string& s);

struct Edge {
    std::size_t u = 0, v = 0;
    EdgeLabel label = EdgeLabel::other;
    unsigned long multiplicity = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/*
 * Undirected multigraph with labeled edges. Self-loops and out-of-range
 * endpoints are rejected (std::invalid_argument); a loop never changes a
 * spanning-tree count anyway.
 */
class LabeledGraph {
public:
    explicit LabeledGraph(std::size_t n_vertices = 1);

    void add_edge(std::size_t u, std::size_t v, EdgeLabel label, unsigned long multiplicity = 1);

    std::size_t n_vertices() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
};

/// Path on k vertices; its edges are labeled other.
LabeledGraph path_graph(std::size_t k);

/// k x n grid, vertex (i, j) at index (j-1)*k + (i-1).
LabeledGraph grid_graph(std::size_t k, std::size_t n);

/// n layers of G. Edges inside a layer become vertical, the copies of a
/// vertex in consecutive layers are joined by horizontal edges. Vertex v of
/// layer j (0-based) gets index j*|G| + v.
LabeledGraph product_with_path(const LabeledGraph& g, std::size_t n);

enum class VerticalWeight { one, symbol_v };

Matrix<Integer> laplacian(const LabeledGraph& g);
/// Laplacian over Z[v]; with symbol_v each vertical edge has weight v.
Matrix<PolyZ> laplacian(const LabeledGraph& g, VerticalWeight weight);

/// Determinant of the Laplacian with its last row and column removed.
Integer spanning_tree_count(const LabeledGraph& g);

/// Spanning forests with two trees, one holding a and the other b.
Integer two_forest_count(const LabeledGraph& g, std::size_t a, std::size_t b);

/// Sum over spanning trees T of v^(number of vertical edges of T).
PolyZ ver_polynomial(const LabeledGraph& g);

}  // namespace ratgf

#endif  // RATGF_GRAPH_HPP
