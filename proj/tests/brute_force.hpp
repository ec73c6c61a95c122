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


// Exhaustive edge-subset oracles for small graphs. Parallel edges count as
// distinguishable.
#pragma once

#include "support.hpp"

#include <ratgf/graph.hpp>

#include <numeric>
#include <vector>

namespace ratgf::testing {

struct Forest {
    std::vector<std::size_t> parent;
    explicit Forest(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool join(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

inline std::vector<Edge> unit_edges(const LabeledGraph& g) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        for (unsigned long i = 0; i < e.multiplicity; ++i) out.push_back({e.u, e.v, e.label, 1});
    return out;
}

// Coefficient list (by vertical edge count) of acyclic edge sets with
// exactly `components` trees; with a != b they must also separate a and b.
inline std::vector<long> brute_forests(const LabeledGraph& g, std::size_t components, std::size_t a = 0,
                                       std::size_t b = 0) {
    const auto es = unit_edges(g);
    const std::size_t n = g.n_vertices();
    std::vector<long> by_vertical(es.size() + 1, 0);
    if (components > n) return by_vertical;
    const std::size_t want = n - components;
    for (unsigned long mask = 0; mask < (1ul << es.size()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountl(mask)) != want) continue;
        Forest f(n);
        bool ok = true;
        std::size_t vert = 0;
        for (std::size_t i = 0; i < es.size() && ok; ++i)
            if (mask >> i & 1) {
                ok = f.join(es[i].u, es[i].v);
                if (es[i].label == EdgeLabel::vertical) ++vert;
            }
        if (!ok) continue;
        if (a != b && f.find(a) == f.find(b)) continue;
        ++by_vertical[vert];
    }
    return by_vertical;
}

inline long brute_total(const std::vector<long>& c) { return std::accumulate(c.begin(), c.end(), 0l); }

inline LabeledGraph random_graph(std::size_t max_vertices, std::size_t max_edges) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, static_cast<long>(max_vertices)));
    LabeledGraph g(n);
    if (n < 2) return g;
    std::size_t budget = static_cast<std::size_t>(uniform(0, static_cast<long>(max_edges)));
    while (budget > 0) {
        const auto u = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
        const auto v = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
        if (u == v) continue;
        const unsigned long mult = std::min<unsigned long>(budget, static_cast<unsigned long>(uniform(1, 2)));
        const auto label = static_cast<EdgeLabel>(uniform(0, 2));
        g.add_edge(u, v, label, mult);
        budget -= mult;
    }
    return g;
}

}  // namespace ratgf::testing
