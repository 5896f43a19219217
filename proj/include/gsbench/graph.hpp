// Copyright 2026 The gsbench authors
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "gsbench/common.hpp"

namespace gsbench {

// Undirected edge, normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph on vertices 0..n-1. Edges are stored normalized
// and sorted; adjacency is kept both as sorted neighbor lists and as packed
// bit rows for fast membership tests during subgraph searches.
class Graph {
  public:
    Graph() = default;

    Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
        std::vector<Edge> normalized;
        normalized.reserve(edges.size());
        for (const Edge& e : edges) {
            require(e.first != e.second, "self-loop at vertex ", e.first);
            require(e.first < n_ && e.second < n_,
                    "edge (", e.first, ", ", e.second, ") references a vertex id >= n=", n_);
            normalized.push_back(make_edge(e.first, e.second));
        }
        std::sort(normalized.begin(), normalized.end());
        for (std::size_t i = 1; i < normalized.size(); ++i) {
            require(normalized[i] != normalized[i - 1],
                    "duplicate edge (", normalized[i].first, ", ", normalized[i].second, ")");
        }
        edges_ = std::move(normalized);
        adj_.assign(n_, {});
        std::size_t words = words_for_bits(n_);
        adj_bits_.assign(n_ * words, 0);
        for (const Edge& e : edges_) {
            adj_[e.first].push_back(e.second);
            adj_[e.second].push_back(e.first);
            set_bit(adjacency_row(e.first), e.second, true);
            set_bit(adjacency_row(e.second), e.first, true);
        }
        for (auto& nbrs : adj_) {
            std::sort(nbrs.begin(), nbrs.end());
        }
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        require(v < n_, "vertex ", v, " out of range (n=", n_, ")");
        return adj_[v];
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& nbrs : adj_) {
            d = std::max(d, nbrs.size());
        }
        return d;
    }

    bool has_edge(Vertex a, Vertex b) const {
        if (a >= n_ || b >= n_ || a == b) {
            return false;
        }
        return get_bit(adjacency_row(a), b);
    }

    // Packed adjacency row of v: bit u is set iff (v, u) is an edge.
    const std::uint64_t* adjacency_row(Vertex v) const {
        return adj_bits_.data() + static_cast<std::size_t>(v) * words_for_bits(n_);
    }

    std::string name;

  private:
    std::uint64_t* adjacency_row(Vertex v) {
        return adj_bits_.data() + static_cast<std::size_t>(v) * words_for_bits(n_);
    }

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> adj_bits_;
};

// ---------------------------------------------------------------------------
// Coloring
// ---------------------------------------------------------------------------

// Proper vertex coloring with colors 0..k-1. Color classes double as
// measurement groupings, so each class must be an independent set.
struct VertexColoring {
    std::vector<std::uint32_t> colors;
    std::uint32_t k = 0;

    bool bipartite() const { return k <= 2; }

    std::vector<Vertex> class_vertices(std::uint32_t c) const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < colors.size(); ++v) {
            if (colors[v] == c) {
                out.push_back(v);
            }
        }
        return out;
    }

    bool proper_for(const Graph& g) const {
        if (colors.size() != g.vertex_count()) {
            return false;
        }
        for (const Edge& e : g.edges()) {
            if (colors[e.first] == colors[e.second]) {
                return false;
            }
        }
        for (std::uint32_t c : colors) {
            if (c >= k) {
                return false;
            }
        }
        return true;
    }
};

// BFS 2-coloring when the graph is bipartite; otherwise falls back to a
// greedy proper coloring (vertices in ascending id order, smallest free
// color). Deterministic either way.
inline VertexColoring two_color(const Graph& g) {
    std::size_t n = g.vertex_count();
    VertexColoring result;
    result.colors.assign(n, 0);

    std::vector<int> color(n, -1);
    bool bipartite = true;
    for (Vertex start = 0; start < n && bipartite; ++start) {
        if (color[start] != -1) {
            continue;
        }
        color[start] = 0;
        std::deque<Vertex> queue{start};
        while (!queue.empty() && bipartite) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex u : g.neighbors(v)) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    bipartite = false;
                    break;
                }
            }
        }
    }

    if (bipartite) {
        std::uint32_t seen = 0;
        for (Vertex v = 0; v < n; ++v) {
            result.colors[v] = static_cast<std::uint32_t>(color[v]);
            seen = std::max(seen, result.colors[v] + 1);
        }
        result.k = seen;
        return result;
    }

    // Greedy fallback for odd cycles and other non-bipartite inputs.
    std::uint32_t k = 0;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<bool> used(k + 1, false);
        for (Vertex u : g.neighbors(v)) {
            if (u < v) {
                used[result.colors[u]] = true;
            }
        }
        std::uint32_t c = 0;
        while (used[c]) {
            ++c;
        }
        result.colors[v] = c;
        k = std::max(k, c + 1);
    }
    result.k = k;
    return result;
}

// ---------------------------------------------------------------------------
// Vertex-set helpers
// ---------------------------------------------------------------------------

inline void require_vertex_set(const Graph& g, std::span<const Vertex> vs, const char* what) {
    std::set<Vertex> seen;
    for (Vertex v : vs) {
        require(v < g.vertex_count(), what, ": vertex ", v, " out of range (n=", g.vertex_count(), ")");
        require(seen.insert(v).second, what, ": duplicate vertex ", v);
    }
}

// External neighborhood: vertices outside `vs` adjacent to at least one
// member of `vs`. Sorted ascending.
inline std::vector<Vertex> neighborhood(const Graph& g, std::span<const Vertex> vs) {
    require_vertex_set(g, vs, "neighborhood");
    std::vector<bool> inside(g.vertex_count(), false);
    for (Vertex v : vs) {
        inside[v] = true;
    }
    std::set<Vertex> out;
    for (Vertex v : vs) {
        for (Vertex u : g.neighbors(v)) {
            if (!inside[u]) {
                out.insert(u);
            }
        }
    }
    return {out.begin(), out.end()};
}

// Edges with exactly one endpoint in `vs`, sorted ascending.
inline std::vector<Edge> boundary_edges(const Graph& g, std::span<const Vertex> vs) {
    require_vertex_set(g, vs, "boundary_edges");
    std::vector<bool> inside(g.vertex_count(), false);
    for (Vertex v : vs) {
        inside[v] = true;
    }
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        if (inside[e.first] != inside[e.second]) {
            out.push_back(e);
        }
    }
    return out;
}

// Connected components under an edge filter. Components are sorted by their
// smallest member and vertices within a component ascending; isolated
// vertices form singleton components.
template <typename EdgeKept>
std::vector<std::vector<Vertex>> connected_components(const Graph& g, EdgeKept&& keep) {
    std::size_t n = g.vertex_count();
    std::vector<Vertex> parent(n);
    for (Vertex v = 0; v < n; ++v) {
        parent[v] = v;
    }
    auto find = [&parent](Vertex v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const Edge& e : g.edges()) {
        if (keep(e)) {
            Vertex a = find(e.first);
            Vertex b = find(e.second);
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    std::vector<std::vector<Vertex>> by_root(n);
    for (Vertex v = 0; v < n; ++v) {
        by_root[find(v)].push_back(v);
    }
    std::vector<std::vector<Vertex>> components;
    for (auto& c : by_root) {
        if (!c.empty()) {
            components.push_back(std::move(c));
        }
    }
    return components;
}

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    return connected_components(g, [](const Edge&) { return true; });
}

// Induced subgraph on `vs`, relabeled to 0..|vs|-1 in the order given.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
    require_vertex_set(g, vs, "induced_subgraph");
    std::vector<std::int64_t> position(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        position[vs[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        std::int64_t a = position[e.first];
        std::int64_t b = position[e.second];
        if (a >= 0 && b >= 0) {
            edges.push_back(make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
        }
    }
    return Graph(vs.size(), std::move(edges));
}

// ---------------------------------------------------------------------------
// Heavy-hex lattices
// ---------------------------------------------------------------------------

// Heavy-hex lattice in the layout used by superconducting devices: rows of
// line qubits joined by degree-2 bridge qubits, every bounded face a
// 12-cycle. `distance` must be odd and >= 3; distance 7 reproduces the
// published 127-qubit coupling map, vertex numbering included.
inline Graph build_heavy_hex(std::size_t distance) {
    require(distance >= 3 && distance % 2 == 1,
            "heavy-hex distance must be odd and >= 3, got ", distance);
    std::size_t m = (distance - 1) / 2;
    std::size_t cols = 4 * m + 3;
    std::size_t rows = 2 * m + 1;

    // Row r occupies columns [first_col(r), last_col(r)]; the top row drops
    // its last column and the bottom row its first.
    auto first_col = [&](std::size_t r) { return r + 1 == rows ? std::size_t{1} : std::size_t{0}; };
    auto last_col = [&](std::size_t r) { return r == 0 ? cols - 2 : cols - 1; };

    std::vector<std::vector<Vertex>> row_ids(rows);
    std::vector<std::vector<std::pair<std::size_t, Vertex>>> bridge_ids(rows - 1);
    Vertex next = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = first_col(r); c <= last_col(r); ++c) {
            row_ids[r].push_back(next++);
        }
        if (r + 1 < rows) {
            std::size_t offset = (r % 2 == 0) ? 0 : 2;
            for (std::size_t c = offset; c < cols; c += 4) {
                bridge_ids[r].push_back({c, next++});
            }
        }
    }

    auto row_vertex = [&](std::size_t r, std::size_t c) {
        return row_ids[r][c - first_col(r)];
    };

    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = first_col(r); c < last_col(r); ++c) {
            edges.push_back(make_edge(row_vertex(r, c), row_vertex(r, c + 1)));
        }
    }
    for (std::size_t r = 0; r + 1 < rows; ++r) {
        for (const auto& [c, id] : bridge_ids[r]) {
            edges.push_back(make_edge(row_vertex(r, c), id));
            edges.push_back(make_edge(id, row_vertex(r + 1, c)));
        }
    }

    Graph g(next, std::move(edges));
    g.name = detail::cat("heavy-hex-", next);
    return g;
}

}  // namespace gsbench
