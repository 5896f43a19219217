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

#include <cstdint>
#include <span>
#include <vector>

#include "gsbench/graph.hpp"

namespace gsbench {

enum class SubgraphKind : std::uint8_t { Path, Cycle, VertexSet };

// Ordered list of vertices naming a subgraph of a host graph. For paths the
// order is the traversal order with the canonical orientation (first id <
// last id); for cycles the first vertex is the smallest and the second is
// the smaller of its two cycle neighbors.
struct SubgraphRef {
    SubgraphKind kind = SubgraphKind::VertexSet;
    std::vector<Vertex> vertices;

    bool operator==(const SubgraphRef& other) const {
        return kind == other.kind && vertices == other.vertices;
    }
};

namespace detail {

// Depth-first enumeration of the induced (chordless) paths starting at one
// vertex. Paths are grown in ascending-neighbor order, so the visit order is
// lexicographic in the vertex sequence; the visitor is invoked for every
// directed induced path with 2..max_len vertices. Callers wanting one path
// per undirected subgraph keep only sequences with front < back.
template <typename Visitor>
void visit_induced_paths_from(const Graph& g, Vertex start, std::size_t max_len, Visitor&& visit) {
    std::size_t n = g.vertex_count();
    if (n == 0 || max_len < 2) {
        return;
    }
    std::size_t words = words_for_bits(n);
    std::vector<std::uint64_t> in_path(words, 0);
    // Vertices adjacent to any path vertex except the current endpoint;
    // extending onto one of these would create a chord.
    std::vector<std::uint64_t> blocked_stack((max_len + 1) * words, 0);
    std::vector<Vertex> path;
    path.reserve(max_len);

    struct Frame {
        Vertex vertex;
        std::size_t next_neighbor;
    };
    std::vector<Frame> stack;
    stack.reserve(max_len);

    path.assign(1, start);
    set_bit(in_path.data(), start, true);
    stack.assign(1, Frame{start, 0});
    while (!stack.empty()) {
        Frame& top = stack.back();
        const auto& nbrs = g.neighbors(top.vertex);
        bool extended = false;
        if (path.size() < max_len) {
            while (top.next_neighbor < nbrs.size()) {
                Vertex u = nbrs[top.next_neighbor++];
                if (get_bit(in_path.data(), u)) {
                    continue;
                }
                const std::uint64_t* blocked = blocked_stack.data() + (stack.size() - 1) * words;
                if (get_bit(blocked, u)) {
                    continue;  // chord back into the path interior
                }
                // Push u: new blocked set = old | neighbors(endpoint).
                std::uint64_t* next_blocked = blocked_stack.data() + stack.size() * words;
                const std::uint64_t* end_row = g.adjacency_row(top.vertex);
                for (std::size_t w = 0; w < words; ++w) {
                    next_blocked[w] = blocked[w] | end_row[w];
                }
                path.push_back(u);
                set_bit(in_path.data(), u, true);
                stack.push_back(Frame{u, 0});
                visit(std::span<const Vertex>(path));
                extended = true;
                break;
            }
        }
        if (!extended) {
            set_bit(in_path.data(), top.vertex, false);
            path.pop_back();
            stack.pop_back();
        }
    }
}

template <typename Visitor>
void visit_induced_paths(const Graph& g, std::size_t max_len, Visitor&& visit) {
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        visit_induced_paths_from(g, start, max_len, visit);
    }
}

}  // namespace detail

// All induced paths on exactly `n` vertices, one per undirected subgraph
// (canonical orientation first < last), in lexicographic order of the
// canonical vertex sequence.
inline std::vector<SubgraphRef> enumerate_path_subgraphs(const Graph& g, std::size_t n) {
    require(n >= 2, "enumerate_path_subgraphs: need n >= 2, got ", n);
    std::vector<SubgraphRef> out;
    detail::visit_induced_paths(g, n, [&](std::span<const Vertex> path) {
        if (path.size() == n && path.front() < path.back()) {
            out.push_back({SubgraphKind::Path, {path.begin(), path.end()}});
        }
    });
    return out;
}

// All chordless 12-cycles ("unit cells" of a heavy-hex lattice),
// deduplicated over rotation and reflection: each cycle starts at its
// smallest vertex and runs toward the smaller of that vertex's two cycle
// neighbors. Output is in lexicographic order of the canonical sequence.
inline std::vector<SubgraphRef> enumerate_unit_cells(const Graph& g) {
    constexpr std::size_t kCycleLen = 12;
    std::size_t n = g.vertex_count();
    std::vector<SubgraphRef> out;
    if (n < kCycleLen) {
        return out;
    }
    std::size_t words = words_for_bits(n);
    std::vector<std::uint64_t> in_cycle(words, 0);
    std::vector<Vertex> cycle;

    // Grow chordless paths start..v with every vertex > start; close when the
    // 12th vertex is adjacent to start and chordless against the interior.
    auto dfs = [&](auto&& self, Vertex start) -> void {
        Vertex v = cycle.back();
        for (Vertex u : g.neighbors(v)) {
            if (u <= start || get_bit(in_cycle.data(), u)) {
                continue;
            }
            bool closing = cycle.size() == kCycleLen - 1;
            bool adj_start = g.has_edge(u, start);
            if (closing != adj_start) {
                continue;  // early closure would be a chord; must close at 12
            }
            // No chord into the path interior (everything but the endpoint).
            bool chord = false;
            for (std::size_t i = 1; i + 1 < cycle.size() && !chord; ++i) {
                chord = g.has_edge(u, cycle[i]);
            }
            if (chord) {
                continue;
            }
            if (closing) {
                if (cycle[1] < u) {  // reflection canonical form
                    cycle.push_back(u);
                    out.push_back({SubgraphKind::Cycle, cycle});
                    cycle.pop_back();
                }
                continue;
            }
            cycle.push_back(u);
            set_bit(in_cycle.data(), u, true);
            self(self, start);
            set_bit(in_cycle.data(), u, false);
            cycle.pop_back();
        }
    };

    for (Vertex start = 0; start < n; ++start) {
        cycle.assign(1, start);
        set_bit(in_cycle.data(), start, true);
        dfs(dfs, start);
        set_bit(in_cycle.data(), start, false);
    }
    return out;
}

}  // namespace gsbench
