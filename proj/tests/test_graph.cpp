// Copyright 2026 The gsbench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "gsbench/graph.hpp"
#include "gsbench/pauli.hpp"
#include "gsbench/subgraph.hpp"

namespace {

using gsbench::Edge;
using gsbench::Graph;
using gsbench::PauliAxis;
using gsbench::PauliString;
using gsbench::SubgraphKind;
using gsbench::SubgraphRef;
using gsbench::Vertex;

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) {
        edges.push_back({v, static_cast<Vertex>(v + 1)});
    }
    return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.push_back(gsbench::make_edge(v, static_cast<Vertex>((v + 1) % n)));
    }
    return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            edges.push_back({a, b});
        }
    }
    return Graph(n, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
    std::vector<Edge> edges;
    auto id = [cols](std::size_t r, std::size_t c) {
        return static_cast<Vertex>(r * cols + c);
    };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                edges.push_back({id(r, c), id(r, c + 1)});
            }
            if (r + 1 < rows) {
                edges.push_back({id(r, c), id(r + 1, c)});
            }
        }
    }
    return Graph(rows * cols, edges);
}

// Independent induced-path oracle: checks every vertex subset of size n and
// reconstructs the canonical path sequence by walking from the smaller
// endpoint. Exponential, usable only on small graphs.
std::vector<std::vector<Vertex>> brute_force_paths(const Graph& g, std::size_t n) {
    std::size_t total = g.vertex_count();
    std::vector<std::vector<Vertex>> found;
    std::vector<Vertex> subset;
    auto consider = [&]() {
        std::vector<std::size_t> degree(subset.size(), 0);
        std::size_t edges = 0;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            for (std::size_t j = i + 1; j < subset.size(); ++j) {
                if (g.has_edge(subset[i], subset[j])) {
                    ++edges;
                    ++degree[i];
                    ++degree[j];
                }
            }
        }
        if (edges != subset.size() - 1) {
            return;
        }
        std::vector<Vertex> endpoints;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            if (degree[i] > 2) {
                return;
            }
            if (degree[i] == 1) {
                endpoints.push_back(subset[i]);
            }
        }
        if (endpoints.size() != 2) {
            return;
        }
        // Walk from the smaller endpoint; success iff all vertices covered
        // (connectivity check built in).
        Vertex current = std::min(endpoints[0], endpoints[1]);
        std::vector<Vertex> sequence{current};
        std::set<Vertex> in_subset(subset.begin(), subset.end());
        std::set<Vertex> used{current};
        while (sequence.size() < subset.size()) {
            bool advanced = false;
            for (Vertex next : g.neighbors(current)) {
                if (in_subset.count(next) && !used.count(next)) {
                    sequence.push_back(next);
                    used.insert(next);
                    current = next;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                return;  // disconnected subset
            }
        }
        found.push_back(std::move(sequence));
    };
    auto recurse = [&](auto&& self, Vertex next) -> void {
        if (subset.size() == n) {
            consider();
            return;
        }
        for (Vertex v = next; v < total; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    recurse(recurse, 0);
    std::sort(found.begin(), found.end());
    return found;
}

// Independent unit-cell oracle: a subset of 12 vertices whose induced
// subgraph is connected and 2-regular is a chordless 12-cycle.
std::vector<std::vector<Vertex>> brute_force_unit_cells(const Graph& g) {
    std::size_t total = g.vertex_count();
    std::vector<std::vector<Vertex>> found;
    std::vector<Vertex> subset;
    auto consider = [&]() {
        std::size_t edges = 0;
        std::vector<std::size_t> degree(12, 0);
        for (std::size_t i = 0; i < 12; ++i) {
            for (std::size_t j = i + 1; j < 12; ++j) {
                if (g.has_edge(subset[i], subset[j])) {
                    ++edges;
                    ++degree[i];
                    ++degree[j];
                }
            }
        }
        if (edges != 12 || !std::all_of(degree.begin(), degree.end(),
                                        [](std::size_t d) { return d == 2; })) {
            return;
        }
        // 2-regular with 12 edges on 12 vertices: either one 12-cycle or
        // several smaller cycles; connectivity distinguishes them.
        Graph induced = gsbench::induced_subgraph(g, subset);
        if (gsbench::connected_components(induced).size() != 1) {
            return;
        }
        found.push_back(subset);
    };
    auto recurse = [&](auto&& self, Vertex next) -> void {
        if (subset.size() == 12) {
            consider();
            return;
        }
        if (12 - subset.size() > total - next) {
            return;
        }
        for (Vertex v = next; v < total; ++v) {
            subset.push_back(v);
            self(self, v + 1);
            subset.pop_back();
        }
    };
    recurse(recurse, 0);
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<std::vector<Vertex>> sorted_vertex_sets(const std::vector<SubgraphRef>& refs) {
    std::vector<std::vector<Vertex>> sets;
    for (const SubgraphRef& r : refs) {
        std::vector<Vertex> s = r.vertices;
        std::sort(s.begin(), s.end());
        sets.push_back(std::move(s));
    }
    std::sort(sets.begin(), sets.end());
    return sets;
}

}  // namespace

TEST_CASE("graph construction validates its input") {
    CHECK_THROWS_WITH(Graph(3, {{1, 1}}), Catch::Matchers::ContainsSubstring("self-loop"));
    CHECK_THROWS_WITH(Graph(3, {{0, 3}}), Catch::Matchers::ContainsSubstring("out of range"));
    CHECK_THROWS_WITH(Graph(3, {{0, 1}, {1, 0}}),
                      Catch::Matchers::ContainsSubstring("duplicate"));
    CHECK_NOTHROW(Graph(0, {}));
    CHECK_NOTHROW(Graph(5, {}));
}

TEST_CASE("adjacency structure is sorted and symmetric") {
    Graph g(5, {{3, 1}, {1, 0}, {4, 1}, {2, 4}});
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(g.neighbors(1) == std::vector<Vertex>{0, 3, 4});
    CHECK(g.degree(1) == 3);
    CHECK(g.max_degree() == 3);
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(3, 1));
    CHECK_FALSE(g.has_edge(0, 4));
    for (Vertex v = 0; v < 5; ++v) {
        const std::uint64_t* row = g.adjacency_row(v);
        for (Vertex u = 0; u < 5; ++u) {
            CHECK(gsbench::get_bit(row, u) == g.has_edge(v, u));
        }
    }
    // Edges are normalized and sorted.
    std::vector<Edge> expected{{0, 1}, {1, 3}, {1, 4}, {2, 4}};
    CHECK(g.edges() == expected);
}

TEST_CASE("two_color produces proper colorings") {
    SECTION("path gives an alternating 2-coloring") {
        Graph g = path_graph(6);
        auto coloring = gsbench::two_color(g);
        REQUIRE(coloring.k == 2);
        CHECK(coloring.bipartite());
        CHECK(coloring.proper_for(g));
        CHECK(coloring.colors == std::vector<std::uint32_t>{0, 1, 0, 1, 0, 1});
        CHECK(coloring.class_vertices(0) == std::vector<Vertex>{0, 2, 4});
        CHECK(coloring.class_vertices(1) == std::vector<Vertex>{1, 3, 5});
    }
    SECTION("even cycle is bipartite") {
        auto coloring = gsbench::two_color(cycle_graph(12));
        CHECK(coloring.k == 2);
        CHECK(coloring.proper_for(cycle_graph(12)));
    }
    SECTION("odd cycle falls back to three colors") {
        Graph g = cycle_graph(5);
        auto coloring = gsbench::two_color(g);
        CHECK(coloring.k == 3);
        CHECK_FALSE(coloring.bipartite());
        CHECK(coloring.proper_for(g));
    }
    SECTION("complete graph needs n colors") {
        Graph g = complete_graph(4);
        auto coloring = gsbench::two_color(g);
        CHECK(coloring.k == 4);
        CHECK(coloring.proper_for(g));
    }
    SECTION("disconnected graphs are colored componentwise") {
        Graph g(4, {{0, 1}, {2, 3}});
        auto coloring = gsbench::two_color(g);
        CHECK(coloring.k == 2);
        CHECK(coloring.proper_for(g));
    }
}

TEST_CASE("neighborhood and boundary_edges") {
    Graph g = path_graph(5);
    CHECK(gsbench::neighborhood(g, std::vector<Vertex>{2}) == std::vector<Vertex>{1, 3});
    CHECK(gsbench::neighborhood(g, std::vector<Vertex>{0, 1}) == std::vector<Vertex>{2});
    CHECK(gsbench::neighborhood(g, std::vector<Vertex>{0, 1, 2, 3, 4}).empty());
    CHECK(gsbench::boundary_edges(g, std::vector<Vertex>{0, 1}) ==
          std::vector<Edge>{{1, 2}});
    CHECK(gsbench::boundary_edges(g, std::vector<Vertex>{2}) ==
          std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK(gsbench::boundary_edges(g, std::vector<Vertex>{0, 1, 2, 3, 4}).empty());
    CHECK_THROWS_WITH(gsbench::neighborhood(g, std::vector<Vertex>{0, 0}),
                      Catch::Matchers::ContainsSubstring("duplicate"));
    CHECK_THROWS_WITH(gsbench::neighborhood(g, std::vector<Vertex>{9}),
                      Catch::Matchers::ContainsSubstring("out of range"));
}

TEST_CASE("connected_components with and without an edge filter") {
    Graph g(7, {{0, 1}, {1, 2}, {3, 4}});
    auto components = gsbench::connected_components(g);
    REQUIRE(components.size() == 4);
    CHECK(components[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(components[1] == std::vector<Vertex>{3, 4});
    CHECK(components[2] == std::vector<Vertex>{5});
    CHECK(components[3] == std::vector<Vertex>{6});

    auto filtered = gsbench::connected_components(
        g, [](const Edge& e) { return e != Edge{1, 2}; });
    REQUIRE(filtered.size() == 5);
    CHECK(filtered[0] == std::vector<Vertex>{0, 1});
    CHECK(filtered[1] == std::vector<Vertex>{2});
}

TEST_CASE("induced_subgraph relabels vertices") {
    Graph g = cycle_graph(6);
    Graph sub = gsbench::induced_subgraph(g, std::vector<Vertex>{1, 2, 4});
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edges() == std::vector<Edge>{{0, 1}});  // only 1-2 survives
}

TEST_CASE("stabilizer_of builds X-center Z-neighborhood strings") {
    Graph g = path_graph(4);
    PauliString s1 = gsbench::stabilizer_of(g, 1);
    CHECK(s1.at(0) == PauliAxis::Z);
    CHECK(s1.at(1) == PauliAxis::X);
    CHECK(s1.at(2) == PauliAxis::Z);
    CHECK(s1.at(3) == PauliAxis::I);
    CHECK(s1.str() == "Z0X1Z2");
    CHECK(s1.weight() == 3);
    PauliString s0 = gsbench::stabilizer_of(g, 0);
    CHECK(s0.str() == "X0Z1");
}

TEST_CASE("neighboring graph-state stabilizers commute") {
    Graph g = gsbench::build_heavy_hex(3);
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b = a; b < g.vertex_count(); ++b) {
            CHECK(gsbench::stabilizer_of(g, a).commutes_with(gsbench::stabilizer_of(g, b)));
        }
    }
}

TEST_CASE("pauli strings expose algebraic structure") {
    PauliString p;
    p.set(3, PauliAxis::X);
    p.set(0, PauliAxis::Z);
    p.set(5, PauliAxis::Y);
    CHECK(p.str() == "Z0X3Y5");
    CHECK(p.support() == std::vector<Vertex>{0, 3, 5});
    p.set(3, PauliAxis::I);  // clearing a site removes it
    CHECK(p.str() == "Z0Y5");

    PauliString x0;
    x0.set(0, PauliAxis::X);
    PauliString z0;
    z0.set(0, PauliAxis::Z);
    CHECK_FALSE(x0.commutes_with(z0));
    PauliString xz;  // X0 Z1
    xz.set(0, PauliAxis::X);
    xz.set(1, PauliAxis::Z);
    PauliString zx;  // Z0 X1
    zx.set(0, PauliAxis::Z);
    zx.set(1, PauliAxis::X);
    CHECK(xz.commutes_with(zx));  // two anticommuting sites cancel
    PauliString y0;
    y0.set(0, PauliAxis::Y);
    CHECK_FALSE(y0.commutes_with(x0));
    CHECK(y0.commutes_with(y0));
}

TEST_CASE("reduce_pauli reindexes onto a position list") {
    Graph g = path_graph(4);
    PauliString s1 = gsbench::stabilizer_of(g, 1);
    std::vector<Vertex> positions{0, 1, 2};
    PauliString reduced = gsbench::reduce_pauli(s1, positions);
    CHECK(reduced.str() == "Z0X1Z2");

    std::vector<Vertex> wide{0, 1, 2, 3};
    CHECK(gsbench::reduce_pauli(s1, wide).str() == "Z0X1Z2");

    std::vector<Vertex> sparse{0, 2};
    PauliString z0z2;
    z0z2.set(0, PauliAxis::Z);
    z0z2.set(2, PauliAxis::Z);
    CHECK(gsbench::reduce_pauli(z0z2, sparse).str() == "Z0Z1");

    CHECK_THROWS_WITH(gsbench::reduce_pauli(s1, sparse),
                      Catch::Matchers::ContainsSubstring("missing from the position list"));
}

TEST_CASE("path enumeration matches the brute-force oracle") {
    std::vector<Graph> graphs;
    graphs.push_back(path_graph(7));
    graphs.push_back(cycle_graph(6));
    graphs.push_back(cycle_graph(7));
    graphs.push_back(complete_graph(5));
    graphs.push_back(grid_graph(3, 3));
    graphs.push_back(Graph(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}}));
    for (const Graph& g : graphs) {
        for (std::size_t n = 2; n <= std::min<std::size_t>(6, g.vertex_count()); ++n) {
            auto expected = brute_force_paths(g, n);
            auto got = gsbench::enumerate_path_subgraphs(g, n);
            std::vector<std::vector<Vertex>> sequences;
            for (const SubgraphRef& r : got) {
                CHECK(r.kind == SubgraphKind::Path);
                REQUIRE(r.vertices.size() == n);
                CHECK(r.vertices.front() < r.vertices.back());
                sequences.push_back(r.vertices);
            }
            std::vector<std::vector<Vertex>> sorted_sequences = sequences;
            std::sort(sorted_sequences.begin(), sorted_sequences.end());
            CHECK(sorted_sequences == expected);
        }
    }
}

TEST_CASE("path enumeration emits lexicographic order") {
    Graph g = grid_graph(3, 3);
    auto refs = gsbench::enumerate_path_subgraphs(g, 4);
    std::vector<std::vector<Vertex>> sequences;
    for (const SubgraphRef& r : refs) {
        sequences.push_back(r.vertices);
    }
    CHECK(std::is_sorted(sequences.begin(), sequences.end()));
    CHECK_FALSE(sequences.empty());
}

TEST_CASE("chordal shortcuts are excluded from induced paths") {
    // Triangle 0-1-2: the only induced paths are single edges.
    Graph g = complete_graph(3);
    CHECK(gsbench::enumerate_path_subgraphs(g, 3).empty());
    CHECK(gsbench::enumerate_path_subgraphs(g, 2).size() == 3);
}

TEST_CASE("unit cells are exactly the chordless 12-cycles") {
    SECTION("a bare 12-cycle is one cell") {
        auto cells = gsbench::enumerate_unit_cells(cycle_graph(12));
        REQUIRE(cells.size() == 1);
        CHECK(cells[0].kind == SubgraphKind::Cycle);
        std::vector<Vertex> sorted = cells[0].vertices;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
        CHECK(cells[0].vertices.front() == 0);
        // Reflection-canonical: second entry below last entry.
        CHECK(cells[0].vertices[1] < cells[0].vertices[11]);
    }
    SECTION("a chord kills the cell") {
        std::vector<Edge> edges;
        for (Vertex v = 0; v < 12; ++v) {
            edges.push_back(gsbench::make_edge(v, static_cast<Vertex>((v + 1) % 12)));
        }
        edges.push_back({0, 6});
        CHECK(gsbench::enumerate_unit_cells(Graph(12, edges)).empty());
    }
    SECTION("other cycle lengths do not count") {
        CHECK(gsbench::enumerate_unit_cells(cycle_graph(10)).empty());
        CHECK(gsbench::enumerate_unit_cells(cycle_graph(14)).empty());
    }
    SECTION("matches brute force on heavy-hex distance 3") {
        Graph g = gsbench::build_heavy_hex(3);
        auto got = sorted_vertex_sets(gsbench::enumerate_unit_cells(g));
        CHECK(got == brute_force_unit_cells(g));
        CHECK(got.size() == 2);
    }
}

TEST_CASE("heavy-hex construction") {
    SECTION("distance must be positive and odd") {
        CHECK_THROWS(gsbench::build_heavy_hex(0));
        CHECK_THROWS(gsbench::build_heavy_hex(4));
        CHECK_NOTHROW(gsbench::build_heavy_hex(1));
    }
    SECTION("distance 3 layout") {
        Graph g = gsbench::build_heavy_hex(3);
        CHECK(g.vertex_count() == 23);
        CHECK(g.max_degree() == 3);
        CHECK(gsbench::two_color(g).bipartite());
        CHECK(gsbench::connected_components(g).size() == 1);
    }
    SECTION("distance 7 reproduces the 127-qubit device map") {
        Graph g = gsbench::build_heavy_hex(7);
        CHECK(g.vertex_count() == 127);
        CHECK(g.edge_count() == 144);
        CHECK(g.max_degree() == 3);
        CHECK(g.name == "heavy-hex-127");
        CHECK(gsbench::two_color(g).bipartite());
        CHECK(gsbench::connected_components(g).size() == 1);
        CHECK(gsbench::enumerate_unit_cells(g).size() == 18);
        // Spot checks against the published coupling map: the first row runs
        // 0..13, the first bridge qubit 14 hangs below 0 and reaches 18.
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(0, 14));
        CHECK(g.has_edge(14, 18));
        CHECK_FALSE(g.has_edge(13, 14));
        CHECK(g.degree(0) == 2);
    }
    SECTION("unit cell count grows quadratically") {
        CHECK(gsbench::enumerate_unit_cells(gsbench::build_heavy_hex(5)).size() == 8);
    }
}
