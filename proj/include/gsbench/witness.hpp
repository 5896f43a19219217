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

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gsbench/distribution.hpp"
#include "gsbench/graph.hpp"
#include "gsbench/pauli.hpp"

namespace gsbench {

enum class WitnessKind : std::uint8_t {
    GenericPartition,
    StabilizerSum,
    Coloring,
    ColoringRefined,
    Bipartite,
};

inline const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::GenericPartition: return "generic-partition";
        case WitnessKind::StabilizerSum: return "stabilizer-sum";
        case WitnessKind::Coloring: return "coloring";
        case WitnessKind::ColoringRefined: return "coloring-refined";
        case WitnessKind::Bipartite: return "bipartite";
    }
    return "?";
}

// Evaluated witness. A negative value rules out full separability across the
// partition the witness was built from; `capped_cells` counts projector
// terms that were clamped to 1 after mitigation pushed them above.
struct WitnessValue {
    double value = 0.0;
    WitnessKind kind = WitnessKind::GenericPartition;
    std::vector<Vertex> subject;
    bool qrem_applied = false;
    std::uint32_t capped_cells = 0;
};

// ---------------------------------------------------------------------------
// Projector expectations from measured outcome tables
// ---------------------------------------------------------------------------

namespace detail {

// A distribution flattened to packed bit rows + weights, the form every
// evaluation loop consumes.
struct PackedOutcomes {
    std::size_t bits = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> rows;
    std::vector<double> weights;

    static PackedOutcomes from(const Distribution& d) {
        PackedOutcomes po;
        po.bits = d.bit_length();
        po.words = words_for_bits(po.bits);
        po.rows.resize(d.size() * po.words);
        po.weights.reserve(d.size());
        std::size_t i = 0;
        for (const auto& [key, w] : d.weights()) {
            string_to_bits(key, po.rows.data() + i * po.words);
            po.weights.push_back(w);
            ++i;
        }
        return po;
    }

    const std::uint64_t* row(std::size_t i) const { return rows.data() + i * words; }
    std::size_t count() const { return weights.size(); }
};

// Parity masks of diagonalized stabilizers. In the measurement basis of the
// cell's setting every stabilizer factor acts diagonally, so its eigenvalue
// on outcome x is (-1)^(parity of x over the support).
inline std::vector<std::uint64_t> support_mask(const PauliString& p, std::size_t bits) {
    std::vector<std::uint64_t> mask(words_for_bits(bits), 0);
    for (const auto& [v, axis] : p.factors()) {
        require(v < bits, "stabilizer ", p.str(), " acts on position ", v,
                " outside a ", bits, "-bit outcome");
        set_bit(mask.data(), v, true);
    }
    return mask;
}

inline double projector_from_packed(const PackedOutcomes& po,
                                    std::span<const std::vector<std::uint64_t>> masks) {
    double acc = 0.0;
    for (std::size_t i = 0; i < po.count(); ++i) {
        const std::uint64_t* row = po.row(i);
        bool even = true;
        for (const auto& mask : masks) {
            if (parity_and(row, mask.data(), po.words)) {
                even = false;
                break;
            }
        }
        if (even) {
            acc += po.weights[i];
        }
    }
    return acc;
}

}  // namespace detail

// Expectation of the stabilizer projector over `cell` against a measured
// (or mitigated) outcome distribution: the average of
// prod_{i in cell} (1 + eps_i(x)) / 2, where eps_i(x) is the diagonal
// eigenvalue of the cell's stabilizer on outcome x. An empty cell denotes
// the identity projector.
inline double projector_expectation(const Distribution& d,
                                    std::span<const Vertex> cell,
                                    const std::map<Vertex, PauliString>& stabilizers) {
    if (cell.empty()) {
        return 1.0;
    }
    std::vector<std::vector<std::uint64_t>> masks;
    masks.reserve(cell.size());
    for (Vertex i : cell) {
        auto it = stabilizers.find(i);
        require(it != stabilizers.end(), "projector_expectation: no stabilizer for vertex ", i);
        masks.push_back(detail::support_mask(it->second, d.bit_length()));
    }
    return detail::projector_from_packed(detail::PackedOutcomes::from(d), masks);
}

// ---------------------------------------------------------------------------
// Readout-error mitigation on reduced regions
// ---------------------------------------------------------------------------

// Mitigated data for one partition cell: the distribution is marginalized to
// region = cell ∪ N(cell), readout-corrected there, and the stabilizers are
// reindexed to the region's positions.
struct QremCell {
    std::vector<Vertex> cell;
    std::vector<Vertex> region;        // sorted cell ∪ N(cell)
    Distribution mitigated;            // quasiprobabilities over |region| bits
    std::vector<Vertex> reduced_cell;  // positions of `cell` inside `region`
    std::map<Vertex, PauliString> reduced_stabilizers;
};

inline QremCell qrem_reduce_cell(const Graph& g,
                                 const Distribution& d,
                                 std::span<const Vertex> cell,
                                 const CalibrationSet& calibs,
                                 std::size_t mitigation_limit = kDefaultMitigationLimit) {
    require(!cell.empty(), "qrem_reduce_cell: empty cell");
    QremCell out;
    out.cell.assign(cell.begin(), cell.end());
    std::vector<Vertex> region(cell.begin(), cell.end());
    auto nbrs = neighborhood(g, cell);
    region.insert(region.end(), nbrs.begin(), nbrs.end());
    std::sort(region.begin(), region.end());
    require(region.size() <= mitigation_limit,
            "mitigation region of cell starting at vertex ", cell.front(), " has ",
            region.size(), " qubits, exceeding the limit of ", mitigation_limit);
    out.region = region;
    out.mitigated = mitigate(marginal(d, region), calibs.for_qubits(region), mitigation_limit);
    for (Vertex i : cell) {
        auto pos = std::lower_bound(region.begin(), region.end(), i) - region.begin();
        out.reduced_cell.push_back(static_cast<Vertex>(pos));
        out.reduced_stabilizers[static_cast<Vertex>(pos)] =
            reduce_pauli(stabilizer_of(g, i), region);
    }
    return out;
}

// Per-cell mitigation across a partition; empty cells yield nullopt and are
// handled by the witness evaluation as identity projectors.
inline std::vector<std::optional<QremCell>> qrem_reduce(
    const Graph& g,
    const VertexColoring& coloring,
    std::span<const Distribution> per_color,
    const std::vector<std::vector<Vertex>>& cells,
    const CalibrationSet& calibs,
    std::size_t mitigation_limit = kDefaultMitigationLimit) {
    std::vector<std::optional<QremCell>> out;
    out.reserve(cells.size());
    for (const auto& cell : cells) {
        if (cell.empty()) {
            out.push_back(std::nullopt);
            continue;
        }
        std::uint32_t color = coloring.colors[cell.front()];
        out.push_back(qrem_reduce_cell(g, per_color[color], cell, calibs, mitigation_limit));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Witness evaluation
// ---------------------------------------------------------------------------

namespace detail {

inline void check_cells(const Graph& g,
                        const VertexColoring& coloring,
                        std::span<const Distribution> per_color,
                        const std::vector<std::vector<Vertex>>& cells) {
    require(coloring.proper_for(g), "witness evaluation needs a proper coloring of the graph");
    require(per_color.size() == coloring.k,
            "got ", per_color.size(), " distributions for ", coloring.k, " measurement settings");
    for (const Distribution& d : per_color) {
        require(d.bit_length() == g.vertex_count(),
                "distribution bit length ", d.bit_length(), " does not match graph size ",
                g.vertex_count());
    }
    std::vector<bool> used(g.vertex_count(), false);
    for (const auto& cell : cells) {
        for (Vertex v : cell) {
            require(v < g.vertex_count(), "cell vertex ", v, " out of range");
            require(!used[v], "vertex ", v, " appears in more than one cell");
            used[v] = true;
            require(coloring.colors[v] == coloring.colors[cell.front()],
                    "cell containing vertex ", cell.front(), " mixes colors (vertex ", v,
                    " differs); cells must be monochromatic");
        }
    }
}

}  // namespace detail

// Evaluates the partition witness (k - 1/2) I - sum_l P(U_l): one projector
// term per cell, measured in the cell's color setting, each term clamped to
// at most 1 (quasiprobabilities can push it above). Empty cells contribute
// their identity-projector expectation of 1.
inline WitnessValue evaluate_witness(const Graph& g,
                                     const VertexColoring& coloring,
                                     std::span<const Distribution> per_color,
                                     const std::vector<std::vector<Vertex>>& cells,
                                     const CalibrationSet* calibs = nullptr,
                                     bool qrem = false,
                                     std::size_t mitigation_limit = kDefaultMitigationLimit) {
    detail::check_cells(g, coloring, per_color, cells);
    require(!qrem || calibs != nullptr, "qrem requested without calibration data");

    WitnessValue result;
    result.kind = WitnessKind::GenericPartition;
    result.qrem_applied = qrem;
    double value = static_cast<double>(cells.size()) - 0.5;
    for (const auto& cell : cells) {
        double p;
        if (cell.empty()) {
            p = 1.0;
        } else if (qrem) {
            std::uint32_t color = coloring.colors[cell.front()];
            QremCell qc = qrem_reduce_cell(g, per_color[color], cell, *calibs, mitigation_limit);
            p = projector_expectation(qc.mitigated, qc.reduced_cell, qc.reduced_stabilizers);
        } else {
            std::uint32_t color = coloring.colors[cell.front()];
            std::map<Vertex, PauliString> stabs;
            for (Vertex i : cell) {
                stabs[i] = stabilizer_of(g, i);
            }
            p = projector_expectation(per_color[color], cell, stabs);
        }
        if (p > 1.0) {
            p = 1.0;
            ++result.capped_cells;
        }
        value -= p;
        result.subject.insert(result.subject.end(), cell.begin(), cell.end());
    }
    std::sort(result.subject.begin(), result.subject.end());
    result.value = value;
    return result;
}

// Per-vertex stabilizer expectations <S_i> = 2 min(<P_i>, 1) - 1, evaluated
// in each vertex's own setting, optionally with readout mitigation on the
// region {i} ∪ N(i).
inline std::vector<double> stabilizer_expectations(
    const Graph& g,
    const VertexColoring& coloring,
    std::span<const Distribution> per_color,
    const CalibrationSet* calibs = nullptr,
    bool qrem = false,
    std::size_t mitigation_limit = kDefaultMitigationLimit) {
    detail::check_cells(g, coloring, per_color, {});
    require(!qrem || calibs != nullptr, "qrem requested without calibration data");
    std::size_t n = g.vertex_count();
    std::vector<double> out(n, 0.0);
    if (qrem) {
        for (Vertex v = 0; v < n; ++v) {
            std::vector<Vertex> cell{v};
            QremCell qc = qrem_reduce_cell(g, per_color[coloring.colors[v]], cell, *calibs,
                                           mitigation_limit);
            double p = projector_expectation(qc.mitigated, qc.reduced_cell, qc.reduced_stabilizers);
            out[v] = 2.0 * std::min(p, 1.0) - 1.0;
        }
        return out;
    }
    std::vector<detail::PackedOutcomes> packed;
    packed.reserve(per_color.size());
    for (const Distribution& d : per_color) {
        packed.push_back(detail::PackedOutcomes::from(d));
    }
    for (Vertex v = 0; v < n; ++v) {
        std::vector<std::vector<std::uint64_t>> masks{
            detail::support_mask(stabilizer_of(g, v), n)};
        double p = detail::projector_from_packed(packed[coloring.colors[v]], masks);
        out[v] = 2.0 * std::min(p, 1.0) - 1.0;
    }
    return out;
}

// Stabilizer sum witness (n' - 1) I - sum of the subgraph's stabilizers.
// Negative values certify genuine multipartite entanglement across the
// subgraph's vertices.
inline WitnessValue stabilizer_sum_witness(std::span<const Vertex> subgraph,
                                           std::span<const double> stab_exps,
                                           bool qrem_applied = false) {
    require(!subgraph.empty(), "stabilizer_sum_witness: empty subgraph");
    double value = static_cast<double>(subgraph.size()) - 1.0;
    for (Vertex v : subgraph) {
        require(v < stab_exps.size(), "stabilizer_sum_witness: no expectation for vertex ", v);
        value -= stab_exps[v];
    }
    WitnessValue out;
    out.value = value;
    out.kind = WitnessKind::StabilizerSum;
    out.subject.assign(subgraph.begin(), subgraph.end());
    out.qrem_applied = qrem_applied;
    return out;
}

// Coloring-based witness (3/2) I - P(V'∩ class 0) - P(V'∩ class 1) for a
// subgraph of a 2-colored graph. Exactly two cells, kept even when empty.
inline WitnessValue coloring_witness(const Graph& g,
                                     const VertexColoring& coloring,
                                     std::span<const Distribution> per_color,
                                     std::span<const Vertex> subject,
                                     const CalibrationSet* calibs = nullptr,
                                     bool qrem = false,
                                     std::size_t mitigation_limit = kDefaultMitigationLimit) {
    require(coloring.bipartite(), "coloring witness needs a 2-coloring, got k=", coloring.k);
    require_vertex_set(g, subject, "coloring_witness");
    require(!subject.empty(), "coloring_witness: empty subject");
    std::vector<std::vector<Vertex>> cells(2);
    for (Vertex v : subject) {
        cells[coloring.colors[v]].push_back(v);
    }
    WitnessValue out = evaluate_witness(g, coloring, per_color, cells, calibs, qrem, mitigation_limit);
    out.kind = WitnessKind::Coloring;
    out.subject.assign(subject.begin(), subject.end());
    std::sort(out.subject.begin(), out.subject.end());
    return out;
}

// Consecutive groups of (at most) five path vertices, each split into its
// color classes: the cells of the refined coloring witness.
inline std::vector<std::vector<Vertex>> refined_path_cells(std::span<const Vertex> path,
                                                           const VertexColoring& coloring) {
    std::vector<std::vector<Vertex>> cells;
    for (std::size_t start = 0; start < path.size(); start += 5) {
        std::size_t len = std::min<std::size_t>(5, path.size() - start);
        std::map<std::uint32_t, std::vector<Vertex>> by_color;
        for (std::size_t i = start; i < start + len; ++i) {
            by_color[coloring.colors[path[i]]].push_back(path[i]);
        }
        for (auto& [color, cell] : by_color) {
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

// Refined coloring witness for a path subgraph: groups of five consecutive
// path vertices, split by color. Both path orientations are evaluated and
// the smaller witness value is returned.
inline WitnessValue refined_cbw_path(const Graph& g,
                                     const VertexColoring& coloring,
                                     std::span<const Distribution> per_color,
                                     std::span<const Vertex> path,
                                     const CalibrationSet* calibs = nullptr,
                                     bool qrem = false,
                                     std::size_t mitigation_limit = kDefaultMitigationLimit) {
    require(!path.empty(), "refined_cbw_path: empty path");
    require_vertex_set(g, path, "refined_cbw_path");
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        require(g.has_edge(path[i], path[i + 1]),
                "refined_cbw_path: consecutive vertices ", path[i], " and ", path[i + 1],
                " are not adjacent");
    }
    std::vector<Vertex> reversed(path.rbegin(), path.rend());
    WitnessValue forward = evaluate_witness(g, coloring, per_color, refined_path_cells(path, coloring),
                                            calibs, qrem, mitigation_limit);
    WitnessValue backward = evaluate_witness(g, coloring, per_color,
                                             refined_path_cells(reversed, coloring), calibs, qrem,
                                             mitigation_limit);
    WitnessValue out = backward.value < forward.value ? backward : forward;
    out.kind = WitnessKind::ColoringRefined;
    out.subject.assign(path.begin(), path.end());
    if (out.subject.front() > out.subject.back()) {
        std::reverse(out.subject.begin(), out.subject.end());
    }
    return out;
}

// Two-vertex witness I - S_i - S_j for an edge (i, j). Negative values rule
// out separability across every bipartition separating i from j.
inline WitnessValue bipartite_witness(const Graph& g,
                                      Edge edge,
                                      std::span<const double> stab_exps,
                                      bool qrem_applied = false) {
    require(g.has_edge(edge.first, edge.second),
            "bipartite_witness: (", edge.first, ", ", edge.second, ") is not an edge");
    require(edge.first < stab_exps.size() && edge.second < stab_exps.size(),
            "bipartite_witness: expectations missing for edge endpoints");
    WitnessValue out;
    out.value = 1.0 - stab_exps[edge.first] - stab_exps[edge.second];
    out.kind = WitnessKind::Bipartite;
    out.subject = {std::min(edge.first, edge.second), std::max(edge.first, edge.second)};
    out.qrem_applied = qrem_applied;
    return out;
}

// ---------------------------------------------------------------------------
// White-noise tolerances
// ---------------------------------------------------------------------------

// Largest white-noise fraction at which the partition witness with the
// given cell sizes still detects: p_tol = 1 / (2 (k - sum_l 2^-n_l)).
inline double white_noise_tolerance(std::span<const std::size_t> cell_sizes) {
    require(!cell_sizes.empty(), "white_noise_tolerance: empty cell list");
    double denom = static_cast<double>(cell_sizes.size());
    for (std::size_t s : cell_sizes) {
        require(s >= 1, "white_noise_tolerance: cells must be nonempty");
        denom -= std::ldexp(1.0, -static_cast<int>(s));
    }
    return 0.5 / denom;
}

// Scaling factor c(n) = n * p_tol(n) of the refined path witness on an
// n-vertex path: groups of five, each split by the alternating 2-coloring.
// Converges to 20/13 at multiples of five and never drops below 1.
inline double c_factor(std::size_t n) {
    require(n >= 1, "c_factor: need n >= 1");
    std::vector<std::size_t> sizes;
    for (std::size_t start = 0; start < n; start += 5) {
        std::size_t len = std::min<std::size_t>(5, n - start);
        std::size_t odd = len / 2;
        std::size_t even = len - odd;
        sizes.push_back(even);
        if (odd > 0) {
            sizes.push_back(odd);
        }
    }
    return static_cast<double>(n) * white_noise_tolerance(sizes);
}

}  // namespace gsbench
