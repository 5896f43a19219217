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

#include <optional>
#include <span>
#include <vector>

#include "gsbench/dense.hpp"
#include "gsbench/distribution.hpp"
#include "gsbench/graph.hpp"

namespace gsbench {

// One measurement setting per color class: X basis on the class, Z basis
// everywhere else. The X set is an independent set by properness of the
// coloring.
struct MeasurementSetting {
    std::uint32_t setting = 0;
    std::vector<Vertex> x_set;
    std::vector<Vertex> z_set;

    static MeasurementSetting of(const Graph& g, const VertexColoring& coloring, std::uint32_t color) {
        require(coloring.proper_for(g), "measurement settings need a proper coloring");
        require(color < coloring.k, "setting index ", color, " out of range (k=", coloring.k, ")");
        MeasurementSetting s;
        s.setting = color;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            (coloring.colors[v] == color ? s.x_set : s.z_set).push_back(v);
        }
        return s;
    }
};

inline std::vector<MeasurementSetting> make_settings(const Graph& g, const VertexColoring& coloring) {
    std::vector<MeasurementSetting> out;
    out.reserve(coloring.k);
    for (std::uint32_t c = 0; c < coloring.k; ++c) {
        out.push_back(MeasurementSetting::of(g, coloring, c));
    }
    return out;
}

// Error model applied to a sampled run. White noise replaces a shot's state
// by the maximally mixed state; CZ depolarizing noise injects a uniformly
// random non-identity two-qubit Pauli after each entangling gate; readout
// noise flips each measured bit b with probability P(1-b | b).
struct NoiseConfig {
    double white_noise_p = 0.0;
    double cz_depolarizing_p = 0.0;
    std::optional<CalibrationSet> readout;

    void validate(const Graph& g) const {
        require(white_noise_p >= 0.0 && white_noise_p <= 1.0,
                "white_noise_p=", white_noise_p, " outside [0,1]");
        require(cz_depolarizing_p >= 0.0 && cz_depolarizing_p <= 1.0,
                "cz_depolarizing_p=", cz_depolarizing_p, " outside [0,1]");
        if (readout) {
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                require(readout->has(v), "readout noise enabled but qubit ", v, " has no calibration");
            }
        }
    }
};

// ---------------------------------------------------------------------------
// Entangling-gate schedule
// ---------------------------------------------------------------------------

// Groups the edges into layers of disjoint CZ gates (a proper edge
// coloring). Bipartite graphs get exactly max-degree layers via
// alternating-path recoloring; other graphs fall back to a greedy coloring.
// Heavy-hex lattices therefore compile to three layers.
inline std::vector<std::vector<Edge>> compile_layers(const Graph& g) {
    const auto& edges = g.edges();
    if (edges.empty()) {
        return {};
    }
    std::size_t delta = g.max_degree();
    std::vector<int> edge_color(edges.size(), -1);

    if (two_color(g).bipartite()) {
        // vertex_slot[v * delta + c] = index of the c-colored edge at v.
        std::vector<int> vertex_slot(g.vertex_count() * delta, -1);
        auto slot = [&](Vertex v, std::size_t c) -> int& {
            return vertex_slot[static_cast<std::size_t>(v) * delta + c];
        };
        auto free_color = [&](Vertex v) {
            std::size_t c = 0;
            while (slot(v, c) >= 0) {
                ++c;
            }
            return c;
        };
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            std::size_t alpha = free_color(u);
            std::size_t beta = free_color(v);
            if (alpha != beta) {
                // Swap colors along the alpha/beta alternating path from v;
                // bipartiteness keeps the path away from u, freeing alpha at v.
                std::vector<int> path;
                Vertex cur = v;
                std::size_t want = alpha;
                while (slot(cur, want) >= 0) {
                    int pe = slot(cur, want);
                    path.push_back(pe);
                    cur = edges[pe].first == cur ? edges[pe].second : edges[pe].first;
                    want = want == alpha ? beta : alpha;
                    require(path.size() <= edges.size(), "edge coloring invariant broken");
                }
                for (int pe : path) {
                    slot(edges[pe].first, edge_color[pe]) = -1;
                    slot(edges[pe].second, edge_color[pe]) = -1;
                }
                for (int pe : path) {
                    int flipped = edge_color[pe] == static_cast<int>(alpha)
                                      ? static_cast<int>(beta)
                                      : static_cast<int>(alpha);
                    edge_color[pe] = flipped;
                    slot(edges[pe].first, flipped) = pe;
                    slot(edges[pe].second, flipped) = pe;
                }
            }
            edge_color[e] = static_cast<int>(alpha);
            slot(u, alpha) = static_cast<int>(e);
            slot(v, alpha) = static_cast<int>(e);
        }
    } else {
        // Greedy: smallest color unused at either endpoint.
        std::vector<std::vector<int>> at(g.vertex_count());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            int c = 0;
            auto used = [&](int color) {
                for (int ec : at[u]) {
                    if (edge_color[ec] == color) {
                        return true;
                    }
                }
                for (int ec : at[v]) {
                    if (edge_color[ec] == color) {
                        return true;
                    }
                }
                return false;
            };
            while (used(c)) {
                ++c;
            }
            edge_color[e] = c;
            at[u].push_back(static_cast<int>(e));
            at[v].push_back(static_cast<int>(e));
        }
    }

    int layers = 0;
    for (int c : edge_color) {
        layers = std::max(layers, c + 1);
    }
    std::vector<std::vector<Edge>> out(layers);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        out[edge_color[e]].push_back(edges[e]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

namespace detail {

// Ideal outcomes in a setting are uniform over the solutions of the parity
// constraints x_i = XOR of x over N(i) for every X-measured vertex i: draw
// the Z-measured bits uniformly and fill in the X-measured bits. Gate and
// readout faults are layered on top as bit flips (Pauli frame).
struct SettingSampler {
    std::size_t n = 0;
    std::size_t words = 0;
    std::vector<Vertex> x_vertices;
    std::vector<std::uint64_t> neighbor_masks;  // one row per X vertex
    std::vector<std::uint64_t> zset_mask;
    std::vector<std::uint64_t> xset_mask;
    std::vector<std::vector<Edge>> layers;  // populated when gate noise is on
    std::vector<double> flip0;              // P(read 1 | bit 0), per qubit
    std::vector<double> flip1;              // P(read 0 | bit 1), per qubit
    double white_p = 0.0;
    double cz_p = 0.0;
    bool readout = false;

    SettingSampler(const Graph& g, const MeasurementSetting& setting, const NoiseConfig& noise)
        : n(g.vertex_count()), words(words_for_bits(n)) {
        noise.validate(g);
        white_p = noise.white_noise_p;
        cz_p = noise.cz_depolarizing_p;
        zset_mask.assign(words, 0);
        xset_mask.assign(words, 0);
        for (Vertex v : setting.z_set) {
            set_bit(zset_mask.data(), v, true);
        }
        for (Vertex v : setting.x_set) {
            set_bit(xset_mask.data(), v, true);
        }
        x_vertices = setting.x_set;
        neighbor_masks.assign(x_vertices.size() * words, 0);
        for (std::size_t i = 0; i < x_vertices.size(); ++i) {
            for (Vertex u : g.neighbors(x_vertices[i])) {
                require(get_bit(zset_mask.data(), u),
                        "setting ", setting.setting, ": X-measured vertices ", x_vertices[i],
                        " and ", u, " are adjacent; the X set must be an independent set");
                set_bit(neighbor_masks.data() + i * words, u, true);
            }
        }
        if (cz_p > 0.0) {
            layers = compile_layers(g);
        }
        if (noise.readout) {
            readout = true;
            flip0.resize(n);
            flip1.resize(n);
            for (Vertex v = 0; v < n; ++v) {
                flip0[v] = noise.readout->at(v).p10;
                flip1[v] = noise.readout->at(v).p01;
            }
        }
    }

    // One shot into `out` (`words` many words). `fx`/`fz` are scratch rows.
    void sample_shot(StreamRng& rng, std::uint64_t* out, std::uint64_t* fx, std::uint64_t* fz) const {
        if (rng.bernoulli(white_p)) {
            rng.fill_bits(out, n);
        } else {
            rng.fill_bits(out, n);
            for (std::size_t w = 0; w < words; ++w) {
                out[w] &= zset_mask[w];
            }
            for (std::size_t i = 0; i < x_vertices.size(); ++i) {
                if (parity_and(out, neighbor_masks.data() + i * words, words)) {
                    set_bit(out, x_vertices[i], true);
                }
            }
            if (cz_p > 0.0) {
                for (std::size_t w = 0; w < words; ++w) {
                    fx[w] = 0;
                    fz[w] = 0;
                }
                bool active = false;
                for (const auto& layer : layers) {
                    for (const auto& [a, b] : layer) {
                        if (active) {
                            // CZ conjugation: an X on one leg grows a Z on the other.
                            if (get_bit(fx, b)) {
                                flip_bit(fz, a);
                            }
                            if (get_bit(fx, a)) {
                                flip_bit(fz, b);
                            }
                        }
                        if (rng.bernoulli(cz_p)) {
                            // Uniform over the 15 non-identity two-qubit Paulis.
                            std::uint64_t fault = 1 + rng.next_below(15);
                            auto inject = [&](Vertex q, std::uint64_t pauli) {
                                if (pauli == 1 || pauli == 2) {
                                    flip_bit(fx, q);
                                }
                                if (pauli == 2 || pauli == 3) {
                                    flip_bit(fz, q);
                                }
                            };
                            inject(a, fault >> 2);
                            inject(b, fault & 3);
                            active = true;
                        }
                    }
                }
                if (active) {
                    // Final Hadamards on the X set exchange the frame's X and
                    // Z parts there; only the X part then flips outcomes.
                    for (std::size_t w = 0; w < words; ++w) {
                        std::uint64_t t = (fx[w] ^ fz[w]) & xset_mask[w];
                        fx[w] ^= t;
                        out[w] ^= fx[w];
                    }
                }
            }
        }
        if (readout) {
            for (Vertex q = 0; q < n; ++q) {
                bool bit = get_bit(out, q);
                if (rng.bernoulli(bit ? flip1[q] : flip0[q])) {
                    flip_bit(out, q);
                }
            }
        }
    }
};

inline constexpr std::uint64_t kSampleStreamLabel = 0x5a3d1;

}  // namespace detail

// Samples `shots` outcomes of measuring the (noisy) graph state in the given
// setting. Shots are independent streams keyed by (seed, setting, shot), so
// the result does not depend on the thread count.
inline CountsTable sample_counts(const Graph& g,
                                 const MeasurementSetting& setting,
                                 std::uint64_t shots,
                                 const NoiseConfig& noise,
                                 std::uint64_t seed,
                                 unsigned threads = 0) {
    require(shots > 0, "sample_counts: shots must be positive");
    detail::SettingSampler sampler(g, setting, noise);

    unsigned workers = threads ? threads : default_thread_count();
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, shots));
    std::vector<std::map<std::string, std::uint64_t>> partial(workers);
    parallel_chunks(shots, workers, [&](std::size_t begin, std::size_t end, unsigned worker) {
        std::vector<std::uint64_t> out(sampler.words);
        std::vector<std::uint64_t> fx(sampler.words);
        std::vector<std::uint64_t> fz(sampler.words);
        auto& local = partial[worker];
        for (std::size_t s = begin; s < end; ++s) {
            StreamRng rng = StreamRng::derive(
                seed, {detail::kSampleStreamLabel, setting.setting, static_cast<std::uint64_t>(s)});
            sampler.sample_shot(rng, out.data(), fx.data(), fz.data());
            local[bits_to_string(out.data(), sampler.n)] += 1;
        }
    });

    CountsTable table;
    table.setting = setting.setting;
    table.bit_length = g.vertex_count();
    table.shots = shots;
    for (const auto& local : partial) {
        for (const auto& [key, c] : local) {
            table.counts[key] += c;
        }
    }
    return table;
}

// Convenience overload naming the setting by its color class.
inline CountsTable sample_counts(const Graph& g,
                                 const VertexColoring& coloring,
                                 std::uint32_t color,
                                 std::uint64_t shots,
                                 const NoiseConfig& noise,
                                 std::uint64_t seed,
                                 unsigned threads = 0) {
    return sample_counts(g, MeasurementSetting::of(g, coloring, color), shots, noise, seed,
                         threads);
}

// Exact outcome weights for a setting under white noise and readout noise,
// computed from the dense statevector (no sampling, no stabilizer
// machinery). Gate noise is not representable here.
inline Distribution exact_setting_weights(const Graph& g,
                                          const MeasurementSetting& setting,
                                          const NoiseConfig& noise,
                                          std::size_t limit = 16) {
    noise.validate(g);
    require(noise.cz_depolarizing_p == 0.0,
            "exact_setting_weights covers white noise and readout only, not gate noise");
    std::size_t n = g.vertex_count();
    dense::State state = dense::graph_state(g, limit);
    dense::apply_hadamards(state, setting.x_set);
    std::size_t dim = state.dim();
    std::vector<double> weights(dim);
    for (std::size_t z = 0; z < dim; ++z) {
        weights[z] = std::norm(state.amps[z]);
    }
    if (noise.white_noise_p > 0.0) {
        double p = noise.white_noise_p;
        double uniform = 1.0 / static_cast<double>(dim);
        for (double& w : weights) {
            w = (1.0 - p) * w + p * uniform;
        }
    }
    if (noise.readout) {
        std::vector<ReadoutCalibration> calibs;
        calibs.reserve(n);
        for (Vertex v = 0; v < n; ++v) {
            calibs.push_back(noise.readout->at(v));
        }
        detail::apply_per_axis(weights, n, [&](std::size_t k, int out, int in) {
            return calibs[k].forward(out, in);
        });
    }
    return detail::dense_to_distribution(n, weights);
}

}  // namespace gsbench
