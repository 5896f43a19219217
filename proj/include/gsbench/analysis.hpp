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

#ifndef GSBENCH_ANALYSIS_HPP_
#define GSBENCH_ANALYSIS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gsbench/common.hpp"
#include "gsbench/distribution.hpp"
#include "gsbench/graph.hpp"
#include "gsbench/subgraph.hpp"
#include "gsbench/witness.hpp"

namespace gsbench {

// Point estimate with a percentile bootstrap confidence interval. The
// interval is clamped to contain the point estimate, and a subject counts as
// detected only when the whole interval lies below zero.
struct DetectionVerdict {
    double point = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    bool detected = false;
    std::vector<Vertex> subject;
};

namespace detail {

inline constexpr std::uint64_t kBootstrapStreamLabel = 0xb0075;

// Linear-interpolation percentile over an ascending-sorted sample.
inline double percentile_sorted(std::span<const double> sorted, double q) {
    require(!sorted.empty(), "percentile of an empty sample");
    if (sorted.size() == 1) {
        return sorted[0];
    }
    double pos = q * static_cast<double>(sorted.size() - 1);
    std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) {
        return sorted.back();
    }
    double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

inline DetectionVerdict make_verdict(double point, std::vector<double> values,
                                     std::vector<Vertex> subject) {
    std::sort(values.begin(), values.end());
    DetectionVerdict v;
    v.point = point;
    v.ci_low = std::min(percentile_sorted(values, 0.025), point);
    v.ci_high = std::max(percentile_sorted(values, 0.975), point);
    v.detected = v.ci_high < 0.0;
    v.subject = std::move(subject);
    return v;
}

// Walker/Vose alias table for O(1) draws from a categorical distribution.
struct AliasTable {
    std::vector<double> prob;
    std::vector<std::uint32_t> alias;

    void build(std::span<const std::uint64_t> counts, std::uint64_t total) {
        std::size_t m = counts.size();
        require(m > 0 && total > 0, "alias table over an empty distribution");
        prob.assign(m, 1.0);
        alias.assign(m, 0);
        std::vector<double> scaled(m);
        for (std::size_t i = 0; i < m; ++i) {
            scaled[i] = static_cast<double>(counts[i]) * static_cast<double>(m) /
                        static_cast<double>(total);
        }
        std::vector<std::uint32_t> small;
        std::vector<std::uint32_t> large;
        for (std::size_t i = 0; i < m; ++i) {
            (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
        }
        while (!small.empty() && !large.empty()) {
            std::uint32_t s = small.back();
            small.pop_back();
            std::uint32_t l = large.back();
            prob[s] = scaled[s];
            alias[s] = l;
            scaled[l] = (scaled[l] + scaled[s]) - 1.0;
            if (scaled[l] < 1.0) {
                large.pop_back();
                small.push_back(l);
            }
        }
        // Entries left on either worklist have weight 1 up to rounding.
    }

    std::uint32_t draw(StreamRng& rng) const {
        std::uint32_t slot = static_cast<std::uint32_t>(rng.next_below(prob.size()));
        return rng.next_double() < prob[slot] ? slot : alias[slot];
    }
};

// Deterministic multinomial resampler for one counts table. The resample for
// index b depends only on (seed, setting, b), so any evaluation strategy that
// shares these streams reproduces identical resampled tables.
struct TableResampler {
    std::uint32_t setting = 0;
    std::uint64_t shots = 0;
    std::vector<std::string> keys;
    std::vector<std::uint64_t> base_counts;
    AliasTable alias;

    void init(const CountsTable& table) {
        table.validate();
        require(table.shots > 0, "cannot resample a table with zero shots");
        setting = table.setting;
        shots = table.shots;
        keys.clear();
        base_counts.clear();
        for (const auto& [key, count] : table.counts) {
            keys.push_back(key);
            base_counts.push_back(count);
        }
        alias.build(base_counts, shots);
    }

    void resample(std::uint64_t seed, std::uint64_t b, std::span<std::uint64_t> tally) const {
        StreamRng rng = StreamRng::derive(seed, {kBootstrapStreamLabel, setting, b});
        std::fill(tally.begin(), tally.end(), 0);
        for (std::uint64_t shot = 0; shot < shots; ++shot) {
            ++tally[alias.draw(rng)];
        }
    }
};

}  // namespace detail

// Percentile bootstrap for an arbitrary functional of a set of counts
// tables. Each table is resampled independently with replacement; resample b
// of table s is a deterministic function of (seed, s.setting, b).
inline DetectionVerdict bootstrap_ci(
    const std::vector<CountsTable>& tables,
    const std::function<double(const std::vector<CountsTable>&)>& functional,
    std::uint32_t resamples = 1000, std::uint64_t seed = 0, unsigned threads = 0) {
    require(!tables.empty(), "bootstrap_ci needs at least one counts table");
    require(functional != nullptr, "bootstrap_ci needs a functional");
    require(resamples > 0, "bootstrap_ci needs at least one resample");
    std::vector<detail::TableResampler> resamplers(tables.size());
    for (std::size_t s = 0; s < tables.size(); ++s) {
        resamplers[s].init(tables[s]);
    }
    double point = functional(tables);
    std::vector<double> values(resamples, 0.0);
    parallel_chunks(resamples, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
        std::vector<CountsTable> resampled = tables;
        std::vector<std::uint64_t> tally;
        for (std::size_t b = begin; b < end; ++b) {
            for (std::size_t s = 0; s < tables.size(); ++s) {
                const detail::TableResampler& r = resamplers[s];
                tally.assign(r.keys.size(), 0);
                r.resample(seed, b, tally);
                resampled[s].counts.clear();
                for (std::size_t i = 0; i < r.keys.size(); ++i) {
                    if (tally[i] > 0) {
                        resampled[s].counts[r.keys[i]] = tally[i];
                    }
                }
            }
            values[b] = functional(resampled);
        }
    });
    return detail::make_verdict(point, std::move(values), {});
}

// Batched bootstrap evaluator. Registers many witness-style subjects against
// one set of counts tables, then evaluates all of them on every resample in a
// single pass so that shared quantities (per-vertex stabilizer projectors,
// repeated cells) are computed once per resample instead of once per subject.
// Resample streams match bootstrap_ci, so a subject evaluated here gets the
// same resampled tables as the single-subject path.
class BootstrapEngine {
  public:
    BootstrapEngine(const Graph& g, const VertexColoring& coloring,
                    const std::vector<CountsTable>& tables,
                    const CalibrationSet* calibrations = nullptr, std::uint32_t resamples = 1000,
                    std::uint64_t seed = 0, std::size_t mitigation_limit = kDefaultMitigationLimit)
        : graph_(g),
          coloring_(coloring),
          limit_(mitigation_limit),
          resamples_(resamples),
          seed_(seed) {
        require(coloring_.proper_for(graph_), "measurement coloring must be proper");
        require(resamples_ > 0, "bootstrap needs at least one resample");
        if (calibrations != nullptr) {
            calibrations_ = *calibrations;
        }
        std::size_t n = graph_.vertex_count();
        require(tables.size() == coloring_.k,
                "expected one counts table per measurement setting, got ", tables.size(),
                " for ", coloring_.k, " settings");
        settings_.resize(tables.size());
        for (std::size_t s = 0; s < tables.size(); ++s) {
            const CountsTable& table = tables[s];
            require(table.setting == s, "counts table ", s, " is labeled with setting ",
                    table.setting);
            require(table.bit_length == n, "counts table ", s, " has bit length ",
                    table.bit_length, " but the graph has ", n, " vertices");
            SettingData& data = settings_[s];
            data.resampler.init(table);
            std::size_t rows = data.resampler.keys.size();
            data.words = words_for_bits(n);
            data.packed.assign(rows * data.words, 0);
            data.base_weights.resize(rows);
            for (std::size_t i = 0; i < rows; ++i) {
                string_to_bits(data.resampler.keys[i], &data.packed[i * data.words]);
                data.base_weights[i] = static_cast<double>(data.resampler.base_counts[i]) /
                                       static_cast<double>(table.shots);
            }
        }
    }

    // Subject registration. Each call returns an id for verdict(); point
    // values are available immediately, intervals after run().
    std::size_t add_stabilizer_expectation(Vertex v, bool qrem) {
        require(v < graph_.vertex_count(), "vertex ", v, " out of range");
        Subject subject;
        subject.type = SubjectType::VertexExpectation;
        subject.kernels.push_back(ensure_kernel({v}, qrem));
        subject.subject_vertices = {v};
        return finish_subject(std::move(subject));
    }

    std::size_t add_bipartite_witness(Edge e, bool qrem) {
        require(graph_.has_edge(e.first, e.second), "no edge between ", e.first, " and ",
                e.second);
        Subject subject;
        subject.type = SubjectType::Bipartite;
        subject.kernels.push_back(ensure_kernel({e.first}, qrem));
        subject.kernels.push_back(ensure_kernel({e.second}, qrem));
        subject.subject_vertices = {e.first, e.second};
        return finish_subject(std::move(subject));
    }

    std::size_t add_stabilizer_sum(std::vector<Vertex> vertices, bool qrem) {
        require_vertex_set(graph_, vertices, "stabilizer sum subject");
        std::sort(vertices.begin(), vertices.end());
        Subject subject;
        subject.type = SubjectType::StabilizerSum;
        for (Vertex v : vertices) {
            subject.kernels.push_back(ensure_kernel({v}, qrem));
        }
        subject.forward_constant = static_cast<double>(vertices.size()) - 1.0;
        subject.subject_vertices = std::move(vertices);
        return finish_subject(std::move(subject));
    }

    std::size_t add_coloring_witness(std::vector<Vertex> vertices, bool qrem) {
        require(coloring_.bipartite(), "the two-cell witness needs a two-coloring");
        require_vertex_set(graph_, vertices, "two-cell witness subject");
        std::sort(vertices.begin(), vertices.end());
        Subject subject;
        subject.type = SubjectType::Coloring;
        for (std::uint32_t color = 0; color < 2; ++color) {
            std::vector<Vertex> cell;
            for (Vertex v : vertices) {
                if (coloring_.colors[v] == color) {
                    cell.push_back(v);
                }
            }
            subject.kernels.push_back(cell.empty() ? kNoKernel : ensure_kernel(cell, qrem));
        }
        subject.forward_constant = 1.5;
        subject.subject_vertices = std::move(vertices);
        return finish_subject(std::move(subject));
    }

    std::size_t add_refined_path_witness(std::vector<Vertex> path, bool qrem) {
        require_vertex_set(graph_, path, "refined witness path");
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            require(graph_.has_edge(path[i], path[i + 1]),
                    "refined witness subject must be a path; no edge between ", path[i],
                    " and ", path[i + 1]);
        }
        Subject subject;
        subject.type = SubjectType::RefinedPath;
        auto forward = refined_path_cells(path, coloring_);
        for (const auto& cell : forward) {
            subject.kernels.push_back(ensure_kernel(cell, qrem));
        }
        subject.forward_constant = static_cast<double>(forward.size()) - 0.5;
        std::vector<Vertex> reversed(path.rbegin(), path.rend());
        auto backward = refined_path_cells(reversed, coloring_);
        for (const auto& cell : backward) {
            subject.reverse_kernels.push_back(ensure_kernel(cell, qrem));
        }
        subject.reverse_constant = static_cast<double>(backward.size()) - 0.5;
        if (!path.empty() && path.front() > path.back()) {
            path = std::move(reversed);
        }
        subject.subject_vertices = std::move(path);
        return finish_subject(std::move(subject));
    }

    std::size_t subject_count() const { return subjects_.size(); }

    double point_value(std::size_t id) const {
        require(id < subjects_.size(), "subject id out of range");
        return subjects_[id].point;
    }

    void run(unsigned threads = 0) {
        require(!ran_, "bootstrap engine already ran");
        ran_ = true;
        std::size_t count = subjects_.size();
        std::vector<std::vector<double>> values(count, std::vector<double>(resamples_, 0.0));
        parallel_chunks(resamples_, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
            std::vector<std::vector<std::uint64_t>> tallies(settings_.size());
            std::vector<std::vector<double>> weights(settings_.size());
            for (std::size_t s = 0; s < settings_.size(); ++s) {
                tallies[s].resize(settings_[s].resampler.keys.size());
                weights[s].resize(settings_[s].resampler.keys.size());
            }
            std::vector<double> kernel_values(kernels_.size());
            for (std::size_t b = begin; b < end; ++b) {
                for (std::size_t s = 0; s < settings_.size(); ++s) {
                    const SettingData& data = settings_[s];
                    data.resampler.resample(seed_, b, tallies[s]);
                    double inv_shots = 1.0 / static_cast<double>(data.resampler.shots);
                    for (std::size_t i = 0; i < tallies[s].size(); ++i) {
                        weights[s][i] = static_cast<double>(tallies[s][i]) * inv_shots;
                    }
                }
                for (std::size_t k = 0; k < kernels_.size(); ++k) {
                    kernel_values[k] = kernels_[k].eval(weights);
                }
                for (std::size_t id = 0; id < count; ++id) {
                    values[id][b] = subject_value(subjects_[id], kernel_values);
                }
            }
        });
        verdicts_.clear();
        verdicts_.reserve(count);
        for (std::size_t id = 0; id < count; ++id) {
            verdicts_.push_back(detail::make_verdict(subjects_[id].point, std::move(values[id]),
                                                     subjects_[id].subject_vertices));
        }
    }

    const DetectionVerdict& verdict(std::size_t id) const {
        require(ran_, "call run() before reading verdicts");
        require(id < verdicts_.size(), "subject id out of range");
        return verdicts_[id];
    }

  private:
    enum class SubjectType { VertexExpectation, Bipartite, StabilizerSum, Coloring, RefinedPath };

    static constexpr std::size_t kNoKernel = static_cast<std::size_t>(-1);

    struct SettingData {
        detail::TableResampler resampler;
        std::vector<std::uint64_t> packed;
        std::size_t words = 0;
        std::vector<double> base_weights;
    };

    // Evaluates one projector P(cell) as a linear functional of the outcome
    // weights of a single measurement setting. Without mitigation this is an
    // indicator sum; with mitigation the per-outcome coefficient is the
    // inverse-calibration kernel folded over the cell's readout region.
    struct CellKernel {
        std::uint32_t setting = 0;
        bool mitigated = false;
        std::vector<std::uint32_t> ones;
        std::vector<std::uint32_t> keys;
        std::vector<double> table;

        double eval(const std::vector<std::vector<double>>& weights) const {
            const std::vector<double>& w = weights[setting];
            double total = 0.0;
            if (!mitigated) {
                for (std::uint32_t index : ones) {
                    total += w[index];
                }
            } else {
                for (std::size_t i = 0; i < w.size(); ++i) {
                    total += w[i] * table[keys[i]];
                }
            }
            return total;
        }
    };

    struct Subject {
        SubjectType type = SubjectType::VertexExpectation;
        std::vector<std::size_t> kernels;
        std::vector<std::size_t> reverse_kernels;
        double forward_constant = 0.0;
        double reverse_constant = 0.0;
        double point = 0.0;
        std::vector<Vertex> subject_vertices;
    };

    std::size_t ensure_kernel(std::vector<Vertex> cell, bool qrem) {
        std::sort(cell.begin(), cell.end());
        auto key = std::make_pair(qrem ? 1 : 0, cell);
        auto it = kernel_index_.find(key);
        if (it != kernel_index_.end()) {
            return it->second;
        }
        std::uint32_t color = coloring_.colors[cell.front()];
        for (Vertex v : cell) {
            require(coloring_.colors[v] == color,
                    "witness cell mixes measurement settings");
        }
        const SettingData& data = settings_[color];
        CellKernel kernel;
        kernel.setting = color;
        std::size_t rows = data.resampler.keys.size();
        if (!qrem) {
            std::vector<std::vector<std::uint64_t>> masks;
            for (Vertex v : cell) {
                masks.push_back(
                    detail::support_mask(stabilizer_of(graph_, v), graph_.vertex_count()));
            }
            for (std::size_t i = 0; i < rows; ++i) {
                const std::uint64_t* row = &data.packed[i * data.words];
                bool all_even = true;
                for (const auto& mask : masks) {
                    if (parity_and(row, mask.data(), data.words)) {
                        all_even = false;
                        break;
                    }
                }
                if (all_even) {
                    kernel.ones.push_back(static_cast<std::uint32_t>(i));
                }
            }
        } else {
            require(calibrations_.has_value(),
                    "readout mitigation requested without calibration data");
            kernel.mitigated = true;
            std::vector<Vertex> region = cell;
            for (Vertex v : neighborhood(graph_, cell)) {
                region.push_back(v);
            }
            std::sort(region.begin(), region.end());
            std::size_t r = region.size();
            require(r <= limit_, "mitigation region has ", r, " bits, exceeding the limit of ",
                    limit_);
            std::vector<std::size_t> position(graph_.vertex_count(), 0);
            for (std::size_t j = 0; j < r; ++j) {
                position[region[j]] = j;
            }
            // Indicator of "every reduced stabilizer parity even" over the
            // region patterns, then the transposed inverse calibration folded
            // in one axis at a time.
            std::vector<std::uint64_t> reduced_masks;
            for (Vertex v : cell) {
                std::uint64_t mask = 0;
                mask |= std::uint64_t{1} << (r - 1 - position[v]);
                for (Vertex u : graph_.neighbors(v)) {
                    mask |= std::uint64_t{1} << (r - 1 - position[u]);
                }
                reduced_masks.push_back(mask);
            }
            kernel.table.assign(std::size_t{1} << r, 0.0);
            for (std::size_t x = 0; x < kernel.table.size(); ++x) {
                bool all_even = true;
                for (std::uint64_t mask : reduced_masks) {
                    if (std::popcount(x & mask) & 1) {
                        all_even = false;
                        break;
                    }
                }
                kernel.table[x] = all_even ? 1.0 : 0.0;
            }
            for (std::size_t j = 0; j < r; ++j) {
                const ReadoutCalibration& cal = calibrations_->at(region[j]);
                double inv00 = cal.inverse(0, 0);
                double inv01 = cal.inverse(0, 1);
                double inv10 = cal.inverse(1, 0);
                double inv11 = cal.inverse(1, 1);
                std::size_t stride = std::size_t{1} << (r - 1 - j);
                for (std::size_t base = 0; base < kernel.table.size(); ++base) {
                    if (base & stride) {
                        continue;
                    }
                    double t0 = kernel.table[base];
                    double t1 = kernel.table[base | stride];
                    kernel.table[base] = inv00 * t0 + inv10 * t1;
                    kernel.table[base | stride] = inv01 * t0 + inv11 * t1;
                }
            }
            kernel.keys.resize(rows);
            for (std::size_t i = 0; i < rows; ++i) {
                const std::uint64_t* row = &data.packed[i * data.words];
                std::uint32_t pattern = 0;
                for (std::size_t j = 0; j < r; ++j) {
                    if (get_bit(row, region[j])) {
                        pattern |= std::uint32_t{1} << (r - 1 - j);
                    }
                }
                kernel.keys[i] = pattern;
            }
        }
        kernels_.push_back(std::move(kernel));
        kernel_base_.push_back(0.0);
        std::size_t id = kernels_.size() - 1;
        std::vector<std::vector<double>> base(settings_.size());
        // Kernel evaluation reads only its own setting; borrow base weights.
        base[color] = settings_[color].base_weights;
        kernel_base_[id] = kernels_[id].eval(base);
        kernel_index_.emplace(std::move(key), id);
        return id;
    }

    std::size_t finish_subject(Subject subject) {
        subject.point = subject_value(subject, kernel_base_);
        subjects_.push_back(std::move(subject));
        return subjects_.size() - 1;
    }

    double subject_value(const Subject& subject, std::span<const double> kernel_values) const {
        auto capped = [&](std::size_t id) {
            return id == kNoKernel ? 1.0 : std::min(kernel_values[id], 1.0);
        };
        auto expectation = [&](std::size_t id) { return 2.0 * capped(id) - 1.0; };
        switch (subject.type) {
            case SubjectType::VertexExpectation:
                return expectation(subject.kernels[0]);
            case SubjectType::Bipartite:
                return 1.0 - expectation(subject.kernels[0]) - expectation(subject.kernels[1]);
            case SubjectType::StabilizerSum: {
                double total = 0.0;
                for (std::size_t id : subject.kernels) {
                    total += expectation(id);
                }
                return subject.forward_constant - total;
            }
            case SubjectType::Coloring: {
                double total = 0.0;
                for (std::size_t id : subject.kernels) {
                    total += capped(id);
                }
                return subject.forward_constant - total;
            }
            case SubjectType::RefinedPath: {
                double forward = subject.forward_constant;
                for (std::size_t id : subject.kernels) {
                    forward -= capped(id);
                }
                double backward = subject.reverse_constant;
                for (std::size_t id : subject.reverse_kernels) {
                    backward -= capped(id);
                }
                return std::min(forward, backward);
            }
        }
        fail("unreachable subject type");
    }

    Graph graph_;
    VertexColoring coloring_;
    std::size_t limit_;
    std::uint32_t resamples_;
    std::uint64_t seed_;
    std::optional<CalibrationSet> calibrations_;
    std::vector<SettingData> settings_;
    std::vector<CellKernel> kernels_;
    std::map<std::pair<int, std::vector<Vertex>>, std::size_t> kernel_index_;
    std::vector<double> kernel_base_;
    std::vector<Subject> subjects_;
    std::vector<DetectionVerdict> verdicts_;
    bool ran_ = false;
};

// Best (lowest) stabilizer-sum witness value over induced paths of each size.
struct PathSearchResult {
    std::size_t size = 0;
    std::vector<Vertex> vertices;
    double value = 0.0;
};

// Exhaustive search over induced paths with min_size..max_size vertices,
// minimizing (n' - 1) - sum of endpoint stabilizer expectations. Returns one
// entry per size that admits an induced path, in ascending size order, with
// ties broken toward the lexicographically smallest vertex sequence. The
// reported sequence is in path order with front < back.
inline std::vector<PathSearchResult> min_ssw_path_search(
    const Graph& g, std::span<const double> stabilizer_expectations, std::size_t min_size,
    std::size_t max_size, unsigned threads = 0) {
    std::size_t n = g.vertex_count();
    require(stabilizer_expectations.size() == n, "expected ", n,
            " stabilizer expectations, got ", stabilizer_expectations.size());
    require(min_size >= 2, "paths need at least two vertices");
    require(max_size >= min_size, "empty path size range");
    struct Best {
        bool found = false;
        double value = 0.0;
        std::vector<Vertex> vertices;
    };
    auto offer = [](Best& best, double value, std::span<const Vertex> path) {
        if (!best.found || value < best.value ||
            (value == best.value &&
             std::lexicographical_compare(path.begin(), path.end(), best.vertices.begin(),
                                          best.vertices.end()))) {
            best.found = true;
            best.value = value;
            best.vertices.assign(path.begin(), path.end());
        }
    };
    unsigned workers = threads == 0 ? default_thread_count() : threads;
    std::vector<std::vector<Best>> bests(workers,
                                         std::vector<Best>(max_size - min_size + 1));
    parallel_chunks(n, threads, [&](std::size_t begin, std::size_t end, std::size_t worker) {
        std::vector<Best>& local = bests[worker % workers];
        std::vector<double> prefix(max_size, 0.0);
        for (std::size_t start = begin; start < end; ++start) {
            detail::visit_induced_paths_from(
                g, static_cast<Vertex>(start), max_size, [&](std::span<const Vertex> path) {
                    std::size_t len = path.size();
                    if (len == 2) {
                        prefix[0] = stabilizer_expectations[path[0]];
                    }
                    prefix[len - 1] = prefix[len - 2] + stabilizer_expectations[path[len - 1]];
                    if (len < min_size || path.front() > path.back()) {
                        return;
                    }
                    double value = static_cast<double>(len - 1) - prefix[len - 1];
                    offer(local[len - min_size], value, path);
                });
        }
    });
    std::vector<PathSearchResult> results;
    for (std::size_t size = min_size; size <= max_size; ++size) {
        Best merged;
        for (const auto& local : bests) {
            const Best& candidate = local[size - min_size];
            if (candidate.found) {
                offer(merged, candidate.value, candidate.vertices);
            }
        }
        if (merged.found) {
            results.push_back({size, std::move(merged.vertices), merged.value});
        }
    }
    return results;
}

// Stabilizer-sum witness verdict for every unit cell of the graph.
struct UnitCellReport {
    SubgraphRef cell;
    DetectionVerdict verdict;
};

inline std::vector<UnitCellReport> unit_cell_scan(
    const Graph& g, const VertexColoring& coloring, const std::vector<CountsTable>& tables,
    const CalibrationSet* calibrations = nullptr, bool qrem = false,
    std::uint32_t resamples = 1000, std::uint64_t seed = 0,
    std::size_t mitigation_limit = kDefaultMitigationLimit, unsigned threads = 0) {
    std::vector<SubgraphRef> cells = enumerate_unit_cells(g);
    std::vector<UnitCellReport> reports;
    if (cells.empty()) {
        return reports;
    }
    BootstrapEngine engine(g, coloring, tables, calibrations, resamples, seed, mitigation_limit);
    std::vector<std::size_t> ids;
    for (const SubgraphRef& cell : cells) {
        ids.push_back(engine.add_stabilizer_sum(cell.vertices, qrem));
    }
    engine.run(threads);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        reports.push_back({cells[i], engine.verdict(ids[i])});
    }
    return reports;
}

// Connected regions of vertices joined by edges whose two-qubit witness
// qualifies under the chosen criterion.
enum class RegionCriterion { ConfidentNegative, PointNegative };

struct RegionReport {
    RegionCriterion criterion = RegionCriterion::ConfidentNegative;
    std::size_t detected_edges = 0;
    std::vector<std::vector<Vertex>> regions;
    std::size_t largest_size = 0;
};

inline RegionReport bipartite_regions(const Graph& g,
                                      const std::vector<DetectionVerdict>& edge_verdicts,
                                      RegionCriterion criterion) {
    std::map<Edge, const DetectionVerdict*> by_edge;
    for (const DetectionVerdict& verdict : edge_verdicts) {
        require(verdict.subject.size() == 2, "edge verdict subject must have two vertices");
        Edge e = make_edge(verdict.subject[0], verdict.subject[1]);
        require(g.has_edge(e.first, e.second), "no edge between ", e.first, " and ", e.second);
        require(by_edge.emplace(e, &verdict).second, "duplicate verdict for edge ", e.first,
                "-", e.second);
    }
    require(by_edge.size() == g.edge_count(), "expected a verdict for every edge: got ",
            by_edge.size(), " of ", g.edge_count());
    auto qualifies = [&](Vertex a, Vertex b) {
        const DetectionVerdict* v = by_edge.at(make_edge(a, b));
        return criterion == RegionCriterion::ConfidentNegative ? v->detected : v->point < 0.0;
    };
    RegionReport report;
    report.criterion = criterion;
    for (const auto& [edge, verdict] : by_edge) {
        if (qualifies(edge.first, edge.second)) {
            ++report.detected_edges;
        }
    }
    report.regions =
        connected_components(g, [&](const Edge& e) { return qualifies(e.first, e.second); });
    for (const auto& region : report.regions) {
        report.largest_size = std::max(report.largest_size, region.size());
    }
    return report;
}

}  // namespace gsbench

#endif  // GSBENCH_ANALYSIS_HPP_
