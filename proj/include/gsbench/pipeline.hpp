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

#ifndef GSBENCH_PIPELINE_HPP_
#define GSBENCH_PIPELINE_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gsbench/analysis.hpp"
#include "gsbench/common.hpp"
#include "gsbench/io.hpp"
#include "gsbench/sim.hpp"
#include "gsbench/witness.hpp"

namespace gsbench {

struct AnalysisToggles {
    bool bipartite = true;
    bool ssw_paths = true;
    bool unit_cells = true;
    bool cbw = true;
    bool refined = true;
};

// Everything one benchmark run needs. The graph is already resolved;
// graph_source only documents where it came from.
struct RunConfig {
    Graph graph;
    std::string graph_source;
    std::uint64_t shots = 30000;
    double white_noise_p = 0.0;
    double cz_depolarizing_p = 0.0;
    std::optional<CalibrationSet> calibration;  // readout noise model and QREM reference
    bool qrem = false;
    std::uint32_t resamples = 1000;
    std::uint64_t seed = 1;
    std::size_t path_min = 2;
    std::size_t path_max = 30;
    std::size_t mitigation_limit = kDefaultMitigationLimit;
    unsigned threads = 0;
    AnalysisToggles analyses;
    std::optional<std::vector<CountsTable>> ingest;  // use these counts, skip simulation
    std::filesystem::path output_dir;                // empty: keep everything in memory

    void validate() const {
        require(graph.vertex_count() >= 1, "pipeline needs a nonempty graph");
        require(ingest.has_value() || shots >= 1, "shots must be at least 1");
        require(path_min >= 2, "paths need at least two vertices");
        require(path_max >= path_min, "empty path size range");
        require(white_noise_p >= 0.0 && white_noise_p <= 1.0, "white_noise_p outside [0,1]");
        require(cz_depolarizing_p >= 0.0 && cz_depolarizing_p <= 1.0,
                "cz_depolarizing_p outside [0,1]");
        require(!qrem || calibration.has_value(), "qrem requires calibration data");
        require(resamples >= 1, "need at least one bootstrap resample");
    }
};

struct PathWitnessEntry {
    std::size_t size = 0;
    std::vector<Vertex> vertices;  // path order
    DetectionVerdict verdict;
};

// Results of one mitigation variant (plain readout or QREM).
struct VariantResults {
    std::vector<DetectionVerdict> stabilizers;      // one per vertex
    std::vector<DetectionVerdict> bipartite_edges;  // graph edge order
    std::optional<RegionReport> regions_confident;
    std::optional<RegionReport> regions_point;
    std::vector<PathWitnessEntry> ssw_paths;
    std::vector<PathWitnessEntry> cbw_paths;
    std::vector<PathWitnessEntry> refined_paths;
    std::vector<UnitCellReport> unit_cells;
};

struct BenchReport {
    Graph graph;
    VertexColoring coloring;
    std::vector<CountsTable> counts;
    VariantResults plain;
    std::optional<VariantResults> mitigated;
    double elapsed_seconds = 0.0;
    nlohmann::json document;  // the full serialized report
};

namespace detail {

inline nlohmann::json verdict_json(const DetectionVerdict& v) {
    return nlohmann::json{{"point", v.point},
                          {"ci_low", v.ci_low},
                          {"ci_high", v.ci_high},
                          {"detected", v.detected},
                          {"subject", v.subject}};
}

inline nlohmann::json region_json(const RegionReport& r) {
    return nlohmann::json{
        {"criterion",
         r.criterion == RegionCriterion::ConfidentNegative ? "confident-negative"
                                                           : "point-negative"},
        {"detected_edges", r.detected_edges},
        {"largest_size", r.largest_size},
        {"regions", r.regions}};
}

inline nlohmann::json path_entry_json(const PathWitnessEntry& e) {
    return nlohmann::json{{"size", e.size},          {"vertices", e.vertices},
                          {"point", e.verdict.point}, {"ci_low", e.verdict.ci_low},
                          {"ci_high", e.verdict.ci_high}, {"detected", e.verdict.detected}};
}

inline nlohmann::json variant_json(const VariantResults& r, const AnalysisToggles& toggles) {
    nlohmann::json j;
    nlohmann::json stabilizers = nlohmann::json::array();
    for (const DetectionVerdict& v : r.stabilizers) {
        stabilizers.push_back(verdict_json(v));
    }
    j["stabilizers"] = std::move(stabilizers);
    if (toggles.bipartite) {
        nlohmann::json edges = nlohmann::json::array();
        for (const DetectionVerdict& v : r.bipartite_edges) {
            edges.push_back(verdict_json(v));
        }
        nlohmann::json b{{"edges", std::move(edges)}};
        if (r.regions_confident) {
            b["regions_confident"] = region_json(*r.regions_confident);
        }
        if (r.regions_point) {
            b["regions_point"] = region_json(*r.regions_point);
        }
        j["bipartite"] = std::move(b);
    }
    auto path_array = [](const std::vector<PathWitnessEntry>& entries) {
        nlohmann::json a = nlohmann::json::array();
        for (const PathWitnessEntry& e : entries) {
            a.push_back(path_entry_json(e));
        }
        return a;
    };
    if (toggles.ssw_paths) {
        j["ssw_paths"] = path_array(r.ssw_paths);
    }
    if (toggles.cbw && !r.cbw_paths.empty()) {
        j["cbw_paths"] = path_array(r.cbw_paths);
    }
    if (toggles.refined && !r.refined_paths.empty()) {
        j["refined_paths"] = path_array(r.refined_paths);
    }
    if (toggles.unit_cells) {
        nlohmann::json cells = nlohmann::json::array();
        for (const UnitCellReport& c : r.unit_cells) {
            nlohmann::json entry = verdict_json(c.verdict);
            entry["vertices"] = c.cell.vertices;  // cycle order
            cells.push_back(std::move(entry));
        }
        j["unit_cells"] = std::move(cells);
    }
    return j;
}

inline nlohmann::json config_json(const RunConfig& config) {
    return nlohmann::json{
        {"graph_source", config.graph_source},
        {"graph_name", config.graph.name},
        {"n", config.graph.vertex_count()},
        {"shots", config.shots},
        {"white_noise_p", config.white_noise_p},
        {"cz_depolarizing_p", config.cz_depolarizing_p},
        {"readout_noise", config.calibration.has_value()},
        {"qrem", config.qrem},
        {"seed", config.seed},
        {"resamples", config.resamples},
        {"path_min", config.path_min},
        {"path_max", config.path_max},
        {"mitigation_limit", config.mitigation_limit},
        {"ingested", config.ingest.has_value()},
        {"analyses",
         {{"bipartite", config.analyses.bipartite},
          {"ssw_paths", config.analyses.ssw_paths},
          {"unit_cells", config.analyses.unit_cells},
          {"cbw", config.analyses.cbw},
          {"refined", config.analyses.refined}}}};
}

}  // namespace detail

// Simulate (or ingest) one counts table per measurement setting, evaluate
// every enabled analysis with bootstrap confidence intervals, and assemble
// the report. With qrem enabled, per-vertex, bipartite, SSW and unit-cell
// results are produced both with and without mitigation; the refined path
// witness uses mitigation and the plain two-cell witness does not (its
// readout regions are whole subgraphs, far beyond any mitigation limit).
inline BenchReport run_pipeline(const RunConfig& config) {
    auto t0 = std::chrono::steady_clock::now();
    config.validate();
    const Graph& g = config.graph;
    std::size_t n = g.vertex_count();

    BenchReport report;
    report.graph = g;
    report.coloring = two_color(g);
    const VertexColoring& coloring = report.coloring;

    NoiseConfig noise;
    noise.white_noise_p = config.white_noise_p;
    noise.cz_depolarizing_p = config.cz_depolarizing_p;
    noise.readout = config.calibration;
    noise.validate(g);

    if (config.ingest) {
        report.counts = *config.ingest;
        require(report.counts.size() == coloring.k, "expected ", coloring.k,
                " ingested counts tables, got ", report.counts.size());
    } else {
        for (std::uint32_t c = 0; c < coloring.k; ++c) {
            report.counts.push_back(sample_counts(g, MeasurementSetting::of(g, coloring, c),
                                                  config.shots, noise, config.seed,
                                                  config.threads));
        }
    }
    if (!config.output_dir.empty()) {
        for (const CountsTable& table : report.counts) {
            write_counts(config.output_dir / counts_filename(table.setting), table);
        }
    }

    const CalibrationSet* calibs =
        config.calibration.has_value() ? &*config.calibration : nullptr;
    BootstrapEngine engine(g, coloring, report.counts, calibs, config.resamples, config.seed,
                           config.mitigation_limit);
    if (config.qrem) {
        report.mitigated.emplace();
    }

    struct VariantPlan {
        bool qrem = false;
        VariantResults* out = nullptr;
        std::vector<std::size_t> vertex_ids;
        std::vector<std::size_t> edge_ids;
        std::vector<double> expectations;
        std::vector<PathSearchResult> paths;
        std::vector<std::size_t> ssw_ids;
        std::vector<std::size_t> cell_ids;
    };
    std::vector<VariantPlan> variants;
    variants.push_back({false, &report.plain, {}, {}, {}, {}, {}, {}});
    if (config.qrem) {
        variants.push_back({true, &*report.mitigated, {}, {}, {}, {}, {}, {}});
    }

    const AnalysisToggles& toggles = config.analyses;
    bool need_paths = toggles.ssw_paths || toggles.cbw || toggles.refined;
    std::size_t path_max = std::min<std::size_t>(config.path_max, n);
    std::vector<SubgraphRef> cells;
    if (toggles.unit_cells) {
        cells = enumerate_unit_cells(g);
    }

    for (VariantPlan& plan : variants) {
        for (Vertex v = 0; v < n; ++v) {
            plan.vertex_ids.push_back(engine.add_stabilizer_expectation(v, plan.qrem));
            plan.expectations.push_back(engine.point_value(plan.vertex_ids.back()));
        }
        if (toggles.bipartite) {
            for (const Edge& e : g.edges()) {
                plan.edge_ids.push_back(engine.add_bipartite_witness(e, plan.qrem));
            }
        }
        if (need_paths && path_max >= config.path_min) {
            plan.paths = min_ssw_path_search(g, plan.expectations, config.path_min, path_max,
                                             config.threads);
            if (toggles.ssw_paths) {
                for (const PathSearchResult& p : plan.paths) {
                    plan.ssw_ids.push_back(engine.add_stabilizer_sum(p.vertices, plan.qrem));
                }
            }
        }
        if (toggles.unit_cells) {
            for (const SubgraphRef& cell : cells) {
                plan.cell_ids.push_back(engine.add_stabilizer_sum(cell.vertices, plan.qrem));
            }
        }
    }

    // The plain two-cell witness follows the plain minimizing paths; the
    // refined witness follows the paths of whichever variant it runs in.
    std::vector<std::size_t> cbw_ids;
    if (toggles.cbw) {
        for (const PathSearchResult& p : variants.front().paths) {
            cbw_ids.push_back(engine.add_coloring_witness(p.vertices, false));
        }
    }
    std::vector<std::size_t> refined_ids;
    VariantPlan& refined_plan = variants.back();
    if (toggles.refined) {
        for (const PathSearchResult& p : refined_plan.paths) {
            refined_ids.push_back(engine.add_refined_path_witness(p.vertices, refined_plan.qrem));
        }
    }

    engine.run(config.threads);

    for (VariantPlan& plan : variants) {
        VariantResults& out = *plan.out;
        for (std::size_t id : plan.vertex_ids) {
            out.stabilizers.push_back(engine.verdict(id));
        }
        if (toggles.bipartite) {
            for (std::size_t id : plan.edge_ids) {
                out.bipartite_edges.push_back(engine.verdict(id));
            }
            out.regions_confident =
                bipartite_regions(g, out.bipartite_edges, RegionCriterion::ConfidentNegative);
            out.regions_point =
                bipartite_regions(g, out.bipartite_edges, RegionCriterion::PointNegative);
        }
        if (toggles.ssw_paths) {
            for (std::size_t i = 0; i < plan.ssw_ids.size(); ++i) {
                out.ssw_paths.push_back({plan.paths[i].size, plan.paths[i].vertices,
                                         engine.verdict(plan.ssw_ids[i])});
            }
        }
        if (toggles.unit_cells) {
            for (std::size_t i = 0; i < plan.cell_ids.size(); ++i) {
                out.unit_cells.push_back({cells[i], engine.verdict(plan.cell_ids[i])});
            }
        }
    }
    if (toggles.cbw) {
        const auto& paths = variants.front().paths;
        for (std::size_t i = 0; i < cbw_ids.size(); ++i) {
            report.plain.cbw_paths.push_back(
                {paths[i].size, paths[i].vertices, engine.verdict(cbw_ids[i])});
        }
    }
    if (toggles.refined) {
        VariantResults& out = *refined_plan.out;
        for (std::size_t i = 0; i < refined_ids.size(); ++i) {
            out.refined_paths.push_back({refined_plan.paths[i].size,
                                         refined_plan.paths[i].vertices,
                                         engine.verdict(refined_ids[i])});
        }
    }

    nlohmann::json results{{"no_qrem", detail::variant_json(report.plain, toggles)}};
    if (report.mitigated) {
        results["qrem"] = detail::variant_json(*report.mitigated, toggles);
    }
    nlohmann::json settings = nlohmann::json::array();
    for (const CountsTable& table : report.counts) {
        settings.push_back({{"setting", table.setting},
                            {"shots", table.shots},
                            {"distinct_outcomes", table.counts.size()}});
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.document = nlohmann::json{{"schema_version", kSchemaVersion},
                                     {"bit_order", "vertex-ascending"},
                                     {"config", detail::config_json(config)},
                                     {"graph", graph_to_json(g)},
                                     {"settings", std::move(settings)},
                                     {"results", std::move(results)},
                                     {"timing", {{"elapsed_seconds", report.elapsed_seconds}}}};
    if (!config.output_dir.empty()) {
        save_json_file(config.output_dir / "report.json", report.document);
    }
    return report;
}

namespace detail {

inline std::string ramp_color(double expectation) {
    double t = (std::clamp(expectation, -1.0, 1.0) + 1.0) / 2.0;
    auto blend = [](double u, int from, int to) {
        return static_cast<int>(from + u * (to - from) + 0.5);
    };
    int r, gg, b;
    if (t < 0.5) {  // red to near-white
        double u = t / 0.5;
        r = blend(u, 214, 245);
        gg = blend(u, 69, 245);
        b = blend(u, 69, 245);
    } else {  // near-white to green
        double u = (t - 0.5) / 0.5;
        r = blend(u, 245, 47);
        gg = blend(u, 245, 158);
        b = blend(u, 245, 68);
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, gg, b);
    return buf;
}

}  // namespace detail

// DOT rendering of a report document: node fill mapped from the stabilizer
// expectation, detected bipartite edges drawn thick and red, detected unit
// cells grouped as clusters. The graph must match the one the report was
// produced from.
inline std::string export_dot(const nlohmann::json& document, const Graph& g) {
    const nlohmann::json& graph_doc = detail::json_field(document, "graph", "report");
    Graph reported = graph_from_json(graph_doc, "report graph");
    require(reported.vertex_count() == g.vertex_count() && reported.edges() == g.edges(),
            "report was produced from a different graph");
    const nlohmann::json& results = detail::json_field(document, "results", "report");
    const nlohmann::json& variant = results.contains("qrem") ? results["qrem"]
                                                             : detail::json_field(
                                                                   results, "no_qrem", "report");
    std::ostringstream out;
    out << "graph \"" << (g.name.empty() ? std::string("gsbench") : g.name) << "\" {\n";
    out << "  node [shape=circle style=filled fontsize=10];\n";
    if (variant.contains("unit_cells")) {
        std::size_t cluster = 0;
        for (const nlohmann::json& cell : variant["unit_cells"]) {
            if (!cell.value("detected", false)) {
                continue;
            }
            out << "  subgraph cluster_" << cluster++ << " {\n    label=\"cell\";\n    ";
            for (const nlohmann::json& v : cell["vertices"]) {
                out << v.get<Vertex>() << "; ";
            }
            out << "\n  }\n";
        }
    }
    std::vector<double> expectations(g.vertex_count(), 0.0);
    if (variant.contains("stabilizers")) {
        for (const nlohmann::json& entry : variant["stabilizers"]) {
            Vertex v = entry["subject"][0].get<Vertex>();
            require(v < g.vertex_count(), "report stabilizer vertex out of range");
            expectations[v] = entry["point"].get<double>();
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [fillcolor=\"" << detail::ramp_color(expectations[v]) << "\"];\n";
    }
    std::map<Edge, bool> detected;
    if (variant.contains("bipartite")) {
        for (const nlohmann::json& entry : variant["bipartite"]["edges"]) {
            Edge e = make_edge(entry["subject"][0].get<Vertex>(),
                               entry["subject"][1].get<Vertex>());
            detected[e] = entry["detected"].get<bool>();
        }
    }
    for (const Edge& e : g.edges()) {
        auto it = detected.find(e);
        out << "  " << e.first << " -- " << e.second;
        if (it != detected.end() && it->second) {
            out << " [color=\"#c0392b\" penwidth=2.4]";
        } else if (it != detected.end()) {
            out << " [color=\"#9a9a9a\" style=dashed]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

inline std::string export_dot(const BenchReport& report, const Graph& g) {
    return export_dot(report.document, g);
}

}  // namespace gsbench

#endif  // GSBENCH_PIPELINE_HPP_
