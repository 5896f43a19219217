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

// gsbench: graph-state entanglement benchmarking from the command line.
//
// Subcommands: generate-graph, simulate, evaluate, search-paths, scan-cells,
// tolerance, report, export-dot. All output is JSON (reports, witness
// values, errors); DOT export is plain text. Errors land on stderr as
// {"error": {...}} with a nonzero exit code.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsbench/analysis.hpp"
#include "gsbench/common.hpp"
#include "gsbench/distribution.hpp"
#include "gsbench/graph.hpp"
#include "gsbench/io.hpp"
#include "gsbench/pipeline.hpp"
#include "gsbench/sim.hpp"
#include "gsbench/witness.hpp"

namespace {

using gsbench::Vertex;

std::vector<Vertex> parse_vertex_list(const std::string& text) {
    std::vector<Vertex> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        gsbench::require(!token.empty(), "empty entry in vertex list \"", text, "\"");
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(token, &used);
        } catch (const std::exception&) {
            gsbench::fail("bad vertex \"", token, "\" in \"", text, "\"");
        }
        gsbench::require(used == token.size(), "bad vertex \"", token, "\" in \"", text, "\"");
        out.push_back(static_cast<Vertex>(value));
    }
    gsbench::require(!out.empty(), "empty vertex list");
    return out;
}

std::vector<std::vector<Vertex>> parse_cells(const std::string& text) {
    std::vector<std::vector<Vertex>> cells;
    std::string group;
    std::istringstream in(text);
    while (std::getline(in, group, ';')) {
        cells.push_back(parse_vertex_list(group));
    }
    gsbench::require(!cells.empty(), "empty cell list");
    return cells;
}

void emit(const nlohmann::json& document, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << document.dump(2) << '\n';
    } else {
        gsbench::save_json_file(out_path, document);
    }
}

nlohmann::json verdict_entry(const gsbench::DetectionVerdict& v) {
    return nlohmann::json{{"subject", v.subject},
                          {"point", v.point},
                          {"ci_low", v.ci_low},
                          {"ci_high", v.ci_high},
                          {"detected", v.detected}};
}

// Shared inputs for the counts-consuming subcommands.
struct CountsSession {
    gsbench::Graph graph;
    gsbench::VertexColoring coloring;
    std::vector<gsbench::CountsTable> counts;
    std::optional<gsbench::CalibrationSet> calibration;
};

CountsSession open_counts(const std::string& graph_src, const std::string& data_dir,
                          const std::string& counts_dir, const std::string& calibration_file,
                          bool qrem) {
    CountsSession s{gsbench::load_graph(graph_src, data_dir), {}, {}, {}};
    s.coloring = gsbench::two_color(s.graph);
    s.counts = gsbench::read_counts_dir(counts_dir, s.coloring.k);
    for (const auto& table : s.counts) {
        gsbench::require(table.bit_length == s.graph.vertex_count(), "counts for setting ",
                         table.setting, " have ", table.bit_length, " bits but the graph has ",
                         s.graph.vertex_count(), " vertices");
    }
    if (!calibration_file.empty()) {
        s.calibration = gsbench::read_calibration(calibration_file);
    }
    gsbench::require(!qrem || s.calibration.has_value(),
                     "--qrem requires --calibration");
    return s;
}

int run(int argc, char** argv) {
    CLI::App app{"Graph-state entanglement benchmarking"};
    app.require_subcommand(1);
    std::string data_dir = gsbench::default_data_dir().string();
    app.add_option("--data-dir", data_dir, "Directory with bundled preset graphs");

    // generate-graph ---------------------------------------------------------
    auto* gen = app.add_subcommand("generate-graph", "Emit a graph document");
    std::string gen_preset;
    unsigned gen_distance = 0;
    std::string gen_out;
    auto* gen_preset_opt = gen->add_option("--preset", gen_preset, "Preset name");
    auto* gen_dist_opt =
        gen->add_option("--distance", gen_distance, "Heavy-hex code distance (odd)");
    gen->add_option("--out", gen_out, "Output file (default: stdout)");
    gen_preset_opt->excludes(gen_dist_opt);
    gen->callback([&] {
        gsbench::require(!gen_preset.empty() || gen_distance > 0,
                         "need --preset or --distance");
        gsbench::Graph g = gen_preset.empty() ? gsbench::build_heavy_hex(gen_distance)
                                              : gsbench::load_graph(gen_preset, data_dir);
        emit(gsbench::graph_to_json(g), gen_out);
    });

    // simulate ---------------------------------------------------------------
    auto* sim = app.add_subcommand("simulate", "Sample measurement counts per setting");
    std::string sim_graph = "heavy-hex-127";
    std::uint64_t sim_shots = 30000;
    std::uint64_t sim_seed = 1;
    unsigned sim_threads = 0;
    double sim_white = 0.0;
    double sim_cz = 0.0;
    std::string sim_calibration;
    std::vector<double> sim_uniform;
    std::string sim_out_dir;
    sim->add_option("--graph", sim_graph, "Graph preset or file");
    sim->add_option("--shots", sim_shots, "Shots per setting")->check(CLI::PositiveNumber);
    sim->add_option("--seed", sim_seed, "Random seed");
    sim->add_option("--threads", sim_threads, "Worker threads (0 = auto)");
    sim->add_option("--white-noise", sim_white, "White noise probability");
    sim->add_option("--cz-noise", sim_cz, "CZ depolarizing probability");
    auto* sim_cal_opt =
        sim->add_option("--calibration", sim_calibration, "Readout calibration file");
    auto* sim_uni_opt = sim->add_option("--readout-uniform", sim_uniform,
                                        "Uniform readout rates: p10 p01");
    sim_uni_opt->expected(2);
    sim_uni_opt->excludes(sim_cal_opt);
    sim->add_option("--out-dir", sim_out_dir, "Output directory")->required();
    sim->callback([&] {
        gsbench::Graph g = gsbench::load_graph(sim_graph, data_dir);
        gsbench::VertexColoring coloring = gsbench::two_color(g);
        gsbench::NoiseConfig noise;
        noise.white_noise_p = sim_white;
        noise.cz_depolarizing_p = sim_cz;
        if (!sim_calibration.empty()) {
            noise.readout = gsbench::read_calibration(sim_calibration);
        } else if (!sim_uniform.empty()) {
            noise.readout =
                gsbench::uniform_calibration(g.vertex_count(), sim_uniform[0], sim_uniform[1]);
        }
        noise.validate(g);
        std::filesystem::path dir(sim_out_dir);
        for (std::uint32_t c = 0; c < coloring.k; ++c) {
            gsbench::CountsTable table =
                gsbench::sample_counts(g, gsbench::MeasurementSetting::of(g, coloring, c),
                                       sim_shots, noise, sim_seed, sim_threads);
            gsbench::write_counts(dir / gsbench::counts_filename(c), table);
        }
        if (noise.readout) {
            gsbench::write_calibration(dir / "calibration.json", *noise.readout);
        }
        std::cout << nlohmann::json{{"out_dir", sim_out_dir},
                                    {"settings", coloring.k},
                                    {"shots", sim_shots},
                                    {"seed", sim_seed}}
                         .dump(2)
                  << '\n';
    });

    // evaluate ---------------------------------------------------------------
    auto* eval = app.add_subcommand("evaluate", "Evaluate one witness on stored counts");
    std::string eval_graph = "heavy-hex-127";
    std::string eval_counts_dir;
    std::string eval_witness;
    std::string eval_subject;
    std::string eval_cells;
    std::string eval_calibration;
    bool eval_qrem = false;
    std::size_t eval_limit = gsbench::kDefaultMitigationLimit;
    eval->add_option("--graph", eval_graph, "Graph preset or file");
    eval->add_option("--counts-dir", eval_counts_dir, "Directory with counts files")->required();
    eval->add_option("--witness", eval_witness, "generic|ssw|coloring|refined|bipartite")
        ->required()
        ->check(CLI::IsMember({"generic", "ssw", "coloring", "refined", "bipartite"}));
    eval->add_option("--subject", eval_subject,
                     "Comma-separated vertices (path order for refined)");
    eval->add_option("--cells", eval_cells, "Semicolon-separated cells for generic");
    eval->add_option("--calibration", eval_calibration, "Readout calibration file");
    eval->add_flag("--qrem", eval_qrem, "Apply readout mitigation");
    eval->add_option("--limit", eval_limit, "Mitigation region size limit");
    eval->callback([&] {
        CountsSession s =
            open_counts(eval_graph, data_dir, eval_counts_dir, eval_calibration, eval_qrem);
        std::vector<gsbench::Distribution> dists;
        for (const auto& table : s.counts) {
            dists.push_back(gsbench::normalize_counts(table));
        }
        const gsbench::CalibrationSet* calibs =
            s.calibration ? &*s.calibration : nullptr;
        gsbench::WitnessValue value;
        if (eval_witness == "generic") {
            gsbench::require(!eval_cells.empty(), "--witness generic needs --cells");
            value = gsbench::evaluate_witness(s.graph, s.coloring, dists,
                                              parse_cells(eval_cells), calibs, eval_qrem,
                                              eval_limit);
        } else {
            gsbench::require(!eval_subject.empty(), "--witness ", eval_witness,
                             " needs --subject");
            std::vector<Vertex> subject = parse_vertex_list(eval_subject);
            if (eval_witness == "ssw" || eval_witness == "bipartite") {
                std::vector<double> exps = gsbench::stabilizer_expectations(
                    s.graph, s.coloring, dists, calibs, eval_qrem, eval_limit);
                if (eval_witness == "ssw") {
                    value = gsbench::stabilizer_sum_witness(subject, exps, eval_qrem);
                } else {
                    gsbench::require(subject.size() == 2,
                                     "--witness bipartite needs exactly two vertices");
                    value = gsbench::bipartite_witness(
                        s.graph, gsbench::make_edge(subject[0], subject[1]), exps, eval_qrem);
                }
            } else if (eval_witness == "coloring") {
                value = gsbench::coloring_witness(s.graph, s.coloring, dists, subject, calibs,
                                                  eval_qrem, eval_limit);
            } else {
                value = gsbench::refined_cbw_path(s.graph, s.coloring, dists, subject, calibs,
                                                  eval_qrem, eval_limit);
            }
        }
        std::cout << nlohmann::json{{"kind", gsbench::witness_kind_name(value.kind)},
                                    {"subject", value.subject},
                                    {"value", value.value},
                                    {"qrem", value.qrem_applied},
                                    {"capped_cells", value.capped_cells}}
                         .dump(2)
                  << '\n';
    });

    // search-paths -----------------------------------------------------------
    auto* search = app.add_subcommand("search-paths",
                                      "Minimize the path SSW witness per size");
    std::string sp_graph = "heavy-hex-127";
    std::string sp_counts_dir;
    std::string sp_calibration;
    bool sp_qrem = false;
    std::size_t sp_min = 2;
    std::size_t sp_max = 30;
    std::uint32_t sp_resamples = 1000;
    std::uint64_t sp_seed = 0;
    unsigned sp_threads = 0;
    std::size_t sp_limit = gsbench::kDefaultMitigationLimit;
    search->add_option("--graph", sp_graph, "Graph preset or file");
    search->add_option("--counts-dir", sp_counts_dir, "Directory with counts files")->required();
    search->add_option("--calibration", sp_calibration, "Readout calibration file");
    search->add_flag("--qrem", sp_qrem, "Apply readout mitigation");
    search->add_option("--min", sp_min, "Smallest path size");
    search->add_option("--max", sp_max, "Largest path size");
    search->add_option("--resamples", sp_resamples, "Bootstrap resamples");
    search->add_option("--seed", sp_seed, "Bootstrap seed");
    search->add_option("--threads", sp_threads, "Worker threads (0 = auto)");
    search->add_option("--limit", sp_limit, "Mitigation region size limit");
    search->callback([&] {
        CountsSession s =
            open_counts(sp_graph, data_dir, sp_counts_dir, sp_calibration, sp_qrem);
        gsbench::BootstrapEngine engine(s.graph, s.coloring, s.counts,
                                        s.calibration ? &*s.calibration : nullptr, sp_resamples,
                                        sp_seed, sp_limit);
        std::vector<double> exps;
        for (Vertex v = 0; v < s.graph.vertex_count(); ++v) {
            exps.push_back(engine.point_value(engine.add_stabilizer_expectation(v, sp_qrem)));
        }
        std::size_t max = std::min<std::size_t>(sp_max, s.graph.vertex_count());
        gsbench::require(max >= sp_min, "path size range is empty for this graph");
        auto paths = gsbench::min_ssw_path_search(s.graph, exps, sp_min, max, sp_threads);
        std::vector<std::size_t> ids;
        for (const auto& p : paths) {
            ids.push_back(engine.add_stabilizer_sum(p.vertices, sp_qrem));
        }
        engine.run(sp_threads);
        nlohmann::json results = nlohmann::json::array();
        for (std::size_t i = 0; i < paths.size(); ++i) {
            const gsbench::DetectionVerdict& v = engine.verdict(ids[i]);
            results.push_back({{"size", paths[i].size},
                               {"vertices", paths[i].vertices},
                               {"point", v.point},
                               {"ci_low", v.ci_low},
                               {"ci_high", v.ci_high},
                               {"detected", v.detected}});
        }
        std::cout << nlohmann::json{{"qrem", sp_qrem}, {"results", std::move(results)}}.dump(2)
                  << '\n';
    });

    // scan-cells -------------------------------------------------------------
    auto* scan = app.add_subcommand("scan-cells", "Stabilizer-sum witness per unit cell");
    std::string sc_graph = "heavy-hex-127";
    std::string sc_counts_dir;
    std::string sc_calibration;
    bool sc_qrem = false;
    std::uint32_t sc_resamples = 1000;
    std::uint64_t sc_seed = 0;
    unsigned sc_threads = 0;
    std::size_t sc_limit = gsbench::kDefaultMitigationLimit;
    scan->add_option("--graph", sc_graph, "Graph preset or file");
    scan->add_option("--counts-dir", sc_counts_dir, "Directory with counts files")->required();
    scan->add_option("--calibration", sc_calibration, "Readout calibration file");
    scan->add_flag("--qrem", sc_qrem, "Apply readout mitigation");
    scan->add_option("--resamples", sc_resamples, "Bootstrap resamples");
    scan->add_option("--seed", sc_seed, "Bootstrap seed");
    scan->add_option("--threads", sc_threads, "Worker threads (0 = auto)");
    scan->add_option("--limit", sc_limit, "Mitigation region size limit");
    scan->callback([&] {
        CountsSession s =
            open_counts(sc_graph, data_dir, sc_counts_dir, sc_calibration, sc_qrem);
        auto reports = gsbench::unit_cell_scan(s.graph, s.coloring, s.counts,
                                               s.calibration ? &*s.calibration : nullptr,
                                               sc_qrem, sc_resamples, sc_seed, sc_limit,
                                               sc_threads);
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& r : reports) {
            nlohmann::json entry = verdict_entry(r.verdict);
            entry["vertices"] = r.cell.vertices;
            cells.push_back(std::move(entry));
        }
        std::cout << nlohmann::json{{"qrem", sc_qrem}, {"cells", std::move(cells)}}.dump(2)
                  << '\n';
    });

    // tolerance --------------------------------------------------------------
    auto* tol = app.add_subcommand("tolerance", "White-noise tolerance / scaling factor");
    std::string tol_sizes;
    std::size_t tol_path = 0;
    auto* tol_sizes_opt =
        tol->add_option("--sizes", tol_sizes, "Comma-separated cell sizes");
    auto* tol_path_opt =
        tol->add_option("--path-length", tol_path, "Refined-witness path length n");
    tol_sizes_opt->excludes(tol_path_opt);
    tol->callback([&] {
        if (tol_path > 0) {
            double c = gsbench::c_factor(tol_path);
            std::cout << nlohmann::json{{"n", tol_path},
                                        {"c", c},
                                        {"p_tol", c / static_cast<double>(tol_path)}}
                             .dump(2)
                      << '\n';
            return;
        }
        gsbench::require(!tol_sizes.empty(), "need --sizes or --path-length");
        std::vector<std::size_t> sizes;
        for (Vertex v : parse_vertex_list(tol_sizes)) {
            sizes.push_back(v);
        }
        std::cout << nlohmann::json{{"sizes", sizes},
                                    {"p_tol", gsbench::white_noise_tolerance(sizes)}}
                         .dump(2)
                  << '\n';
    });

    // report -----------------------------------------------------------------
    auto* rep = app.add_subcommand("report", "Run the full benchmark pipeline");
    std::string rp_graph = "heavy-hex-127";
    std::string rp_counts_dir;
    std::uint64_t rp_shots = 30000;
    double rp_white = 0.0;
    double rp_cz = 0.0;
    std::string rp_calibration;
    std::vector<double> rp_uniform;
    bool rp_qrem = false;
    std::uint64_t rp_seed = 1;
    std::uint32_t rp_resamples = 1000;
    std::size_t rp_path_min = 2;
    std::size_t rp_path_max = 30;
    std::size_t rp_limit = gsbench::kDefaultMitigationLimit;
    unsigned rp_threads = 0;
    std::string rp_out_dir;
    std::string rp_config;
    bool rp_no_bipartite = false;
    bool rp_no_ssw = false;
    bool rp_no_cells = false;
    bool rp_no_cbw = false;
    bool rp_no_refined = false;
    rep->add_option("--graph", rp_graph, "Graph preset or file");
    rep->add_option("--counts-dir", rp_counts_dir, "Ingest counts instead of simulating");
    rep->add_option("--shots", rp_shots, "Shots per setting");
    rep->add_option("--white-noise", rp_white, "White noise probability");
    rep->add_option("--cz-noise", rp_cz, "CZ depolarizing probability");
    auto* rp_cal_opt =
        rep->add_option("--calibration", rp_calibration, "Readout calibration file");
    auto* rp_uni_opt =
        rep->add_option("--readout-uniform", rp_uniform, "Uniform readout rates: p10 p01");
    rp_uni_opt->expected(2);
    rp_uni_opt->excludes(rp_cal_opt);
    rep->add_flag("--qrem", rp_qrem, "Also evaluate with readout mitigation");
    rep->add_option("--seed", rp_seed, "Random seed");
    rep->add_option("--resamples", rp_resamples, "Bootstrap resamples");
    rep->add_option("--path-min", rp_path_min, "Smallest path size");
    rep->add_option("--path-max", rp_path_max, "Largest path size");
    rep->add_option("--limit", rp_limit, "Mitigation region size limit");
    rep->add_option("--threads", rp_threads, "Worker threads (0 = auto)");
    rep->add_option("--out-dir", rp_out_dir, "Output directory")->required();
    rep->add_option("--config", rp_config, "JSON config file; its values override flags");
    rep->add_flag("--no-bipartite", rp_no_bipartite, "Skip the per-edge analysis");
    rep->add_flag("--no-ssw-paths", rp_no_ssw, "Skip the path SSW analysis");
    rep->add_flag("--no-unit-cells", rp_no_cells, "Skip the unit-cell analysis");
    rep->add_flag("--no-cbw", rp_no_cbw, "Skip the two-cell witness on paths");
    rep->add_flag("--no-refined", rp_no_refined, "Skip the refined witness on paths");
    rep->callback([&] {
        if (!rp_config.empty()) {
            nlohmann::json file = gsbench::load_json_file(rp_config);
            gsbench::require(file.is_object(), rp_config, ": config must be a JSON object");
            for (const auto& [key, value] : file.items()) {
                if (key == "graph") {
                    rp_graph = value.get<std::string>();
                } else if (key == "counts-dir") {
                    rp_counts_dir = value.get<std::string>();
                } else if (key == "shots") {
                    rp_shots = value.get<std::uint64_t>();
                } else if (key == "white-noise") {
                    rp_white = value.get<double>();
                } else if (key == "cz-noise") {
                    rp_cz = value.get<double>();
                } else if (key == "calibration") {
                    rp_calibration = value.get<std::string>();
                } else if (key == "readout-uniform") {
                    rp_uniform = value.get<std::vector<double>>();
                    gsbench::require(rp_uniform.size() == 2,
                                     "config readout-uniform needs [p10, p01]");
                } else if (key == "qrem") {
                    rp_qrem = value.get<bool>();
                } else if (key == "seed") {
                    rp_seed = value.get<std::uint64_t>();
                } else if (key == "resamples") {
                    rp_resamples = value.get<std::uint32_t>();
                } else if (key == "path-min") {
                    rp_path_min = value.get<std::size_t>();
                } else if (key == "path-max") {
                    rp_path_max = value.get<std::size_t>();
                } else if (key == "limit") {
                    rp_limit = value.get<std::size_t>();
                } else if (key == "threads") {
                    rp_threads = value.get<unsigned>();
                } else if (key == "out-dir") {
                    rp_out_dir = value.get<std::string>();
                } else if (key == "data-dir") {
                    data_dir = value.get<std::string>();
                } else if (key == "analyses") {
                    gsbench::require(value.is_object(),
                                     "config analyses must be an object of booleans");
                    for (const auto& [name, flag] : value.items()) {
                        bool enabled = flag.get<bool>();
                        if (name == "bipartite") {
                            rp_no_bipartite = !enabled;
                        } else if (name == "ssw-paths") {
                            rp_no_ssw = !enabled;
                        } else if (name == "unit-cells") {
                            rp_no_cells = !enabled;
                        } else if (name == "cbw") {
                            rp_no_cbw = !enabled;
                        } else if (name == "refined") {
                            rp_no_refined = !enabled;
                        } else {
                            gsbench::fail("unknown analysis toggle \"", name, "\"");
                        }
                    }
                } else {
                    gsbench::fail("unknown config key \"", key, "\"");
                }
            }
        }
        gsbench::RunConfig config;
        config.graph = gsbench::load_graph(rp_graph, data_dir);
        config.graph_source = rp_graph;
        config.shots = rp_shots;
        config.white_noise_p = rp_white;
        config.cz_depolarizing_p = rp_cz;
        if (!rp_calibration.empty()) {
            config.calibration = gsbench::read_calibration(rp_calibration);
        } else if (!rp_uniform.empty()) {
            config.calibration = gsbench::uniform_calibration(config.graph.vertex_count(),
                                                              rp_uniform[0], rp_uniform[1]);
        }
        config.qrem = rp_qrem;
        config.seed = rp_seed;
        config.resamples = rp_resamples;
        config.path_min = rp_path_min;
        config.path_max = rp_path_max;
        config.mitigation_limit = rp_limit;
        config.threads = rp_threads;
        config.output_dir = rp_out_dir;
        config.analyses.bipartite = !rp_no_bipartite;
        config.analyses.ssw_paths = !rp_no_ssw;
        config.analyses.unit_cells = !rp_no_cells;
        config.analyses.cbw = !rp_no_cbw;
        config.analyses.refined = !rp_no_refined;
        if (!rp_counts_dir.empty()) {
            gsbench::VertexColoring coloring = gsbench::two_color(config.graph);
            config.ingest = gsbench::read_counts_dir(rp_counts_dir, coloring.k);
        }
        gsbench::BenchReport report = gsbench::run_pipeline(config);
        std::cout << nlohmann::json{
                         {"report", (std::filesystem::path(rp_out_dir) / "report.json").string()},
                         {"elapsed_seconds", report.elapsed_seconds}}
                         .dump(2)
                  << '\n';
    });

    // export-dot -------------------------------------------------------------
    auto* dot = app.add_subcommand("export-dot", "Render a report as DOT");
    std::string dot_report;
    std::string dot_graph = "heavy-hex-127";
    std::string dot_out;
    dot->add_option("--report", dot_report, "report.json produced by `report`")->required();
    dot->add_option("--graph", dot_graph, "Graph preset or file");
    dot->add_option("--out", dot_out, "Output file (default: stdout)");
    dot->callback([&] {
        nlohmann::json document = gsbench::load_json_file(dot_report);
        gsbench::Graph g = gsbench::load_graph(dot_graph, data_dir);
        std::string text = gsbench::export_dot(document, g);
        if (dot_out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(dot_out);
            gsbench::require(out.good(), "cannot open ", dot_out, " for writing");
            out << text;
            gsbench::require(out.good(), "failed to write ", dot_out);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << nlohmann::json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump(2)
                  << '\n';
        int code = e.get_exit_code();
        return code == 0 ? 2 : code;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", {{"message", e.what()}}}}.dump(2) << '\n';
        return 1;
    }
}
