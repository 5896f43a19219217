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

#ifndef GSBENCH_IO_HPP_
#define GSBENCH_IO_HPP_

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gsbench/common.hpp"
#include "gsbench/distribution.hpp"
#include "gsbench/graph.hpp"

namespace gsbench {

inline constexpr int kSchemaVersion = 1;

inline nlohmann::json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open ", path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail("failed to parse ", path.string(), ": ", e.what());
    }
}

inline void save_json_file(const std::filesystem::path& path, const nlohmann::json& document) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    require(out.good(), "cannot open ", path.string(), " for writing");
    out << document.dump(2) << '\n';
    require(out.good(), "failed to write ", path.string());
}

namespace detail {

inline const nlohmann::json& json_field(const nlohmann::json& j, const char* key,
                                        const char* context) {
    require(j.is_object(), context, ": expected a JSON object");
    auto it = j.find(key);
    require(it != j.end(), context, ": missing field \"", key, "\"");
    return *it;
}

inline std::uint64_t json_uint(const nlohmann::json& j, const char* key, const char* context) {
    const nlohmann::json& v = json_field(j, key, context);
    require(v.is_number_unsigned(), context, ": field \"", key,
            "\" must be a non-negative integer");
    return v.get<std::uint64_t>();
}

inline double json_number(const nlohmann::json& j, const char* key, const char* context) {
    const nlohmann::json& v = json_field(j, key, context);
    require(v.is_number(), context, ": field \"", key, "\" must be a number");
    return v.get<double>();
}

inline void check_schema_version(const nlohmann::json& j, const char* context) {
    std::uint64_t version = json_uint(j, "schema_version", context);
    require(version == kSchemaVersion, context, ": unsupported schema_version ", version);
}

inline Vertex parse_vertex_key(const std::string& key, const char* context) {
    std::uint32_t value = 0;
    const char* end = key.data() + key.size();
    auto [ptr, ec] = std::from_chars(key.data(), end, value);
    require(ec == std::errc() && ptr == end && !key.empty(), context, ": bad qubit key \"",
            key, "\"");
    return value;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graph documents: {"n": int, "edges": [[i,j],...], "name": optional}
// ---------------------------------------------------------------------------

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back({e.first, e.second});
    }
    nlohmann::json j{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
    if (!g.name.empty()) {
        j["name"] = g.name;
    }
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j, const char* context = "graph document") {
    std::uint64_t n = detail::json_uint(j, "n", context);
    const nlohmann::json& edges_json = detail::json_field(j, "edges", context);
    require(edges_json.is_array(), context, ": \"edges\" must be an array");
    std::vector<Edge> edges;
    for (const nlohmann::json& entry : edges_json) {
        require(entry.is_array() && entry.size() == 2 && entry[0].is_number_unsigned() &&
                    entry[1].is_number_unsigned(),
                context, ": each edge must be a pair of vertex ids");
        edges.push_back(make_edge(entry[0].get<Vertex>(), entry[1].get<Vertex>()));
    }
    Graph g(static_cast<std::size_t>(n), edges);
    if (j.contains("name")) {
        require(j["name"].is_string(), context, ": \"name\" must be a string");
        g.name = j["name"].get<std::string>();
    }
    return g;
}

inline void write_graph(const std::filesystem::path& path, const Graph& g) {
    save_json_file(path, graph_to_json(g));
}

inline Graph read_graph(const std::filesystem::path& path) {
    return graph_from_json(load_json_file(path), path.string().c_str());
}

// Directory holding bundled preset graphs, overridable via the environment.
inline std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("GSBENCH_DATA_DIR")) {
        return env;
    }
#ifdef GSBENCH_DATA_DIR
    return GSBENCH_DATA_DIR;
#else
    return "data";
#endif
}

// Resolves a graph source: a path to an edge-list document, or a preset name
// looked up in the data directory. The heavy-hex preset additionally falls
// back to the built-in generator when no data file is bundled.
inline Graph load_graph(const std::string& source,
                        const std::filesystem::path& data_dir = default_data_dir()) {
    if (std::filesystem::exists(source) && !std::filesystem::is_directory(source)) {
        return read_graph(source);
    }
    std::filesystem::path preset = data_dir / (source + ".json");
    if (std::filesystem::exists(preset)) {
        return read_graph(preset);
    }
    if (source == "heavy-hex-127") {
        return build_heavy_hex(7);
    }
    fail("unknown graph source \"", source, "\": not a file, and no preset \"", source,
         ".json\" under ", data_dir.string());
}

// ---------------------------------------------------------------------------
// Counts documents: {"schema_version": 1, "setting": l, "shots": N,
//   "bit_order": "vertex-ascending" | "reversed", "counts": {"0101...": c}}
// ---------------------------------------------------------------------------

inline nlohmann::json counts_to_json(const CountsTable& table) {
    table.validate();
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [key, count] : table.counts) {
        counts[key] = count;
    }
    return nlohmann::json{{"schema_version", kSchemaVersion},
                          {"setting", table.setting},
                          {"bit_length", table.bit_length},
                          {"shots", table.shots},
                          {"bit_order", "vertex-ascending"},
                          {"counts", std::move(counts)}};
}

inline CountsTable counts_from_json(const nlohmann::json& j,
                                    const char* context = "counts document") {
    detail::check_schema_version(j, context);
    CountsTable table;
    table.setting = static_cast<std::uint32_t>(detail::json_uint(j, "setting", context));
    table.shots = detail::json_uint(j, "shots", context);
    const nlohmann::json& order = detail::json_field(j, "bit_order", context);
    require(order.is_string(), context, ": \"bit_order\" must be a string");
    std::string bit_order = order.get<std::string>();
    require(bit_order == "vertex-ascending" || bit_order == "reversed", context,
            ": \"bit_order\" must be \"vertex-ascending\" or \"reversed\"");
    bool reversed = bit_order == "reversed";
    const nlohmann::json& counts = detail::json_field(j, "counts", context);
    require(counts.is_object(), context, ": \"counts\" must be an object");
    for (const auto& [key, value] : counts.items()) {
        require(value.is_number_unsigned(), context, ": count for \"", key,
                "\" must be a non-negative integer");
        std::string normalized = key;
        if (reversed) {
            std::reverse(normalized.begin(), normalized.end());
        }
        auto [it, inserted] = table.counts.emplace(normalized, value.get<std::uint64_t>());
        require(inserted, context, ": duplicate outcome \"", key, "\" after normalization");
    }
    if (j.contains("bit_length")) {
        table.bit_length =
            static_cast<std::size_t>(detail::json_uint(j, "bit_length", context));
    } else {
        require(!table.counts.empty(), context,
                ": cannot infer the bit length of an empty counts table");
        table.bit_length = table.counts.begin()->first.size();
    }
    table.validate();
    return table;
}

inline void write_counts(const std::filesystem::path& path, const CountsTable& table) {
    save_json_file(path, counts_to_json(table));
}

inline CountsTable read_counts(const std::filesystem::path& path) {
    return counts_from_json(load_json_file(path), path.string().c_str());
}

inline std::string counts_filename(std::uint32_t setting) {
    return detail::cat("counts-", setting, ".json");
}

// Reads counts-0.json .. counts-(k-1).json from a directory, one table per
// measurement setting.
inline std::vector<CountsTable> read_counts_dir(const std::filesystem::path& dir,
                                                std::uint32_t settings) {
    std::vector<CountsTable> tables;
    for (std::uint32_t c = 0; c < settings; ++c) {
        std::filesystem::path path = dir / counts_filename(c);
        tables.push_back(read_counts(path));
        require(tables.back().setting == c, path.string(), ": expected setting ", c, ", got ",
                tables.back().setting);
    }
    return tables;
}

// ---------------------------------------------------------------------------
// Calibration documents: {"qubits": {"k": {"p10": x, "p01": y}, ...}}
// ---------------------------------------------------------------------------

inline nlohmann::json calibration_to_json(const CalibrationSet& calibs) {
    nlohmann::json qubits = nlohmann::json::object();
    for (const auto& [v, cal] : calibs.qubits()) {
        qubits[std::to_string(v)] = {{"p10", cal.p10}, {"p01", cal.p01}};
    }
    return nlohmann::json{{"qubits", std::move(qubits)}};
}

inline CalibrationSet calibration_from_json(const nlohmann::json& j,
                                            const char* context = "calibration document") {
    const nlohmann::json& qubits = detail::json_field(j, "qubits", context);
    require(qubits.is_object(), context, ": \"qubits\" must be an object");
    std::map<Vertex, ReadoutCalibration> out;
    for (const auto& [key, entry] : qubits.items()) {
        Vertex v = detail::parse_vertex_key(key, context);
        ReadoutCalibration cal;
        cal.p10 = detail::json_number(entry, "p10", context);
        cal.p01 = detail::json_number(entry, "p01", context);
        out[v] = cal;
    }
    return CalibrationSet(std::move(out));
}

inline void write_calibration(const std::filesystem::path& path, const CalibrationSet& calibs) {
    save_json_file(path, calibration_to_json(calibs));
}

inline CalibrationSet read_calibration(const std::filesystem::path& path) {
    return calibration_from_json(load_json_file(path), path.string().c_str());
}

}  // namespace gsbench

#endif  // GSBENCH_IO_HPP_
