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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gsbench/graph.hpp"

namespace gsbench {

enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char axis_char(PauliAxis a) {
    return "IXYZ"[static_cast<int>(a)];
}

// Pauli operator with a fixed +1 global sign, stored sparsely as a sorted
// (vertex, axis) list. Identity factors are never stored.
class PauliString {
  public:
    PauliString() = default;

    PauliAxis at(Vertex v) const {
        auto it = find(v);
        return it == factors_.end() ? PauliAxis::I : it->second;
    }

    void set(Vertex v, PauliAxis axis) {
        auto it = std::lower_bound(
            factors_.begin(), factors_.end(), v,
            [](const auto& entry, Vertex key) { return entry.first < key; });
        if (it != factors_.end() && it->first == v) {
            if (axis == PauliAxis::I) {
                factors_.erase(it);
            } else {
                it->second = axis;
            }
        } else if (axis != PauliAxis::I) {
            factors_.insert(it, {v, axis});
        }
    }

    const std::vector<std::pair<Vertex, PauliAxis>>& factors() const { return factors_; }

    std::vector<Vertex> support() const {
        std::vector<Vertex> out;
        out.reserve(factors_.size());
        for (const auto& [v, axis] : factors_) {
            out.push_back(v);
        }
        return out;
    }

    std::size_t weight() const { return factors_.size(); }

    // Two Pauli operators commute iff they disagree on an even number of
    // shared non-identity sites.
    bool commutes_with(const PauliString& other) const {
        std::size_t anticommuting = 0;
        auto it = factors_.begin();
        auto jt = other.factors_.begin();
        while (it != factors_.end() && jt != other.factors_.end()) {
            if (it->first < jt->first) {
                ++it;
            } else if (jt->first < it->first) {
                ++jt;
            } else {
                if (it->second != jt->second) {
                    ++anticommuting;
                }
                ++it;
                ++jt;
            }
        }
        return anticommuting % 2 == 0;
    }

    std::string str() const {
        if (factors_.empty()) {
            return "I";
        }
        std::string out;
        for (const auto& [v, axis] : factors_) {
            out += axis_char(axis);
            out += std::to_string(v);
        }
        return out;
    }

    bool operator==(const PauliString& other) const { return factors_ == other.factors_; }

  private:
    std::vector<std::pair<Vertex, PauliAxis>>::const_iterator find(Vertex v) const {
        auto it = std::lower_bound(
            factors_.begin(), factors_.end(), v,
            [](const auto& entry, Vertex key) { return entry.first < key; });
        return (it != factors_.end() && it->first == v) ? it : factors_.end();
    }

    std::vector<std::pair<Vertex, PauliAxis>> factors_;
};

// Generator attached to vertex i of a graph state: X on i, Z on every
// neighbor of i.
inline PauliString stabilizer_of(const Graph& g, Vertex i) {
    require(i < g.vertex_count(), "stabilizer_of: vertex ", i, " out of range (n=", g.vertex_count(), ")");
    PauliString p;
    p.set(i, PauliAxis::X);
    for (Vertex j : g.neighbors(i)) {
        p.set(j, PauliAxis::Z);
    }
    return p;
}

// Reindexes `p` onto positions 0..|positions|-1, where `positions` is a
// sorted list of vertex ids. Every supported vertex must appear in the list.
inline PauliString reduce_pauli(const PauliString& p, std::span<const Vertex> positions) {
    require(std::is_sorted(positions.begin(), positions.end()) &&
                std::adjacent_find(positions.begin(), positions.end()) == positions.end(),
            "reduce_pauli: positions must be sorted and duplicate-free");
    PauliString out;
    for (const auto& [v, axis] : p.factors()) {
        auto it = std::lower_bound(positions.begin(), positions.end(), v);
        require(it != positions.end() && *it == v,
                "reduce_pauli: supported vertex ", v, " missing from position list");
        out.set(static_cast<Vertex>(it - positions.begin()), axis);
    }
    return out;
}

}  // namespace gsbench
