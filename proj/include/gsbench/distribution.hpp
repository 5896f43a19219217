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
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gsbench/common.hpp"

namespace gsbench {

inline constexpr std::size_t kDefaultMitigationLimit = 16;

// Raw measurement record for one setting. Keys are outcome strings with the
// bit of qubit k at character k.
struct CountsTable {
    std::uint32_t setting = 0;
    std::size_t bit_length = 0;
    std::uint64_t shots = 0;
    std::map<std::string, std::uint64_t> counts;

    void validate() const {
        std::uint64_t total = 0;
        for (const auto& [key, c] : counts) {
            require(key.size() == bit_length,
                    "counts key \"", key, "\" has length ", key.size(), ", expected ", bit_length);
            for (char ch : key) {
                require(ch == '0' || ch == '1', "counts key \"", key, "\" is not a bitstring");
            }
            require(c > 0, "counts key \"", key, "\" has zero count");
            total += c;
        }
        require(total == shots, "counts sum to ", total, " but shots=", shots);
    }
};

// Weighted outcome table. Weights sum to 1 (within float tolerance) but may
// be negative after readout mitigation; `quasi` is set when any weight is
// negative. Exactly-zero weights are not stored.
class Distribution {
  public:
    Distribution() = default;

    Distribution(std::size_t bit_length, std::map<std::string, double> weights)
        : bit_length_(bit_length), weights_(std::move(weights)) {
        for (auto it = weights_.begin(); it != weights_.end();) {
            require(it->first.size() == bit_length_,
                    "distribution key \"", it->first, "\" has length ", it->first.size(),
                    ", expected ", bit_length_);
            if (it->second == 0.0) {
                it = weights_.erase(it);
            } else {
                quasi_ = quasi_ || it->second < 0.0;
                ++it;
            }
        }
    }

    std::size_t bit_length() const { return bit_length_; }
    bool quasi() const { return quasi_; }
    const std::map<std::string, double>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }

    double weight(const std::string& key) const {
        auto it = weights_.find(key);
        return it == weights_.end() ? 0.0 : it->second;
    }

    double sum() const {
        double s = 0.0;
        for (const auto& [key, w] : weights_) {
            s += w;
        }
        return s;
    }

    void validate(double tol = 1e-6) const {
        require(std::abs(sum() - 1.0) <= tol,
                "distribution weights sum to ", sum(), ", expected 1 within ", tol);
    }

  private:
    std::size_t bit_length_ = 0;
    std::map<std::string, double> weights_;
    bool quasi_ = false;
};

inline Distribution normalize_counts(const CountsTable& table) {
    table.validate();
    require(table.shots > 0, "cannot normalize an empty counts table");
    std::map<std::string, double> weights;
    double total = static_cast<double>(table.shots);
    for (const auto& [key, c] : table.counts) {
        weights[key] = static_cast<double>(c) / total;
    }
    return Distribution(table.bit_length, std::move(weights));
}

// Restriction of `d` to the listed bit positions, in the order given
// (ascending position lists keep the original bit order).
inline Distribution marginal(const Distribution& d, std::span<const Vertex> positions) {
    require(!positions.empty(), "marginal: empty position list");
    std::vector<bool> seen(d.bit_length(), false);
    for (Vertex p : positions) {
        require(p < d.bit_length(), "marginal: position ", p, " out of range (length=", d.bit_length(), ")");
        require(!seen[p], "marginal: duplicate position ", p);
        seen[p] = true;
    }
    std::map<std::string, double> weights;
    std::string key(positions.size(), '0');
    for (const auto& [full, w] : d.weights()) {
        for (std::size_t i = 0; i < positions.size(); ++i) {
            key[i] = full[positions[i]];
        }
        weights[key] += w;
    }
    return Distribution(positions.size(), std::move(weights));
}

// ---------------------------------------------------------------------------
// Readout calibration
// ---------------------------------------------------------------------------

// Per-qubit readout error rates: p10 = P(read 1 | prepared 0) and
// p01 = P(read 0 | prepared 1). The confusion matrix in the convention
// A[observed][ideal] is
//     [[1-p10, p01],
//      [p10, 1-p01]]
// with columns summing to 1.
struct ReadoutCalibration {
    double p10 = 0.0;
    double p01 = 0.0;

    void validate() const {
        require(p10 >= 0.0 && p10 <= 1.0 && p01 >= 0.0 && p01 <= 1.0,
                "readout rates must lie in [0,1], got p10=", p10, " p01=", p01);
    }

    double determinant() const { return 1.0 - p10 - p01; }

    bool invertible() const { return std::abs(determinant()) > 1e-9; }

    // Entries of A: a(observed, ideal).
    double forward(int observed, int ideal) const {
        if (ideal == 0) {
            return observed == 0 ? 1.0 - p10 : p10;
        }
        return observed == 0 ? p01 : 1.0 - p01;
    }

    // Entries of A^-1: inv(ideal, observed).
    double inverse(int ideal, int observed) const {
        require(invertible(), "confusion matrix with p10=", p10, " p01=", p01, " is singular");
        double det = determinant();
        if (ideal == 0) {
            return (observed == 0 ? 1.0 - p01 : -p01) / det;
        }
        return (observed == 0 ? -p10 : 1.0 - p10) / det;
    }
};

// Calibration data for a set of qubits, keyed by vertex id.
class CalibrationSet {
  public:
    CalibrationSet() = default;

    explicit CalibrationSet(std::map<Vertex, ReadoutCalibration> qubits)
        : qubits_(std::move(qubits)) {
        for (const auto& [v, cal] : qubits_) {
            cal.validate();
        }
    }

    const std::map<Vertex, ReadoutCalibration>& qubits() const { return qubits_; }

    bool has(Vertex v) const { return qubits_.count(v) != 0; }

    const ReadoutCalibration& at(Vertex v) const {
        auto it = qubits_.find(v);
        require(it != qubits_.end(), "no calibration data for qubit ", v);
        return it->second;
    }

    // Calibrations for a list of vertices, e.g. the qubits underlying the
    // bits of a marginal distribution.
    std::vector<ReadoutCalibration> for_qubits(std::span<const Vertex> vs) const {
        std::vector<ReadoutCalibration> out;
        out.reserve(vs.size());
        for (Vertex v : vs) {
            out.push_back(at(v));
        }
        return out;
    }

  private:
    std::map<Vertex, ReadoutCalibration> qubits_;
};

// The same readout error rates on every one of n qubits.
inline CalibrationSet uniform_calibration(std::size_t n, double p10, double p01) {
    std::map<Vertex, ReadoutCalibration> qubits;
    for (Vertex v = 0; v < n; ++v) {
        qubits[v] = ReadoutCalibration{p10, p01};
    }
    return CalibrationSet(std::move(qubits));
}

namespace detail {

// Hard cap on materializing a distribution as a 2^bits array.
inline constexpr std::size_t kDenseWeightLimit = 20;

inline std::vector<double> distribution_to_dense(const Distribution& d) {
    require(d.bit_length() <= kDenseWeightLimit,
            "distribution too wide to densify: ", d.bit_length(), " bits");
    std::vector<double> dense(std::size_t{1} << d.bit_length(), 0.0);
    for (const auto& [key, w] : d.weights()) {
        dense[string_to_index(key)] = w;
    }
    return dense;
}

inline Distribution dense_to_distribution(std::size_t bits, const std::vector<double>& dense) {
    std::map<std::string, double> weights;
    for (std::size_t idx = 0; idx < dense.size(); ++idx) {
        if (dense[idx] != 0.0) {
            weights[index_to_string(idx, bits)] = dense[idx];
        }
    }
    return Distribution(bits, std::move(weights));
}

// Applies one 2x2 matrix per bit axis to a dense weight vector; `entry` maps
// (bit position, output bit, input bit) to the matrix element.
template <typename EntryFn>
void apply_per_axis(std::vector<double>& dense, std::size_t bits, EntryFn&& entry) {
    for (std::size_t k = 0; k < bits; ++k) {
        // Bit k of the string is bit (bits-1-k) of the dense index.
        std::size_t stride = std::size_t{1} << (bits - 1 - k);
        for (std::size_t base = 0; base < dense.size(); ++base) {
            if (base & stride) {
                continue;
            }
            double v0 = dense[base];
            double v1 = dense[base | stride];
            dense[base] = entry(k, 0, 0) * v0 + entry(k, 0, 1) * v1;
            dense[base | stride] = entry(k, 1, 0) * v0 + entry(k, 1, 1) * v1;
        }
    }
}

}  // namespace detail

// Applies the tensor-product confusion model to an ideal distribution:
// the result is what a noisy readout would report. `calibs[k]` describes the
// qubit behind bit k.
inline Distribution apply_confusion(const Distribution& d, std::span<const ReadoutCalibration> calibs) {
    require(calibs.size() == d.bit_length(),
            "apply_confusion: ", calibs.size(), " calibrations for ", d.bit_length(), " bits");
    std::vector<double> dense = detail::distribution_to_dense(d);
    detail::apply_per_axis(dense, d.bit_length(), [&](std::size_t k, int out, int in) {
        return calibs[k].forward(out, in);
    });
    return detail::dense_to_distribution(d.bit_length(), dense);
}

// Inverts the tensor-product confusion model. The output is a
// quasiprobability distribution: weights still sum to 1 but may be negative.
inline Distribution mitigate(const Distribution& d,
                             std::span<const ReadoutCalibration> calibs,
                             std::size_t limit = kDefaultMitigationLimit) {
    require(d.bit_length() <= limit,
            "mitigation region has ", d.bit_length(), " bits, exceeding the limit of ", limit);
    require(calibs.size() == d.bit_length(),
            "mitigate: ", calibs.size(), " calibrations for ", d.bit_length(), " bits");
    for (const ReadoutCalibration& cal : calibs) {
        require(cal.invertible(), "confusion matrix with p10=", cal.p10, " p01=", cal.p01,
                " is singular (|1-p10-p01| <= 1e-9)");
    }
    std::vector<double> dense = detail::distribution_to_dense(d);
    detail::apply_per_axis(dense, d.bit_length(), [&](std::size_t k, int out, int in) {
        return calibs[k].inverse(out, in);
    });
    return detail::dense_to_distribution(d.bit_length(), dense);
}

}  // namespace gsbench
