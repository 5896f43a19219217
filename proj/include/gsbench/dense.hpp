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

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <array>
#include <complex>
#include <random>
#include <span>
#include <vector>

#include "gsbench/graph.hpp"
#include "gsbench/pauli.hpp"

// Reference implementation of states and operators as explicit vectors and
// matrices. Deliberately simple and entirely independent of the stabilizer
// machinery so the two can check each other.

namespace gsbench::dense {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr std::size_t kDefaultDenseLimit = 12;

inline void check_dense_limit(std::size_t n, std::size_t limit) {
    require(n <= limit, "dense representation of ", n, " qubits exceeds the limit of ", limit);
}

// Qubit k occupies bit (n-1-k) of a basis index, so basis states enumerate
// outcome strings in lexicographic order.
inline std::size_t index_bit_mask(std::size_t n, Vertex v) {
    return std::size_t{1} << (n - 1 - v);
}

// Pure state or density operator on n qubits.
struct State {
    std::size_t n = 0;
    bool pure = true;
    Vector amps;  // valid when pure
    Matrix rho;   // valid when !pure

    static State from_vector(std::size_t n, Vector v) {
        return State{n, true, std::move(v), {}};
    }

    static State from_density(std::size_t n, Matrix m) {
        return State{n, false, {}, std::move(m)};
    }

    std::size_t dim() const { return std::size_t{1} << n; }

    State to_density() const {
        if (!pure) {
            return *this;
        }
        return from_density(n, amps * amps.adjoint());
    }
};

// |+>^n with controlled-Z applied across every edge.
inline State graph_state(const Graph& g, std::size_t limit = kDefaultDenseLimit) {
    std::size_t n = g.vertex_count();
    check_dense_limit(n, limit);
    std::size_t dim = std::size_t{1} << n;
    Vector v = Vector::Constant(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    for (const Edge& e : g.edges()) {
        std::size_t mask = index_bit_mask(n, e.first) | index_bit_mask(n, e.second);
        for (std::size_t z = 0; z < dim; ++z) {
            if ((z & mask) == mask) {
                v[z] = -v[z];
            }
        }
    }
    return State::from_vector(n, std::move(v));
}

inline void apply_cz(State& s, Vertex a, Vertex b) {
    require(a != b && a < s.n && b < s.n, "apply_cz: bad qubit pair (", a, ", ", b, ")");
    std::size_t mask = index_bit_mask(s.n, a) | index_bit_mask(s.n, b);
    auto sign = [mask](std::size_t z) { return (z & mask) == mask ? -1.0 : 1.0; };
    if (s.pure) {
        for (std::size_t z = 0; z < s.dim(); ++z) {
            s.amps[z] *= sign(z);
        }
    } else {
        for (std::size_t r = 0; r < s.dim(); ++r) {
            for (std::size_t c = 0; c < s.dim(); ++c) {
                s.rho(r, c) *= sign(r) * sign(c);
            }
        }
    }
}

inline void apply_hadamards(State& s, std::span<const Vertex> qubits) {
    require(s.pure, "apply_hadamards expects a pure state");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (Vertex q : qubits) {
        require(q < s.n, "apply_hadamards: qubit ", q, " out of range");
        std::size_t mask = index_bit_mask(s.n, q);
        for (std::size_t z = 0; z < s.dim(); ++z) {
            if (z & mask) {
                continue;
            }
            Complex lo = s.amps[z];
            Complex hi = s.amps[z | mask];
            s.amps[z] = (lo + hi) * inv_sqrt2;
            s.amps[z | mask] = (lo - hi) * inv_sqrt2;
        }
    }
}

namespace detail {

struct PauliMasks {
    std::size_t xmask = 0;
    std::size_t zmask = 0;
    Complex phase = 1.0;  // i^{#Y}
};

inline PauliMasks masks_of(std::size_t n, const PauliString& p) {
    PauliMasks m;
    int ys = 0;
    for (const auto& [v, axis] : p.factors()) {
        require(v < n, "pauli factor on qubit ", v, " outside an ", n, "-qubit register");
        std::size_t bit = index_bit_mask(n, v);
        if (axis == PauliAxis::X || axis == PauliAxis::Y) {
            m.xmask |= bit;
        }
        if (axis == PauliAxis::Z || axis == PauliAxis::Y) {
            m.zmask |= bit;
        }
        ys += axis == PauliAxis::Y;
    }
    switch (ys % 4) {
        case 0: m.phase = {1.0, 0.0}; break;
        case 1: m.phase = {0.0, 1.0}; break;
        case 2: m.phase = {-1.0, 0.0}; break;
        case 3: m.phase = {0.0, -1.0}; break;
    }
    return m;
}

inline double parity_sign(std::size_t bits) {
    return std::popcount(bits) % 2 ? -1.0 : 1.0;
}

}  // namespace detail

inline Vector apply_pauli(std::size_t n, const PauliString& p, const Vector& v) {
    auto m = detail::masks_of(n, p);
    Vector out(v.size());
    for (std::size_t z = 0; z < static_cast<std::size_t>(v.size()); ++z) {
        out[z ^ m.xmask] = m.phase * detail::parity_sign(z & m.zmask) * v[z];
    }
    return out;
}

inline Matrix apply_pauli_left(std::size_t n, const PauliString& p, const Matrix& rho) {
    auto m = detail::masks_of(n, p);
    Matrix out(rho.rows(), rho.cols());
    for (std::size_t z = 0; z < static_cast<std::size_t>(rho.rows()); ++z) {
        out.row(z ^ m.xmask) = m.phase * detail::parity_sign(z & m.zmask) * rho.row(z);
    }
    return out;
}

inline double expectation(const State& s, const PauliString& p) {
    if (s.pure) {
        return std::real(s.amps.dot(apply_pauli(s.n, p, s.amps)));
    }
    return std::real((apply_pauli_left(s.n, p, s.rho)).trace());
}

// Expectation of the stabilizer projector attached to vertex set `cell`:
// the product over i in cell of (1 + S_i)/2.
inline double projector_expectation(const State& s, const Graph& g, std::span<const Vertex> cell) {
    require(s.n == g.vertex_count(), "state (", s.n, " qubits) does not match graph (",
            g.vertex_count(), " vertices)");
    require_vertex_set(g, cell, "projector_expectation");
    if (s.pure) {
        Vector w = s.amps;
        for (Vertex i : cell) {
            w = 0.5 * (w + apply_pauli(s.n, stabilizer_of(g, i), w));
        }
        return std::real(s.amps.dot(w));
    }
    Matrix r = s.rho;
    for (Vertex i : cell) {
        r = 0.5 * (r + apply_pauli_left(s.n, stabilizer_of(g, i), r));
    }
    return std::real(r.trace());
}

// Conjugates the state by controlled-Z across every edge leaving `vs`,
// disentangling the subsystem spanned by `vs` from its complement when the
// global state is the graph state.
inline State conjugate_boundary_cz(const State& s, const Graph& g, std::span<const Vertex> vs) {
    State out = s;
    for (const Edge& e : boundary_edges(g, vs)) {
        apply_cz(out, e.first, e.second);
    }
    return out;
}

// Reduced density operator on the listed qubits (ascending order).
inline State partial_trace_keep(const State& s, std::span<const Vertex> keep) {
    require(std::is_sorted(keep.begin(), keep.end()) &&
                std::adjacent_find(keep.begin(), keep.end()) == keep.end(),
            "partial_trace_keep: keep list must be sorted and duplicate-free");
    for (Vertex v : keep) {
        require(v < s.n, "partial_trace_keep: qubit ", v, " out of range");
    }
    State dens = s.to_density();
    std::size_t n_out = keep.size();
    std::size_t dim = dens.dim();
    std::vector<std::uint32_t> keep_part(dim, 0);
    std::vector<std::uint32_t> rest_part(dim, 0);
    for (std::size_t z = 0; z < dim; ++z) {
        std::uint32_t kp = 0;
        std::uint32_t rp = 0;
        std::size_t ki = 0;
        for (Vertex q = 0; q < s.n; ++q) {
            bool bit = z & index_bit_mask(s.n, q);
            if (ki < keep.size() && keep[ki] == q) {
                kp = static_cast<std::uint32_t>((kp << 1) | bit);
                ++ki;
            } else {
                rp = static_cast<std::uint32_t>((rp << 1) | bit);
            }
        }
        keep_part[z] = kp;
        rest_part[z] = rp;
    }
    Matrix out = Matrix::Zero(std::size_t{1} << n_out, std::size_t{1} << n_out);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if (rest_part[r] == rest_part[c]) {
                out(keep_part[r], keep_part[c]) += dens.rho(r, c);
            }
        }
    }
    return State::from_density(n_out, std::move(out));
}

inline double state_overlap(const State& reference_pure, const State& s) {
    require(reference_pure.pure, "state_overlap: reference must be pure");
    require(reference_pure.n == s.n, "state_overlap: qubit counts differ");
    if (s.pure) {
        return std::norm(reference_pure.amps.dot(s.amps));
    }
    return std::real(reference_pure.amps.dot(s.rho * reference_pure.amps));
}

// ---------------------------------------------------------------------------
// Random states
// ---------------------------------------------------------------------------

inline Vector haar_random_vector(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (std::size_t z = 0; z < dim; ++z) {
        v[z] = Complex(gauss(rng), gauss(rng));
    }
    v.normalize();
    return v;
}

// Product of independent Haar-random states on each part. Parts must
// partition 0..n-1.
inline State random_product_state(std::size_t n,
                                  std::span<const std::vector<Vertex>> parts,
                                  std::mt19937_64& rng) {
    std::vector<bool> seen(n, false);
    for (const auto& part : parts) {
        require(!part.empty(), "random_product_state: empty part");
        for (Vertex v : part) {
            require(v < n && !seen[v], "random_product_state: parts must partition the qubits");
            seen[v] = true;
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        require(seen[v], "random_product_state: qubit ", v, " missing from the partition");
    }
    std::vector<Vector> factors;
    factors.reserve(parts.size());
    for (const auto& part : parts) {
        factors.push_back(haar_random_vector(std::size_t{1} << part.size(), rng));
    }
    std::size_t dim = std::size_t{1} << n;
    Vector v(dim);
    for (std::size_t z = 0; z < dim; ++z) {
        Complex a = 1.0;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            std::size_t sub = 0;
            for (Vertex q : parts[p]) {
                sub = (sub << 1) | ((z & index_bit_mask(n, q)) ? 1u : 0u);
            }
            a *= factors[p][sub];
        }
        v[z] = a;
    }
    return State::from_vector(n, std::move(v));
}

// Haar-random pure product state across the bipartition (a, b), which must
// partition 0..n-1. Deterministic in the seed.
inline State random_bipartite_product_state(std::span<const Vertex> a,
                                            std::span<const Vertex> b,
                                            std::uint64_t seed) {
    std::size_t n = a.size() + b.size();
    std::vector<std::vector<Vertex>> parts{{a.begin(), a.end()}, {b.begin(), b.end()}};
    std::mt19937_64 rng(seed);
    return random_product_state(n, parts, rng);
}

// Convex mixture of product states, each over its own bipartition drawn
// from `bipartitions`.
inline State random_biseparable_mixture(std::size_t n,
                                        std::span<const std::array<std::vector<Vertex>, 2>> bipartitions,
                                        std::size_t components,
                                        std::mt19937_64& rng) {
    require(!bipartitions.empty() && components > 0, "random_biseparable_mixture: empty input");
    std::size_t dim = std::size_t{1} << n;
    Matrix rho = Matrix::Zero(dim, dim);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> weights(components);
    double total = 0.0;
    for (auto& w : weights) {
        w = unif(rng) + 1e-3;
        total += w;
    }
    for (std::size_t c = 0; c < components; ++c) {
        const auto& parts = bipartitions[rng() % bipartitions.size()];
        std::vector<std::vector<Vertex>> as_parts{parts[0], parts[1]};
        State prod = random_product_state(n, as_parts, rng);
        rho += (weights[c] / total) * (prod.amps * prod.amps.adjoint());
    }
    return State::from_density(n, std::move(rho));
}

// ---------------------------------------------------------------------------
// Dense operators
// ---------------------------------------------------------------------------

inline Matrix pauli_matrix(std::size_t n, const PauliString& p) {
    auto m = detail::masks_of(n, p);
    std::size_t dim = std::size_t{1} << n;
    Matrix out = Matrix::Zero(dim, dim);
    for (std::size_t z = 0; z < dim; ++z) {
        out(z ^ m.xmask, z) = m.phase * detail::parity_sign(z & m.zmask);
    }
    return out;
}

inline Matrix projector_matrix(const Graph& g, std::span<const Vertex> cell,
                               std::size_t limit = kDefaultDenseLimit) {
    std::size_t n = g.vertex_count();
    check_dense_limit(n, limit);
    require_vertex_set(g, cell, "projector_matrix");
    std::size_t dim = std::size_t{1} << n;
    Matrix out = Matrix::Identity(dim, dim);
    for (Vertex i : cell) {
        out = 0.5 * (out + pauli_matrix(n, stabilizer_of(g, i)) * out);
    }
    return out;
}

// Smallest eigenvalue of prod(P_l) - sum(P_l) + (k-1) I for a family of
// commuting operators with eigenvalues in {0, 1}. Rejects inputs that are
// not Hermitian projectors or do not commute pairwise.
inline double operator_inequality_check(std::span<const Matrix> projectors, double input_tol = 1e-9) {
    require(!projectors.empty(), "operator_inequality_check: empty operator list");
    const std::size_t dim = projectors.front().rows();
    for (std::size_t i = 0; i < projectors.size(); ++i) {
        const Matrix& p = projectors[i];
        require(static_cast<std::size_t>(p.rows()) == dim &&
                    static_cast<std::size_t>(p.cols()) == dim,
                "operator_inequality_check: operator ", i, " has mismatched shape");
        require((p - p.adjoint()).cwiseAbs().maxCoeff() <= input_tol,
                "operator_inequality_check: operator ", i, " is not Hermitian");
        require((p * p - p).cwiseAbs().maxCoeff() <= input_tol,
                "operator_inequality_check: operator ", i, " does not have eigenvalues in {0,1}");
        for (std::size_t j = i + 1; j < projectors.size(); ++j) {
            require((p * projectors[j] - projectors[j] * p).cwiseAbs().maxCoeff() <= input_tol,
                    "operator_inequality_check: operators ", i, " and ", j, " do not commute");
        }
    }
    Matrix product = Matrix::Identity(dim, dim);
    Matrix sum = Matrix::Zero(dim, dim);
    for (const Matrix& p : projectors) {
        product = product * p;
        sum += p;
    }
    Matrix combo = product - sum +
                   static_cast<double>(projectors.size() - 1) * Matrix::Identity(dim, dim);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(combo, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace gsbench::dense
