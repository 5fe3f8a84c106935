// Copyright 2026 The qals developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qals/encoding.hpp"
#include "qals/problem.hpp"

namespace qals {

/// One off-diagonal coefficient, keyed by an ordered index pair a < b.
struct Coupling {
    int a = 0;
    int b = 0;
    double w = 0.0;
};

/// Binary quadratic objective sum(v_a q_a) + sum_{a<b}(w_ab q_a q_b) over
/// q in {0,1}. offset is the constant that makes energy + offset equal the
/// squared residual at decoded points; it is reported, never minimized.
struct Qubo {
    int n_qubits = 0;
    std::vector<double> linear;       // v, one entry per qubit
    std::vector<Coupling> quadratic;  // sorted by (a, b); exact zeros omitted
    double offset = 0.0;
};

/// Spin form sum(h_a s_a) + sum_{a<b}(J_ab s_a s_b) over s in {-1,+1}.
struct Ising {
    int n_spins = 0;
    std::vector<double> h;
    std::vector<Coupling> j;  // sorted by (a, b)
    double offset = 0.0;
};

/// Preparation-cost tally, split the way the published accounting splits
/// it. All three phases are exact integers by construction.
struct FlopCounter {
    std::uint64_t linear_prep = 0;        // 2b precompute + per-qubit linear sums
    std::uint64_t quadratic_template = 0; // per-variable-pair column products
    std::uint64_t quadratic_scaling = 0;  // weight-pair rescaling of the template

    std::uint64_t total() const {
        return linear_prep + quadratic_template + quadratic_scaling;
    }
};

/// Coefficient of the (a, b) pair, 0 when the pair is absent.
inline double pair_weight(const std::vector<Coupling>& c, int a, int b) {
    if (a > b) std::swap(a, b);
    for (const Coupling& t : c) {
        if (t.a == a && t.b == b) return t.w;
    }
    return 0.0;
}

/// Objective value without the offset.
inline double energy(const Qubo& q, const Assignment& a) {
    if (static_cast<int>(a.size()) != q.n_qubits) {
        throw std::invalid_argument("energy: assignment has " + std::to_string(a.size()) +
                                    " bits, qubo expects " + std::to_string(q.n_qubits));
    }
    double e = 0.0;
    for (int i = 0; i < q.n_qubits; ++i) {
        if (a[static_cast<std::size_t>(i)]) e += q.linear[static_cast<std::size_t>(i)];
    }
    for (const Coupling& c : q.quadratic) {
        if (a[static_cast<std::size_t>(c.a)] && a[static_cast<std::size_t>(c.b)]) e += c.w;
    }
    return e;
}

/// Spin objective value without the offset; spins are +1/-1.
inline double ising_energy(const Ising& i, const std::vector<int>& spins) {
    if (static_cast<int>(spins.size()) != i.n_spins) {
        throw std::invalid_argument("ising_energy: spin count mismatch");
    }
    double e = 0.0;
    for (int a = 0; a < i.n_spins; ++a) e += i.h[static_cast<std::size_t>(a)] * spins[static_cast<std::size_t>(a)];
    for (const Coupling& c : i.j) {
        e += c.w * spins[static_cast<std::size_t>(c.a)] * spins[static_cast<std::size_t>(c.b)];
    }
    return e;
}

namespace detail {

inline void sort_couplings(std::vector<Coupling>& c) {
    std::sort(c.begin(), c.end(), [](const Coupling& l, const Coupling& r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    });
}

}  // namespace detail

/// Substitutes s = 2q - 1: h_a = v_a/2 + sum_b(w_ab)/4, J_ab = w_ab/4,
/// offset gains sum(v)/2 + sum(w)/4. Energies (with offsets) agree on
/// every assignment.
inline Ising qubo_to_ising(const Qubo& q) {
    Ising out;
    out.n_spins = q.n_qubits;
    out.h.assign(static_cast<std::size_t>(q.n_qubits), 0.0);
    out.offset = q.offset;
    for (int a = 0; a < q.n_qubits; ++a) {
        out.h[static_cast<std::size_t>(a)] = q.linear[static_cast<std::size_t>(a)] / 2.0;
        out.offset += q.linear[static_cast<std::size_t>(a)] / 2.0;
    }
    out.j.reserve(q.quadratic.size());
    for (const Coupling& c : q.quadratic) {
        out.j.push_back({c.a, c.b, c.w / 4.0});
        out.h[static_cast<std::size_t>(c.a)] += c.w / 4.0;
        out.h[static_cast<std::size_t>(c.b)] += c.w / 4.0;
        out.offset += c.w / 4.0;
    }
    return out;
}

/// Inverse substitution q = (s + 1)/2.
inline Qubo ising_to_qubo(const Ising& i) {
    Qubo out;
    out.n_qubits = i.n_spins;
    out.linear.assign(static_cast<std::size_t>(i.n_spins), 0.0);
    out.offset = i.offset;
    for (int a = 0; a < i.n_spins; ++a) {
        out.linear[static_cast<std::size_t>(a)] = 2.0 * i.h[static_cast<std::size_t>(a)];
        out.offset -= i.h[static_cast<std::size_t>(a)];
    }
    out.quadratic.reserve(i.j.size());
    for (const Coupling& c : i.j) {
        out.quadratic.push_back({c.a, c.b, 4.0 * c.w});
        out.linear[static_cast<std::size_t>(c.a)] -= 2.0 * c.w;
        out.linear[static_cast<std::size_t>(c.b)] -= 2.0 * c.w;
        out.offset += c.w;
    }
    return out;
}

/// Result of rescaling an Ising model into hardware coefficient bounds.
struct NormalizedIsing {
    Ising ising;
    double scale = 1.0;
};

/// Uniformly scales h into [-2, 2] and J into [-1, 1]. The offset is
/// scaled by the same factor, so every energy (offset included) is exactly
/// scale times the original and the argmin set is unchanged. Models
/// already in bounds (and all-zero models) pass through with scale 1.
inline NormalizedIsing normalize_to_hardware(const Ising& in) {
    double max_h = 0.0;
    double max_j = 0.0;
    for (double v : in.h) max_h = std::max(max_h, std::abs(v));
    for (const Coupling& c : in.j) max_j = std::max(max_j, std::abs(c.w));
    double scale = 1.0;
    if (max_h > 0.0) scale = std::min(scale, 2.0 / max_h);
    if (max_j > 0.0) scale = std::min(scale, 1.0 / max_j);
    NormalizedIsing out;
    out.scale = scale;
    out.ising = in;
    if (scale != 1.0) {
        for (double& v : out.ising.h) v *= scale;
        for (Coupling& c : out.ising.j) c.w *= scale;
        out.ising.offset *= scale;
    }
    return out;
}

/// QUBO for binary least squares (each variable is itself one qubit):
/// v_j = sum_i A_ij (A_ij - 2 b_i), w_jk = 2 sum_i A_ij A_ik,
/// offset = sum_i b_i^2.
inline Qubo build_binary(const LeastSquaresProblem& p) {
    check_problem(p);
    const int m = p.rows();
    const int n = p.cols();
    Qubo q;
    q.n_qubits = n;
    q.linear.assign(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int i = 0; i < m; ++i) {
            acc += p.a(i, j) * (p.a(i, j) - 2.0 * p.b[static_cast<std::size_t>(i)]);
        }
        q.linear[static_cast<std::size_t>(j)] = acc;
    }
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            double acc = 0.0;
            for (int i = 0; i < m; ++i) acc += p.a(i, j) * p.a(i, k);
            const double w = 2.0 * acc;
            if (w != 0.0) q.quadratic.push_back({j, k, w});
        }
    }
    for (double b : p.b) q.offset += b * b;
    return q;
}

/// QUBO plus the layout its qubit indices refer to.
struct BuiltQubo {
    Qubo qubo;
    QubitLayout layout;
};

/// BuiltQubo plus the preparation-cost tally.
struct CountedBuild {
    Qubo qubo;
    QubitLayout layout;
    FlopCounter flops;
};

namespace detail {

// Shared real-variable builder. Follows the published preparation order:
// precompute 2b, per-slot linear sums, one column-product template per
// variable pair, then weight-pair rescaling. The counter (when present)
// tallies that accounting, phase by phase.
inline void build_real_core(const LeastSquaresProblem& p, const Encoding& e,
                            Qubo& q, QubitLayout& layout, FlopCounter* fc) {
    check_problem(p);
    const int m = p.rows();
    const int n = p.cols();
    layout = make_layout(e, n);
    const std::vector<double> weights = block_weights(e);
    const int qpv = e.qubits_per_var;

    q.n_qubits = layout.total_qubits;
    q.linear.assign(static_cast<std::size_t>(q.n_qubits), 0.0);
    q.quadratic.clear();
    q.offset = 0.0;
    for (double b : p.b) q.offset += b * b;

    std::vector<double> tb(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) tb[static_cast<std::size_t>(i)] = 2.0 * p.b[static_cast<std::size_t>(i)];
    if (fc) fc->linear_prep += static_cast<std::uint64_t>(m);

    for (int j = 0; j < n; ++j) {
        for (int s = 0; s < qpv; ++s) {
            const double sw = weights[static_cast<std::size_t>(s)];
            double acc = 0.0;
            for (int i = 0; i < m; ++i) {
                const double t = sw * p.a(i, j);
                acc += t * (t - tb[static_cast<std::size_t>(i)]);
            }
            q.linear[static_cast<std::size_t>(layout.global_index(j, s))] = acc;
            if (fc) fc->linear_prep += 4u * static_cast<std::uint64_t>(m);
        }
    }

    // Templates 2 sum_i A_ij A_ik for j <= k, then one coupling per
    // distinct slot pair. The scaling tally counts unordered weight
    // products per variable pair, matching the published convention.
    const auto weight_pairs = static_cast<std::uint64_t>(qpv) *
                              static_cast<std::uint64_t>(qpv + 1) / 2u;
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            double acc = 0.0;
            for (int i = 0; i < m; ++i) acc += p.a(i, j) * p.a(i, k);
            const double w0 = 2.0 * acc;
            if (fc) {
                fc->quadratic_template += 2u * static_cast<std::uint64_t>(m) + 1u;
                fc->quadratic_scaling += weight_pairs;
            }
            if (j == k) {
                for (int s = 0; s < qpv; ++s) {
                    for (int t = s + 1; t < qpv; ++t) {
                        const double w = weights[static_cast<std::size_t>(s)] *
                                         weights[static_cast<std::size_t>(t)] * w0;
                        if (w != 0.0) {
                            q.quadratic.push_back(
                                {layout.global_index(j, s), layout.global_index(j, t), w});
                        }
                    }
                }
            } else {
                for (int s = 0; s < qpv; ++s) {
                    for (int t = 0; t < qpv; ++t) {
                        const double w = weights[static_cast<std::size_t>(s)] *
                                         weights[static_cast<std::size_t>(t)] * w0;
                        if (w != 0.0) {
                            q.quadratic.push_back(
                                {layout.global_index(j, s), layout.global_index(k, t), w});
                        }
                    }
                }
            }
        }
    }
    detail::sort_couplings(q.quadratic);
}

}  // namespace detail

/// QUBO over the encoded variables. energy + offset equals the squared
/// residual of the decoded vector, for every assignment.
inline BuiltQubo build_real(const LeastSquaresProblem& p, const Encoding& e) {
    BuiltQubo out;
    detail::build_real_core(p, e, out.qubo, out.layout, nullptr);
    return out;
}

/// build_real with the preparation flop tally. Only complement encodings:
/// the published accounting assumes one sign qubit plus one rail.
inline CountedBuild build_real_counted(const LeastSquaresProblem& p, const Encoding& e) {
    if (e.scheme == Scheme::Basic) {
        throw std::invalid_argument(
            "build_real_counted: cost accounting covers complement encodings only");
    }
    CountedBuild out;
    detail::build_real_core(p, e, out.qubo, out.layout, &out.flops);
    return out;
}

}  // namespace qals
