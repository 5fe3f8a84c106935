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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qals {

/// Inputs to the flop-count comparison. anneal_time and reads describe
/// the sampling budget (their product is the execution time tau); the
/// conjectured post-processing polynomial enters only through its degree.
struct CostModelParams {
    int m = 0;
    int n = 0;
    int c = 2;            // qubits per encoded variable (sign + rail)
    double beta = 2.0;    // conjectured post-processing degree
    double anneal_time = 0.0;  // seconds per read, 0 when unset
    int reads = 0;             // 0 when unset

    double tau() const { return anneal_time * reads; }
};

/// Evaluated cost formulas plus the speedup-window verdict.
struct CostReport {
    double cost_ne = 0.0;
    double cost_qr = 0.0;
    double cost_svd = 0.0;
    double cost_qa_prep = 0.0;
    double delta_ne = 0.0;
    double delta_qa_star = 0.0;
    double lambda = 0.0;        // aspect ratio m/n
    double lambda_upper = 0.0;  // n / (3(4c+1))
    bool beta_ok = false;
    bool speedup_feasible = false;
};

namespace detail {

inline void check_dims(int m, int n) {
    if (n < 1 || m <= n) {
        throw std::invalid_argument("cost model: need m > n >= 1 (got m=" +
                                    std::to_string(m) + ", n=" + std::to_string(n) + ")");
    }
}

inline void check_qubits(int c) {
    if (c < 2) {
        throw std::invalid_argument("cost model: need c >= 2 (got c=" +
                                    std::to_string(c) + ")");
    }
}

}  // namespace detail

/// Flop counts of the direct dense solvers (unpivoted textbook variants).
struct ClassicalCosts {
    double ne = 0.0;   // normal equations via Cholesky: mn^2 + n^3/3
    double qr = 0.0;   // Householder QR: 2mn^2 - 2n^3/3
    double svd = 0.0;  // Golub-Reinsch SVD: 2mn^2 + 11n^3
};

inline ClassicalCosts cost_classical(int m, int n) {
    detail::check_dims(m, n);
    const double dm = m;
    const double dn = n;
    ClassicalCosts c;
    c.ne = dm * dn * dn + dn * dn * dn / 3.0;
    c.qr = 2.0 * dm * dn * dn - 2.0 * dn * dn * dn / 3.0;
    c.svd = 2.0 * dm * dn * dn + 11.0 * dn * dn * dn;
    return c;
}

/// Flops to prepare the QUBO: mn^2 + mn(4c+1) + 0.25(n^2+n)(c^2+c+2) + m.
/// Every term is an integer ((n^2+n) and (c^2+c+2) are both even), so the
/// value is exact and must equal build_real_counted's tally.
inline std::uint64_t cost_qa_prep(int m, int n, int c) {
    detail::check_dims(m, n);
    detail::check_qubits(c);
    const auto um = static_cast<std::uint64_t>(m);
    const auto un = static_cast<std::uint64_t>(n);
    const auto uc = static_cast<std::uint64_t>(c);
    const std::uint64_t var_pairs = un * (un + 1) / 2;       // (n^2+n)/2
    const std::uint64_t weight_terms = (uc * uc + uc + 2) / 2;  // (c^2+c+2)/2
    return um * un * un + um * un * (4 * uc + 1) + var_pairs * weight_terms + um;
}

/// Leading-order cost differences once the shared mn^2 term cancels.
struct DeltaCosts {
    double delta_ne = 0.0;       // n^3/3
    double delta_qa_star = 0.0;  // (4c+1)mn
};

inline DeltaCosts delta_costs(int m, int n, int c) {
    detail::check_dims(m, n);
    detail::check_qubits(c);
    const double dn = n;
    DeltaCosts d;
    d.delta_ne = dn * dn * dn / 3.0;
    d.delta_qa_star = (4.0 * c + 1.0) * m * n;
    return d;
}

/// Full report. The annealing route can beat normal equations only inside
/// the window 1 < m/n < n/(3(4c+1)) with the post-processing degree
/// strictly between 0 and 3; the window is empty unless its upper bound
/// exceeds 1.
inline CostReport speedup_region(int m, int n, int c, double beta) {
    detail::check_dims(m, n);
    detail::check_qubits(c);
    CostReport r;
    const ClassicalCosts cc = cost_classical(m, n);
    r.cost_ne = cc.ne;
    r.cost_qr = cc.qr;
    r.cost_svd = cc.svd;
    r.cost_qa_prep = static_cast<double>(cost_qa_prep(m, n, c));
    const DeltaCosts d = delta_costs(m, n, c);
    r.delta_ne = d.delta_ne;
    r.delta_qa_star = d.delta_qa_star;
    r.lambda = static_cast<double>(m) / n;
    r.lambda_upper = n / (3.0 * (4.0 * c + 1.0));
    r.beta_ok = beta > 0.0 && beta < 3.0;
    r.speedup_feasible = r.beta_ok && r.lambda_upper > 1.0 && r.lambda > 1.0 &&
                         r.lambda < r.lambda_upper;
    return r;
}

}  // namespace qals
