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
#include <stdexcept>
#include <string>
#include <vector>

#include "qals/problem.hpp"

namespace qals {

enum class SolveMethod { NormalEquations, QR };

struct ClassicalSolution {
    std::vector<double> x;
    double residual_norm = 0.0;
    SolveMethod method = SolveMethod::QR;
};

namespace detail {

// Relative pivot / diagonal threshold below which a factorization is
// treated as rank-deficient.
inline constexpr double kRankTol = 1e-12;

}  // namespace detail

/// Solves A^T A x = A^T b by an unpivoted Cholesky factorization of A^T A.
/// Throws std::runtime_error on a non-positive (or negligible) pivot, which
/// signals rank deficiency of A.
inline ClassicalSolution solve_normal_equations(const LeastSquaresProblem& p) {
    check_problem(p);
    const int m = p.rows();
    const int n = p.cols();

    // Gram matrix and right-hand side.
    DenseMatrix g(n, n);
    std::vector<double> rhs(n, 0.0);
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            double s = 0.0;
            for (int i = 0; i < m; ++i) s += p.a(i, j) * p.a(i, k);
            g(j, k) = s;
            g(k, j) = s;
        }
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += p.a(i, j) * p.b[i];
        rhs[j] = s;
    }

    double max_diag = 0.0;
    for (int j = 0; j < n; ++j) max_diag = std::max(max_diag, g(j, j));

    // In-place lower Cholesky factor.
    DenseMatrix l(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k <= j; ++k) {
            double s = g(j, k);
            for (int t = 0; t < k; ++t) s -= l(j, t) * l(k, t);
            if (k == j) {
                if (s <= detail::kRankTol * max_diag) {
                    throw std::runtime_error(
                        "normal equations: non-positive pivot at column " +
                        std::to_string(j) + " (A rank-deficient?)");
                }
                l(j, j) = std::sqrt(s);
            } else {
                l(j, k) = s / l(k, k);
            }
        }
    }

    // Forward then backward substitution.
    std::vector<double> y(n);
    for (int j = 0; j < n; ++j) {
        double s = rhs[j];
        for (int t = 0; t < j; ++t) s -= l(j, t) * y[t];
        y[j] = s / l(j, j);
    }
    ClassicalSolution sol;
    sol.method = SolveMethod::NormalEquations;
    sol.x.assign(n, 0.0);
    for (int j = n - 1; j >= 0; --j) {
        double s = y[j];
        for (int t = j + 1; t < n; ++t) s -= l(t, j) * sol.x[t];
        sol.x[j] = s / l(j, j);
    }
    sol.residual_norm = residual(p, sol.x);
    return sol;
}

/// Householder QR followed by back substitution. Throws std::runtime_error
/// when a reflection column has zero norm or the triangular factor has a
/// negligible diagonal (rank deficiency).
inline ClassicalSolution solve_qr(const LeastSquaresProblem& p) {
    check_problem(p);
    const int m = p.rows();
    const int n = p.cols();

    DenseMatrix r = p.a;          // reduced in place
    std::vector<double> qtb = p.b;
    std::vector<double> v(m);

    double fro = 0.0;
    for (double e : p.a.entries) fro += e * e;
    fro = std::sqrt(fro);

    for (int k = 0; k < n; ++k) {
        double norm_sq = 0.0;
        for (int i = k; i < m; ++i) norm_sq += r(i, k) * r(i, k);
        const double norm_x = std::sqrt(norm_sq);
        if (norm_x == 0.0) {
            throw std::runtime_error("qr: column " + std::to_string(k) +
                                     " has zero norm (A rank-deficient)");
        }
        const double alpha = r(k, k) > 0.0 ? -norm_x : norm_x;
        double vtv = 0.0;
        v[k] = r(k, k) - alpha;
        vtv += v[k] * v[k];
        for (int i = k + 1; i < m; ++i) {
            v[i] = r(i, k);
            vtv += v[i] * v[i];
        }
        r(k, k) = alpha;
        for (int i = k + 1; i < m; ++i) r(i, k) = 0.0;
        if (vtv == 0.0) continue;  // column already triangular

        for (int j = k + 1; j < n; ++j) {
            double dot = 0.0;
            for (int i = k; i < m; ++i) dot += v[i] * r(i, j);
            const double f = 2.0 * dot / vtv;
            for (int i = k; i < m; ++i) r(i, j) -= f * v[i];
        }
        double dot = 0.0;
        for (int i = k; i < m; ++i) dot += v[i] * qtb[i];
        const double f = 2.0 * dot / vtv;
        for (int i = k; i < m; ++i) qtb[i] -= f * v[i];
    }

    ClassicalSolution sol;
    sol.method = SolveMethod::QR;
    sol.x.assign(n, 0.0);
    for (int k = n - 1; k >= 0; --k) {
        if (std::abs(r(k, k)) <= detail::kRankTol * fro) {
            throw std::runtime_error("qr: negligible diagonal at column " +
                                     std::to_string(k) + " (A rank-deficient)");
        }
        double s = qtb[k];
        for (int t = k + 1; t < n; ++t) s -= r(k, t) * sol.x[t];
        sol.x[k] = s / r(k, k);
    }
    sol.residual_norm = residual(p, sol.x);
    return sol;
}

}  // namespace qals
