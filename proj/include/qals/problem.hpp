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

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qals/rng.hpp"

namespace qals {

/// Dense real matrix, row-major storage.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> entries;

    DenseMatrix() = default;
    DenseMatrix(int r, int c)
        : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0.0) {}

    double operator()(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }
    double& operator()(int i, int j) {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }
};

/// Overdetermined linear least squares instance: minimize ||A x - b|| over
/// x in R^n, with A of size m x n, m > n.
struct LeastSquaresProblem {
    DenseMatrix a;
    std::vector<double> b;

    int rows() const { return a.rows; }
    int cols() const { return a.cols; }
};

/// Throws std::invalid_argument unless the instance satisfies m > n,
/// matching dimensions, and finite entries.
inline void check_problem(const LeastSquaresProblem& p) {
    if (p.a.rows <= p.a.cols) {
        throw std::invalid_argument("m must exceed n (got m=" +
                                    std::to_string(p.a.rows) +
                                    ", n=" + std::to_string(p.a.cols) + ")");
    }
    if (p.a.cols < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    if (p.a.entries.size() !=
        static_cast<std::size_t>(p.a.rows) * p.a.cols) {
        throw std::invalid_argument("matrix storage does not match m x n");
    }
    if (p.b.size() != static_cast<std::size_t>(p.a.rows)) {
        throw std::invalid_argument("b has length " +
                                    std::to_string(p.b.size()) +
                                    ", expected m=" + std::to_string(p.a.rows));
    }
    for (double v : p.a.entries) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite matrix entry");
    }
    for (double v : p.b) {
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite entry in b");
    }
}

/// ||A x - b||_2 (the 2-norm itself, not its square).
inline double residual(const LeastSquaresProblem& p, const std::vector<double>& x) {
    if (x.size() != static_cast<std::size_t>(p.cols())) {
        throw std::invalid_argument("residual: x has length " +
                                    std::to_string(x.size()) +
                                    ", expected n=" + std::to_string(p.cols()));
    }
    double sq = 0.0;
    for (int i = 0; i < p.rows(); ++i) {
        double r = -p.b[i];
        for (int j = 0; j < p.cols(); ++j) r += p.a(i, j) * x[j];
        sq += r * r;
    }
    return std::sqrt(sq);
}

/// Round to `digits` decimal digits, halves away from zero.
inline double round_decimals(double v, int digits) {
    const double scale = std::pow(10.0, digits);
    return std::round(v * scale) / scale;
}

/// Deterministic random instance: entries of A (row-major order, row by
/// row) and then b are drawn uniformly from [0, 1) off one SplitMix64
/// stream seeded with `seed`, and each entry is rounded to `round_digits`
/// decimals. A pure function of (m, n, seed, round_digits).
inline LeastSquaresProblem gen_random_problem(int m, int n, std::uint64_t seed,
                                              int round_digits) {
    if (m <= n) {
        throw std::invalid_argument("m must exceed n (got m=" + std::to_string(m) +
                                    ", n=" + std::to_string(n) + ")");
    }
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (round_digits < 0) throw std::invalid_argument("round_digits must be >= 0");

    SplitMix64 rng(seed);
    LeastSquaresProblem p;
    p.a = DenseMatrix(m, n);
    for (double& e : p.a.entries) e = round_decimals(rng.next_double(), round_digits);
    p.b.resize(m);
    for (double& e : p.b) e = round_decimals(rng.next_double(), round_digits);
    return p;
}

}  // namespace qals
