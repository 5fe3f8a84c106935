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
//
// Reference oracles for the test suite. Everything here is written from
// the definitions, independent of the library's computation paths, so the
// suite can catch systematic errors instead of reproducing them.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qals/qals.hpp"

namespace testutil {

inline qals::LeastSquaresProblem make_problem(
    const std::vector<std::vector<double>>& rows, const std::vector<double>& b) {
    qals::LeastSquaresProblem p;
    const int m = static_cast<int>(rows.size());
    const int n = static_cast<int>(rows.front().size());
    p.a = qals::DenseMatrix(m, n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) p.a(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    p.b = b;
    return p;
}

// Squared residual straight from the definition.
inline double ref_residual_sq(const qals::LeastSquaresProblem& p,
                              const std::vector<double>& x) {
    double sq = 0.0;
    for (int i = 0; i < p.rows(); ++i) {
        double r = 0.0;
        for (int j = 0; j < p.cols(); ++j) {
            r += p.a(i, j) * x[static_cast<std::size_t>(j)];
        }
        r -= p.b[static_cast<std::size_t>(i)];
        sq += r * r;
    }
    return sq;
}

// Block decode from the definition: Basic subtracts the second rail,
// complement schemes add a sign weight of -2^(p+1) (+2^o for one's).
inline double ref_decode_block(qals::Scheme scheme, int o, int p,
                               const std::uint8_t* bits) {
    const int len = p - o + 1;
    double x = 0.0;
    if (scheme == qals::Scheme::Basic) {
        for (int l = 0; l < len; ++l) {
            if (bits[l]) x += std::ldexp(1.0, o + l);
            if (bits[len + l]) x -= std::ldexp(1.0, o + l);
        }
        return x;
    }
    double sign_weight = -std::ldexp(1.0, p + 1);
    if (scheme == qals::Scheme::OnesComplement) sign_weight += std::ldexp(1.0, o);
    if (bits[0]) x += sign_weight;
    for (int l = 0; l < len; ++l) {
        if (bits[1 + l]) x += std::ldexp(1.0, o + l);
    }
    return x == 0.0 ? 0.0 : x;
}

inline std::vector<double> ref_decode(qals::Scheme scheme, int o, int p, int n_vars,
                                      const qals::Assignment& a) {
    const int qpv = scheme == qals::Scheme::Basic ? 2 * (p - o + 1) : p - o + 2;
    std::vector<double> x(static_cast<std::size_t>(n_vars));
    for (int j = 0; j < n_vars; ++j) {
        x[static_cast<std::size_t>(j)] = ref_decode_block(scheme, o, p, a.data() + j * qpv);
    }
    return x;
}

// Objective evaluated term by term from the coefficient lists.
inline double ref_qubo_energy(const qals::Qubo& q, const qals::Assignment& a) {
    double e = 0.0;
    for (int i = 0; i < q.n_qubits; ++i) {
        if (a[static_cast<std::size_t>(i)]) e += q.linear[static_cast<std::size_t>(i)];
    }
    for (const qals::Coupling& c : q.quadratic) {
        if (a[static_cast<std::size_t>(c.a)] && a[static_cast<std::size_t>(c.b)]) e += c.w;
    }
    return e;
}

inline double ref_ising_energy(const qals::Ising& i, const std::vector<int>& spins) {
    double e = 0.0;
    for (int a = 0; a < i.n_spins; ++a) {
        e += i.h[static_cast<std::size_t>(a)] * spins[static_cast<std::size_t>(a)];
    }
    for (const qals::Coupling& c : i.j) {
        e += c.w * spins[static_cast<std::size_t>(c.a)] * spins[static_cast<std::size_t>(c.b)];
    }
    return e;
}

inline qals::Assignment assignment_from_code(std::uint64_t code, int n) {
    qals::Assignment a(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        a[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>((code >> k) & 1u);
    }
    return a;
}

inline std::uint64_t code_of(const qals::Assignment& a) {
    std::uint64_t code = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k]) code |= std::uint64_t{1} << k;
    }
    return code;
}

// Exact minimizer by full enumeration, lexicographic tie-break on bits.
inline qals::Solution brute_force_minimum(const qals::Qubo& q) {
    qals::Solution best;
    best.bits = qals::Assignment(static_cast<std::size_t>(q.n_qubits), 0);
    best.energy = ref_qubo_energy(q, best.bits);
    const std::uint64_t count = std::uint64_t{1} << q.n_qubits;
    for (std::uint64_t code = 1; code < count; ++code) {
        const qals::Assignment a = assignment_from_code(code, q.n_qubits);
        const double e = ref_qubo_energy(q, a);
        if (e < best.energy || (e == best.energy && a < best.bits)) {
            best.energy = e;
            best.bits = a;
        }
    }
    return best;
}

inline qals::LeastSquaresProblem random_problem(std::mt19937_64& rng, int m, int n) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    qals::LeastSquaresProblem p;
    p.a = qals::DenseMatrix(m, n);
    for (double& e : p.a.entries) e = dist(rng);
    p.b.resize(static_cast<std::size_t>(m));
    for (double& e : p.b) e = dist(rng);
    return p;
}

inline qals::Qubo random_qubo(std::mt19937_64& rng, int n, double range = 2.0) {
    std::uniform_real_distribution<double> dist(-range, range);
    qals::Qubo q;
    q.n_qubits = n;
    q.linear.resize(static_cast<std::size_t>(n));
    for (double& v : q.linear) v = dist(rng);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            q.quadratic.push_back({a, b, dist(rng)});
        }
    }
    q.offset = dist(rng);
    return q;
}

inline qals::Ising random_ising(std::mt19937_64& rng, int n, double h_range = 4.0,
                                double j_range = 2.0) {
    std::uniform_real_distribution<double> hd(-h_range, h_range);
    std::uniform_real_distribution<double> jd(-j_range, j_range);
    qals::Ising i;
    i.n_spins = n;
    i.h.resize(static_cast<std::size_t>(n));
    for (double& v : i.h) v = hd(rng);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            i.j.push_back({a, b, jd(rng)});
        }
    }
    i.offset = hd(rng);
    return i;
}

// Codes attaining the minimum reference energy, within a small band.
inline std::vector<std::uint64_t> ising_argmin_set(const qals::Ising& ising) {
    const std::uint64_t count = std::uint64_t{1} << ising.n_spins;
    std::vector<double> energies(count);
    double min_e = 0.0;
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<int> spins(static_cast<std::size_t>(ising.n_spins));
        for (int k = 0; k < ising.n_spins; ++k) {
            spins[static_cast<std::size_t>(k)] = ((code >> k) & 1u) ? 1 : -1;
        }
        energies[code] = ref_ising_energy(ising, spins);
        if (code == 0 || energies[code] < min_e) min_e = energies[code];
    }
    std::vector<std::uint64_t> set;
    const double band = 1e-9 * (1.0 + std::abs(min_e));
    for (std::uint64_t code = 0; code < count; ++code) {
        if (energies[code] <= min_e + band) set.push_back(code);
    }
    return set;
}

}  // namespace testutil
