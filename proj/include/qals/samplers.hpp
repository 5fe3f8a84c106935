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
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qals/encoding.hpp"
#include "qals/parallel.hpp"
#include "qals/qubo.hpp"
#include "qals/rng.hpp"

namespace qals {

/// Simulated-annealing schedule. Each read is an independent Metropolis
/// chain whose inverse temperature follows a geometric ladder from
/// inv_temp_start to inv_temp_end over the given number of sweeps.
struct AnnealParams {
    int reads = 1000;
    int sweeps = 1000;
    double inv_temp_start = 0.1;
    double inv_temp_end = 10.0;
    std::uint64_t seed = 0;
};

inline void check_params(const AnnealParams& p) {
    if (p.reads < 1) throw std::invalid_argument("anneal: reads must be >= 1");
    if (p.sweeps < 1) throw std::invalid_argument("anneal: sweeps must be >= 1");
    if (!(p.inv_temp_start > 0.0) || !(p.inv_temp_start <= p.inv_temp_end)) {
        throw std::invalid_argument("anneal: need 0 < inv_temp_start <= inv_temp_end");
    }
}

struct Sample {
    Assignment bits;
    double energy = 0.0;
    std::uint64_t multiplicity = 1;
};

/// Aggregated sampler output, sorted by (energy, bits); identical
/// assignments are merged into one entry with summed multiplicity.
struct SampleSet {
    std::vector<Sample> samples;
};

/// A single assignment with its (offset-free) energy.
struct Solution {
    Assignment bits;
    double energy = 0.0;
};

namespace detail {

// Neighbour list: adj[a] holds (b, w_ab) for every coupling touching a.
inline std::vector<std::vector<std::pair<int, double>>> adjacency(const Qubo& q) {
    std::vector<std::vector<std::pair<int, double>>> adj(
        static_cast<std::size_t>(q.n_qubits));
    for (const Coupling& c : q.quadratic) {
        adj[static_cast<std::size_t>(c.a)].push_back({c.b, c.w});
        adj[static_cast<std::size_t>(c.b)].push_back({c.a, c.w});
    }
    return adj;
}

// Local fields f_a = v_a + sum_b(w_ab q_b); flipping bit a changes the
// energy by +f_a (0 to 1) or -f_a (1 to 0).
inline std::vector<double> local_fields(
    const Qubo& q, const std::vector<std::vector<std::pair<int, double>>>& adj,
    const Assignment& bits) {
    std::vector<double> f(q.linear);
    for (int a = 0; a < q.n_qubits; ++a) {
        for (const auto& [b, w] : adj[static_cast<std::size_t>(a)]) {
            if (bits[static_cast<std::size_t>(b)]) f[static_cast<std::size_t>(a)] += w;
        }
    }
    return f;
}

inline void apply_flip(std::vector<double>& f,
                       const std::vector<std::vector<std::pair<int, double>>>& adj,
                       Assignment& bits, int g) {
    auto& bit = bits[static_cast<std::size_t>(g)];
    bit ^= 1u;
    const double sign = bit ? 1.0 : -1.0;
    for (const auto& [b, w] : adj[static_cast<std::size_t>(g)]) {
        f[static_cast<std::size_t>(b)] += sign * w;
    }
}

}  // namespace detail

/// Exact ground state by Gray-order enumeration with incremental energy
/// bookkeeping; candidate minima are re-evaluated from scratch so drift
/// cannot corrupt the result. Ties break toward the lexicographically
/// smallest bit pattern. Guarded to at most 24 qubits.
inline Solution exhaustive_solve(const Qubo& q) {
    if (q.n_qubits < 1) throw std::invalid_argument("exhaustive_solve: empty qubo");
    if (q.n_qubits > 24) {
        throw std::invalid_argument("exhaustive_solve: " + std::to_string(q.n_qubits) +
                                    " qubits exceed the 24-qubit guard");
    }
    const auto adj = detail::adjacency(q);
    Assignment bits(static_cast<std::size_t>(q.n_qubits), 0);
    std::vector<double> f = detail::local_fields(q, adj, bits);
    double e = 0.0;

    double best_e = 0.0;  // all-zeros energy
    Assignment best_bits = bits;

    const std::uint64_t count = std::uint64_t{1} << q.n_qubits;
    for (std::uint64_t u = 1; u < count; ++u) {
        const int g = std::countr_zero(u);  // Gray code: bit flipped at step u
        e += bits[static_cast<std::size_t>(g)] ? -f[static_cast<std::size_t>(g)]
                                               : f[static_cast<std::size_t>(g)];
        detail::apply_flip(f, adj, bits, g);
        if ((u & 0xFFFFu) == 0u) {
            e = energy(q, bits);
            f = detail::local_fields(q, adj, bits);
        }
        if (e <= best_e + 1e-9 * (1.0 + std::abs(best_e))) {
            const double exact = energy(q, bits);
            if (exact < best_e || (exact == best_e && bits < best_bits)) {
                best_e = exact;
                best_bits = bits;
            }
        }
    }
    return {std::move(best_bits), best_e};
}

/// Metropolis single-bit-flip annealer. Read k draws from a private
/// SplitMix64 stream seeded with seed xor k, so a run with more reads
/// extends a run with fewer. Each sweep proposes one flip per qubit in a
/// freshly shuffled order; final energies are recomputed from scratch.
inline SampleSet simulated_anneal(const Qubo& q, const AnnealParams& params) {
    check_params(params);
    if (q.n_qubits < 1) throw std::invalid_argument("simulated_anneal: empty qubo");
    const auto adj = detail::adjacency(q);
    const int n = q.n_qubits;

    std::vector<double> ladder(static_cast<std::size_t>(params.sweeps));
    if (params.sweeps == 1) {
        ladder[0] = params.inv_temp_end;
    } else {
        const double ratio = std::pow(params.inv_temp_end / params.inv_temp_start,
                                      1.0 / (params.sweeps - 1));
        double beta = params.inv_temp_start;
        for (int t = 0; t < params.sweeps; ++t) {
            ladder[static_cast<std::size_t>(t)] = beta;
            beta *= ratio;
        }
    }

    std::vector<Sample> finals(static_cast<std::size_t>(params.reads));
    parallel_for(params.reads, [&](int k) {
        SplitMix64 rng(params.seed ^ static_cast<std::uint64_t>(k));
        Assignment bits(static_cast<std::size_t>(n));
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_u64() & 1u);
        std::vector<double> f = detail::local_fields(q, adj, bits);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);

        for (double beta : ladder) {
            shuffle(order, rng);
            for (int g : order) {
                const double delta = bits[static_cast<std::size_t>(g)]
                                         ? -f[static_cast<std::size_t>(g)]
                                         : f[static_cast<std::size_t>(g)];
                if (delta <= 0.0 || rng.next_double() < std::exp(-beta * delta)) {
                    detail::apply_flip(f, adj, bits, g);
                }
            }
        }
        auto& out = finals[static_cast<std::size_t>(k)];
        out.energy = energy(q, bits);
        out.bits = std::move(bits);
        out.multiplicity = 1;
    });

    std::sort(finals.begin(), finals.end(), [](const Sample& l, const Sample& r) {
        return l.energy != r.energy ? l.energy < r.energy : l.bits < r.bits;
    });
    SampleSet set;
    for (Sample& s : finals) {
        if (!set.samples.empty() && set.samples.back().bits == s.bits) {
            set.samples.back().multiplicity += 1;
        } else {
            set.samples.push_back(std::move(s));
        }
    }
    return set;
}

/// Exact Boltzmann weights over every assignment of a small QUBO.
/// probabilities[code] is the probability of the assignment whose qubit k
/// holds bit k of code.
struct BoltzmannTable {
    int n_qubits = 0;
    double inv_temp = 1.0;
    double z_prime = 0.0;
    std::vector<double> probabilities;
};

/// P(a) proportional to exp(-inv_temp * energy(a)); the offset cancels in
/// the ratio. Exponentials are shifted by the minimum energy, so the
/// probabilities stay finite for any inv_temp. Guarded to 20 qubits.
inline BoltzmannTable boltzmann_exact(const Qubo& q, double inv_temp) {
    if (q.n_qubits < 1) throw std::invalid_argument("boltzmann_exact: empty qubo");
    if (q.n_qubits > 20) {
        throw std::invalid_argument("boltzmann_exact: " + std::to_string(q.n_qubits) +
                                    " qubits exceed the 20-qubit guard");
    }
    if (!(inv_temp > 0.0)) {
        throw std::invalid_argument("boltzmann_exact: inv_temp must be positive");
    }
    const auto adj = detail::adjacency(q);
    const std::uint64_t count = std::uint64_t{1} << q.n_qubits;
    std::vector<double> energies(count, 0.0);

    Assignment bits(static_cast<std::size_t>(q.n_qubits), 0);
    std::vector<double> f = detail::local_fields(q, adj, bits);
    double e = 0.0;
    std::uint64_t code = 0;  // integer whose bit k mirrors bits[k]
    for (std::uint64_t u = 1; u < count; ++u) {
        const int g = std::countr_zero(u);
        e += bits[static_cast<std::size_t>(g)] ? -f[static_cast<std::size_t>(g)]
                                               : f[static_cast<std::size_t>(g)];
        detail::apply_flip(f, adj, bits, g);
        code ^= std::uint64_t{1} << g;
        if ((u & 0xFFFu) == 0u) {
            e = energy(q, bits);
            f = detail::local_fields(q, adj, bits);
        }
        energies[code] = e;
    }

    const double e_min = *std::min_element(energies.begin(), energies.end());
    BoltzmannTable table;
    table.n_qubits = q.n_qubits;
    table.inv_temp = inv_temp;
    table.probabilities.resize(count);
    long double sum = 0.0L;
    for (std::uint64_t a = 0; a < count; ++a) {
        const double w = std::exp(-inv_temp * (energies[a] - e_min));
        table.probabilities[a] = w;
        sum += w;
    }
    const auto norm = static_cast<double>(sum);
    for (double& p : table.probabilities) p /= norm;
    table.z_prime = norm * std::exp(-inv_temp * e_min);
    return table;
}

/// Total Boltzmann probability of the assignments decoding to x_target.
/// Decoded values are exact, so the comparison is componentwise equality;
/// redundant patterns (Basic rails, one's-complement zero) aggregate.
inline double ground_mass(const Qubo& q, const QubitLayout& layout,
                          const std::vector<double>& x_target, double inv_temp) {
    if (layout.total_qubits != q.n_qubits) {
        throw std::invalid_argument("ground_mass: layout does not match qubo");
    }
    if (static_cast<int>(x_target.size()) != layout.n_vars) {
        throw std::invalid_argument("ground_mass: target length mismatch");
    }
    const BoltzmannTable table = boltzmann_exact(q, inv_temp);
    const std::uint64_t count = std::uint64_t{1} << q.n_qubits;
    Assignment bits(static_cast<std::size_t>(q.n_qubits));
    double mass = 0.0;
    for (std::uint64_t code = 0; code < count; ++code) {
        for (int k = 0; k < q.n_qubits; ++k) {
            bits[static_cast<std::size_t>(k)] =
                static_cast<std::uint8_t>((code >> k) & 1u);
        }
        const std::vector<double> x = decode(layout, bits);
        if (std::equal(x.begin(), x.end(), x_target.begin())) {
            mass += table.probabilities[code];
        }
    }
    return mass;
}

/// Greedy best-improvement single-flip descent; among equally good flips
/// the lowest qubit index wins, so the result is deterministic. Stops at
/// the first single-flip local minimum.
inline Assignment local_refine(const Qubo& q, const Assignment& a) {
    if (static_cast<int>(a.size()) != q.n_qubits) {
        throw std::invalid_argument("local_refine: assignment length mismatch");
    }
    const auto adj = detail::adjacency(q);
    Assignment bits = a;
    std::vector<double> f = detail::local_fields(q, adj, bits);
    for (;;) {
        int best_g = -1;
        double best_delta = 0.0;
        for (int g = 0; g < q.n_qubits; ++g) {
            const double delta = bits[static_cast<std::size_t>(g)]
                                     ? -f[static_cast<std::size_t>(g)]
                                     : f[static_cast<std::size_t>(g)];
            if (delta < best_delta) {
                best_delta = delta;
                best_g = g;
            }
        }
        if (best_g < 0) break;
        detail::apply_flip(f, adj, bits, best_g);
    }
    return bits;
}

/// Applies local_refine to every entry, re-aggregating descents that meet
/// in the same assignment. Multiplicities are preserved through the merge.
inline SampleSet refine_set(const Qubo& q, const SampleSet& in) {
    std::vector<Sample> refined;
    refined.reserve(in.samples.size());
    for (const Sample& s : in.samples) {
        Sample r;
        r.bits = local_refine(q, s.bits);
        r.energy = energy(q, r.bits);
        r.multiplicity = s.multiplicity;
        refined.push_back(std::move(r));
    }
    std::sort(refined.begin(), refined.end(), [](const Sample& l, const Sample& r) {
        return l.energy != r.energy ? l.energy < r.energy : l.bits < r.bits;
    });
    SampleSet out;
    for (Sample& s : refined) {
        if (!out.samples.empty() && out.samples.back().bits == s.bits) {
            out.samples.back().multiplicity += s.multiplicity;
        } else {
            out.samples.push_back(std::move(s));
        }
    }
    return out;
}

/// Lowest-energy entry; the canonical sort makes this the first sample.
inline Solution best_sample(const SampleSet& s) {
    if (s.samples.empty()) throw std::invalid_argument("best_sample: empty sample set");
    const Sample& first = s.samples.front();
    return {first.bits, first.energy};
}

}  // namespace qals
