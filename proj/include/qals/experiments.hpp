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
#include <cstdio>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qals/encoding.hpp"
#include "qals/io.hpp"
#include "qals/problem.hpp"
#include "qals/qubo.hpp"
#include "qals/samplers.hpp"
#include "qals/solvers.hpp"

namespace qals {

/// Seeded residual-comparison run: generate problems, solve classically,
/// encode, anneal, compare. One row per seed, one result per scheme.
struct ExperimentConfig {
    int m = 100;
    int n = 8;
    std::vector<std::uint64_t> seeds{4, 5, 6, 7};
    std::vector<Scheme> schemes{Scheme::OnesComplement, Scheme::Basic};
    int min_exp = -5;
    int max_exp = -2;
    int reads = 1000;
    int sweeps = 1000;
    bool refine = false;      // apply local_refine to the sampled set
    bool auto_theta = false;  // pick exponents from the classical solution
    int round_digits = 3;
    std::string output_path;  // optional JSON destination (CLI concern)
};

inline ExperimentConfig experiment1_defaults() { return ExperimentConfig{}; }

/// Longer variable vector, single-rail scheme only by default.
inline ExperimentConfig experiment2_defaults() {
    ExperimentConfig cfg;
    cfg.n = 12;
    cfg.schemes = {Scheme::OnesComplement};
    return cfg;
}

struct SchemeResult {
    Scheme scheme = Scheme::OnesComplement;
    double residual_encoded = 0.0;   // residual of the decoded best sample
    double best_energy = 0.0;        // sampler best energy, offset excluded
    double energy_plus_offset = 0.0; // equals residual_encoded squared
    bool has_grid = false;           // exhaustive grid fits the 24-qubit guard
    double residual_grid = 0.0;
};

struct ExperimentRow {
    std::uint64_t seed = 0;
    double residual_classical = 0.0;
    std::vector<SchemeResult> schemes;
};

inline void validate_config(const ExperimentConfig& cfg) {
    if (cfg.n < 1 || cfg.m <= cfg.n) {
        throw std::invalid_argument("experiment: need m > n >= 1");
    }
    if (cfg.seeds.empty()) throw std::invalid_argument("experiment: no seeds given");
    if (cfg.schemes.empty()) throw std::invalid_argument("experiment: no schemes given");
    if (cfg.min_exp > cfg.max_exp) {
        throw std::invalid_argument("experiment: min_exp exceeds max_exp");
    }
    if (cfg.reads < 1 || cfg.sweeps < 1) {
        throw std::invalid_argument("experiment: reads and sweeps must be >= 1");
    }
    if (cfg.round_digits < 0) {
        throw std::invalid_argument("experiment: round_digits must be >= 0");
    }
}

/// Heuristic exponent window: keep the configured width, slide it so the
/// top exponent matches the classical solution's largest magnitude. An
/// all-zero solution keeps the configured window.
inline std::pair<int, int> auto_theta_bounds(const std::vector<double>& x, int width,
                                             int fallback_min, int fallback_max) {
    double max_abs = 0.0;
    for (double v : x) max_abs = std::max(max_abs, std::abs(v));
    if (max_abs == 0.0) return {fallback_min, fallback_max};
    const int top = std::ilogb(max_abs);
    return {top - width + 1, top};
}

inline std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    std::vector<ExperimentRow> rows;
    rows.reserve(cfg.seeds.size());
    for (std::uint64_t seed : cfg.seeds) {
        const LeastSquaresProblem p =
            gen_random_problem(cfg.m, cfg.n, seed, cfg.round_digits);
        const ClassicalSolution classical = solve_qr(p);

        ExperimentRow row;
        row.seed = seed;
        row.residual_classical = classical.residual_norm;

        int lo = cfg.min_exp;
        int hi = cfg.max_exp;
        if (cfg.auto_theta) {
            std::tie(lo, hi) = auto_theta_bounds(classical.x, cfg.max_exp - cfg.min_exp + 1,
                                                 cfg.min_exp, cfg.max_exp);
        }

        for (Scheme scheme : cfg.schemes) {
            const Encoding enc = make_encoding(scheme, lo, hi);
            const BuiltQubo built = build_real(p, enc);

            AnnealParams params;
            params.reads = cfg.reads;
            params.sweeps = cfg.sweeps;
            params.seed = seed;
            SampleSet set = simulated_anneal(built.qubo, params);
            if (cfg.refine) set = refine_set(built.qubo, set);
            const Solution best = best_sample(set);

            SchemeResult res;
            res.scheme = scheme;
            res.best_energy = best.energy;
            res.energy_plus_offset = best.energy + built.qubo.offset;
            res.residual_encoded = residual(p, decode(built.layout, best.bits));
            if (built.layout.total_qubits <= 24) {
                res.has_grid = true;
                res.residual_grid = grid_optimum(p, enc).residual;
            }
            row.schemes.push_back(res);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<ExperimentRow> run_experiment1(const ExperimentConfig& cfg) {
    return run_experiment(cfg);
}

inline std::vector<ExperimentRow> run_experiment2(const ExperimentConfig& cfg) {
    return run_experiment(cfg);
}

inline std::string experiment_rows_to_json(const std::vector<ExperimentRow>& rows) {
    std::string out = "[";
    bool first_row = true;
    for (const ExperimentRow& row : rows) {
        if (!first_row) out += ',';
        first_row = false;
        out += "{\"residual_classical\":" + fmt_real(row.residual_classical);
        out += ",\"schemes\":[";
        bool first_scheme = true;
        for (const SchemeResult& s : row.schemes) {
            if (!first_scheme) out += ',';
            first_scheme = false;
            out += "{\"best_energy\":" + fmt_real(s.best_energy);
            out += ",\"energy_plus_offset\":" + fmt_real(s.energy_plus_offset);
            out += ",\"residual_encoded\":" + fmt_real(s.residual_encoded);
            if (s.has_grid) {
                out += ",\"residual_grid_optimum\":" + fmt_real(s.residual_grid);
            }
            out += ",\"scheme\":\"" + scheme_name(s.scheme) + "\"}";
        }
        out += "],\"seed\":" + std::to_string(row.seed) + "}";
    }
    out += ']';
    return out;
}

/// Fixed-width text table, one row per seed; grid columns appear only
/// when the exhaustive guard allowed them.
inline std::string experiment_table(const std::vector<ExperimentRow>& rows) {
    if (rows.empty()) return "(no rows)\n";
    std::vector<std::string> headers{"seed", "residual_classical"};
    for (const SchemeResult& s : rows.front().schemes) {
        headers.push_back("residual_" + scheme_name(s.scheme));
        if (s.has_grid) headers.push_back("grid_" + scheme_name(s.scheme));
    }

    auto fmt_cell = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", v);
        return std::string(buf);
    };
    std::vector<std::vector<std::string>> cells;
    for (const ExperimentRow& row : rows) {
        std::vector<std::string> line{std::to_string(row.seed),
                                      fmt_cell(row.residual_classical)};
        for (const SchemeResult& s : row.schemes) {
            line.push_back(fmt_cell(s.residual_encoded));
            if (s.has_grid) line.push_back(fmt_cell(s.residual_grid));
        }
        cells.push_back(std::move(line));
    }

    std::vector<std::size_t> widths(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        widths[c] = headers[c].size();
        for (const auto& line : cells) widths[c] = std::max(widths[c], line[c].size());
    }
    auto emit_line = [&](const std::vector<std::string>& line) {
        std::string out;
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c) out += "  ";
            out += line[c];
            out.append(widths[c] - line[c].size(), ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        return out + "\n";
    };
    std::string out = emit_line(headers);
    for (const auto& line : cells) out += emit_line(line);
    return out;
}

}  // namespace qals
