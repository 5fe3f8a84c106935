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
// Command-line front end. Exit codes: 0 success, 1 runtime/module error,
// 2 bad flags or subcommand.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qals/qals.hpp"

namespace {

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << '\n';
    } else {
        qals::write_text_file(out_path, content);
    }
}

qals::FileFormat resolve_format(const std::string& format, const std::string& path) {
    if (format == "csv") return qals::FileFormat::Csv;
    if (format == "json") return qals::FileFormat::Json;
    return qals::infer_format(path);
}

struct GenArgs {
    int m = 100;
    int n = 8;
    std::uint64_t seed = 4;
    int round_digits = 3;
    std::string out;
    std::string format = "auto";
};

struct BuildArgs {
    std::string problem;
    std::string scheme = "ones_complement";
    int min_exp = -5;
    int max_exp = -2;
    std::string out;
};

struct SolveArgs {
    std::string qubo;
    std::string sampler = "sa";
    int reads = 1000;
    int sweeps = 1000;
    double inv_temp_start = 0.1;
    double inv_temp_end = 10.0;
    std::uint64_t seed = 0;
    bool refine = false;
    std::string out;
};

struct CostArgs {
    int m = 0;
    int n = 0;
    int c = 5;
    double beta = 2.0;
};

struct BoltzmannArgs {
    std::string qubo;
    double inv_temp = 1.0;
    std::string out;
};

struct ExperimentArgs {
    qals::ExperimentConfig cfg;
    std::vector<std::string> scheme_names;
    bool include_basic = false;
};

void run_gen(const GenArgs& a) {
    const qals::LeastSquaresProblem p =
        qals::gen_random_problem(a.m, a.n, a.seed, a.round_digits);
    const qals::FileFormat fmt = resolve_format(a.format, a.out);
    if (a.out.empty()) {
        emit("", fmt == qals::FileFormat::Csv ? qals::problem_to_csv(p)
                                              : qals::problem_to_json(p));
    } else {
        qals::save_problem(a.out, p, fmt);
    }
}

void run_build(const BuildArgs& a) {
    const qals::LeastSquaresProblem p =
        qals::load_problem(a.problem, qals::infer_format(a.problem));
    const qals::Encoding enc =
        qals::make_encoding(qals::parse_scheme(a.scheme), a.min_exp, a.max_exp);
    const qals::BuiltQubo built = qals::build_real(p, enc);
    emit(a.out, qals::qubo_to_json(built.qubo));
    std::cerr << "built " << built.qubo.n_qubits << "-qubit qubo ("
              << built.layout.n_vars << " variables x " << enc.qubits_per_var
              << " qubits, scheme " << qals::scheme_name(enc.scheme) << ")\n";
}

void run_solve(const SolveArgs& a) {
    const qals::Qubo q = qals::qubo_from_json(qals::read_text_file(a.qubo));
    qals::SampleSet set;
    if (a.sampler == "exhaustive") {
        const qals::Solution best = qals::exhaustive_solve(q);
        set.samples.push_back({best.bits, best.energy, 1});
    } else {
        qals::AnnealParams params;
        params.reads = a.reads;
        params.sweeps = a.sweeps;
        params.inv_temp_start = a.inv_temp_start;
        params.inv_temp_end = a.inv_temp_end;
        params.seed = a.seed;
        set = qals::simulated_anneal(q, params);
    }
    if (a.refine) set = qals::refine_set(q, set);
    emit(a.out, qals::sample_set_to_json(set));
    const qals::Solution best = qals::best_sample(set);
    std::cerr << "best energy " << qals::fmt_real(best.energy) << " (with offset "
              << qals::fmt_real(best.energy + q.offset) << ")\n";
}

void run_cost(const CostArgs& a) {
    const qals::CostReport r = qals::speedup_region(a.m, a.n, a.c, a.beta);
    emit("", qals::cost_report_to_json(r));
    auto line = [](const std::string& k, const std::string& v) {
        std::string out = k;
        out.append(k.size() < 18 ? 18 - k.size() : 1, ' ');
        return out + v + "\n";
    };
    std::string table;
    table += line("method/quantity", "flops/value");
    table += line("normal_equations", qals::fmt_real(r.cost_ne));
    table += line("qr", qals::fmt_real(r.cost_qr));
    table += line("svd", qals::fmt_real(r.cost_svd));
    table += line("qubo_prep", qals::fmt_real(r.cost_qa_prep));
    table += line("delta_ne", qals::fmt_real(r.delta_ne));
    table += line("delta_qa_star", qals::fmt_real(r.delta_qa_star));
    table += line("lambda", qals::fmt_real(r.lambda));
    table += line("lambda_upper", qals::fmt_real(r.lambda_upper));
    table += line("beta_ok", r.beta_ok ? "yes" : "no");
    table += line("speedup_feasible", r.speedup_feasible ? "yes" : "no");
    table += line("tau_star", "poly(c*n) of degree beta=" + qals::fmt_real(a.beta) +
                                  " (reported symbolically, not in totals)");
    std::cerr << table;
}

void run_boltzmann(const BoltzmannArgs& a) {
    const qals::Qubo q = qals::qubo_from_json(qals::read_text_file(a.qubo));
    const qals::BoltzmannTable t = qals::boltzmann_exact(q, a.inv_temp);
    emit(a.out, qals::boltzmann_to_csv(t));
    std::cerr << "partition value " << qals::fmt_real(t.z_prime) << " at inv_temp "
              << qals::fmt_real(t.inv_temp) << "\n";
}

void run_experiment(ExperimentArgs& a) {
    if (!a.scheme_names.empty()) {
        a.cfg.schemes.clear();
        for (const std::string& s : a.scheme_names) {
            a.cfg.schemes.push_back(qals::parse_scheme(s));
        }
    }
    if (a.include_basic) {
        bool present = false;
        for (qals::Scheme s : a.cfg.schemes) present = present || s == qals::Scheme::Basic;
        if (!present) a.cfg.schemes.push_back(qals::Scheme::Basic);
    }
    const std::vector<qals::ExperimentRow> rows = qals::run_experiment(a.cfg);
    std::cout << qals::experiment_table(rows);
    if (!a.cfg.output_path.empty()) {
        qals::write_text_file(a.cfg.output_path, qals::experiment_rows_to_json(rows));
    }
}

void add_experiment_flags(CLI::App* cmd, ExperimentArgs& a, bool allow_schemes) {
    cmd->add_option("--m", a.cfg.m, "Rows of A")->capture_default_str();
    cmd->add_option("--n", a.cfg.n, "Columns of A / length of x")->capture_default_str();
    cmd->add_option("--seeds", a.cfg.seeds, "Problem seeds (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--min-exp", a.cfg.min_exp, "Lowest weight exponent")
        ->capture_default_str();
    cmd->add_option("--max-exp", a.cfg.max_exp, "Highest weight exponent")
        ->capture_default_str();
    cmd->add_option("--reads", a.cfg.reads,
                    "Annealer reads per problem (hardware analogue: sample count)")
        ->capture_default_str();
    cmd->add_option("--sweeps", a.cfg.sweeps,
                    "Sweeps per read (hardware analogue: anneal time)")
        ->capture_default_str();
    cmd->add_flag("--refine", a.cfg.refine, "Greedy single-flip descent on every sample");
    cmd->add_flag("--auto-theta", a.cfg.auto_theta,
                  "Heuristic: slide the exponent window to match the classical "
                  "solution's magnitude (no formal rule backs this)");
    cmd->add_option("--out", a.cfg.output_path, "Write rows as JSON to this path");
    if (allow_schemes) {
        cmd->add_option("--schemes", a.scheme_names,
                        "Encodings to compare (basic, ones_complement, twos_complement)")
            ->delimiter(',');
    } else {
        cmd->add_flag("--include-basic", a.include_basic,
                      "Also run the dual-rail basic encoding (off by default: its "
                      "qubit count doubles)");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qals: least-squares problems as QUBO/Ising models.\n"
        "Builds radix-2 encoded QUBOs, samples them with simulated annealing\n"
        "(standing in for an annealer: sweeps play the role of anneal time,\n"
        "reads the role of hardware samples), and evaluates the flop-count\n"
        "speedup conditions against direct solvers. QALS_THREADS caps worker\n"
        "threads."};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate a seeded random problem file");
    gen->add_option("--m", gen_args.m, "Rows of A")->capture_default_str();
    gen->add_option("--n", gen_args.n, "Columns of A")->capture_default_str();
    gen->add_option("--seed", gen_args.seed, "Generator seed")->capture_default_str();
    gen->add_option("--round-digits", gen_args.round_digits,
                    "Decimal digits entries are rounded to")
        ->capture_default_str();
    gen->add_option("--out", gen_args.out, "Output path (stdout when omitted)");
    gen->add_option("--format", gen_args.format, "csv, json or auto (by extension)")
        ->check(CLI::IsMember({"csv", "json", "auto"}))
        ->capture_default_str();
    gen->callback([&] { run_gen(gen_args); });

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "Encode a problem file as a QUBO");
    build->add_option("--problem", build_args.problem, "Problem file (csv or json)")
        ->required();
    build->add_option("--scheme", build_args.scheme,
                      "basic, ones_complement or twos_complement")
        ->capture_default_str();
    build->add_option("--min-exp", build_args.min_exp, "Lowest weight exponent")
        ->capture_default_str();
    build->add_option("--max-exp", build_args.max_exp, "Highest weight exponent")
        ->capture_default_str();
    build->add_option("--out", build_args.out, "Qubo JSON path (stdout when omitted)");
    build->callback([&] { run_build(build_args); });

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Sample a QUBO file");
    solve->add_option("--qubo", solve_args.qubo, "Qubo JSON path")->required();
    solve->add_option("--sampler", solve_args.sampler, "exhaustive or sa")
        ->check(CLI::IsMember({"exhaustive", "sa"}))
        ->capture_default_str();
    solve->add_option("--reads", solve_args.reads,
                      "Independent annealing runs (hardware analogue: sample count)")
        ->capture_default_str();
    solve->add_option("--sweeps", solve_args.sweeps,
                      "Sweeps per read (hardware analogue: anneal time)")
        ->capture_default_str();
    solve->add_option("--inv-temp-start", solve_args.inv_temp_start,
                      "Initial inverse temperature")
        ->capture_default_str();
    solve->add_option("--inv-temp-end", solve_args.inv_temp_end,
                      "Final inverse temperature")
        ->capture_default_str();
    solve->add_option("--seed", solve_args.seed, "Sampler seed")->capture_default_str();
    solve->add_flag("--refine", solve_args.refine,
                    "Greedy single-flip descent on every sample");
    solve->add_option("--out", solve_args.out, "SampleSet JSON path (stdout when omitted)");
    solve->callback([&] { run_solve(solve_args); });

    CostArgs cost_args;
    auto* cost = app.add_subcommand(
        "cost", "Evaluate the flop-count formulas and the speedup window");
    cost->add_option("--m", cost_args.m, "Rows of A")->required();
    cost->add_option("--n", cost_args.n, "Columns of A")->required();
    cost->add_option("--c", cost_args.c, "Qubits per encoded variable")
        ->capture_default_str();
    cost->add_option("--beta", cost_args.beta, "Conjectured post-processing degree")
        ->capture_default_str();
    cost->callback([&] { run_cost(cost_args); });

    BoltzmannArgs boltzmann_args;
    auto* boltzmann = app.add_subcommand(
        "boltzmann", "Exact Boltzmann probabilities of a small QUBO");
    boltzmann->add_option("--qubo", boltzmann_args.qubo, "Qubo JSON path")->required();
    boltzmann->add_option("--inv-temp", boltzmann_args.inv_temp, "Inverse temperature")
        ->capture_default_str();
    boltzmann->add_option("--out", boltzmann_args.out,
                          "CSV path (stdout when omitted)");
    boltzmann->callback([&] { run_boltzmann(boltzmann_args); });

    ExperimentArgs exp1_args;
    exp1_args.cfg = qals::experiment1_defaults();
    auto* exp1 = app.add_subcommand(
        "experiment1",
        "Residual comparison, classical vs encoded (defaults: m=100 n=8, "
        "one's complement and basic)");
    add_experiment_flags(exp1, exp1_args, true);
    exp1->callback([&] { run_experiment(exp1_args); });

    ExperimentArgs exp2_args;
    exp2_args.cfg = qals::experiment2_defaults();
    auto* exp2 = app.add_subcommand(
        "experiment2",
        "Longer-vector variant (defaults: m=100 n=12, one's complement only)");
    add_experiment_flags(exp2, exp2_args, false);
    exp2->callback([&] { run_experiment(exp2_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
