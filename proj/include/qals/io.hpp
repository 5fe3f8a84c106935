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
// File formats. Emission is hand-rolled so artifacts are canonical:
// object keys in alphabetical order, no whitespace, reals printed with 17
// significant digits (round-trip exact). Parsing goes through nlohmann
// json for JSON and a small tokenizer for CSV.

#pragma once

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qals/cost_model.hpp"
#include "qals/encoding.hpp"
#include "qals/problem.hpp"
#include "qals/qubo.hpp"
#include "qals/samplers.hpp"

namespace qals {

/// Canonical real formatting: shortest form with 17 significant digits.
inline std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (content.empty() || content.back() != '\n') out << '\n';
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

enum class FileFormat { Csv, Json };

inline FileFormat infer_format(const std::string& path) {
    const auto dot = path.rfind('.');
    if (dot != std::string::npos && path.substr(dot) == ".csv") return FileFormat::Csv;
    return FileFormat::Json;
}

namespace detail {

inline double parse_real_token(const std::string& token, const std::string& where) {
    std::size_t lo = 0;
    std::size_t hi = token.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(token[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(token[hi - 1]))) --hi;
    double v = 0.0;
    const auto [end, ec] = std::from_chars(token.data() + lo, token.data() + hi, v);
    if (ec != std::errc{} || end != token.data() + hi || lo == hi) {
        throw std::runtime_error("bad numeric token '" + token.substr(lo, hi - lo) +
                                 "' at " + where);
    }
    return v;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------
// Least-squares problems. CSV: line 1 holds "m n", then m comma-separated
// rows of A, then m lines holding one b entry each. JSON mirrors the same
// fields.
// ---------------------------------------------------------------------

inline std::string problem_to_csv(const LeastSquaresProblem& p) {
    std::string out = std::to_string(p.rows()) + " " + std::to_string(p.cols()) + "\n";
    for (int i = 0; i < p.rows(); ++i) {
        for (int j = 0; j < p.cols(); ++j) {
            if (j) out += ',';
            out += fmt_real(p.a(i, j));
        }
        out += '\n';
    }
    for (int i = 0; i < p.rows(); ++i) {
        out += fmt_real(p.b[static_cast<std::size_t>(i)]);
        out += '\n';
    }
    return out;
}

inline LeastSquaresProblem problem_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
    std::istringstream header(line);
    int m = 0;
    int n = 0;
    if (!(header >> m >> n)) throw std::runtime_error("csv: header must be 'm n'");

    LeastSquaresProblem p;
    p.a = DenseMatrix(m, n);
    p.b.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!std::getline(in, line)) {
            throw std::runtime_error("csv: missing A row " + std::to_string(i + 1));
        }
        std::istringstream row(line);
        std::string token;
        for (int j = 0; j < n; ++j) {
            if (!std::getline(row, token, ',')) {
                throw std::runtime_error("csv: A row " + std::to_string(i + 1) + " has " +
                                         std::to_string(j) + " entries, expected " +
                                         std::to_string(n));
            }
            p.a(i, j) = detail::parse_real_token(
                token, "A row " + std::to_string(i + 1) + ", column " + std::to_string(j + 1));
        }
        if (std::getline(row, token, ',')) {
            throw std::runtime_error("csv: A row " + std::to_string(i + 1) +
                                     " has more than " + std::to_string(n) + " entries");
        }
    }
    for (int i = 0; i < m; ++i) {
        if (!std::getline(in, line)) {
            throw std::runtime_error("csv: missing b entry " + std::to_string(i + 1));
        }
        p.b[static_cast<std::size_t>(i)] =
            detail::parse_real_token(line, "b entry " + std::to_string(i + 1));
    }
    check_problem(p);
    return p;
}

inline std::string problem_to_json(const LeastSquaresProblem& p) {
    std::string out = "{\"a\":[";
    for (int i = 0; i < p.rows(); ++i) {
        if (i) out += ',';
        out += '[';
        for (int j = 0; j < p.cols(); ++j) {
            if (j) out += ',';
            out += fmt_real(p.a(i, j));
        }
        out += ']';
    }
    out += "],\"b\":[";
    for (int i = 0; i < p.rows(); ++i) {
        if (i) out += ',';
        out += fmt_real(p.b[static_cast<std::size_t>(i)]);
    }
    out += "],\"m\":" + std::to_string(p.rows());
    out += ",\"n\":" + std::to_string(p.cols());
    out += '}';
    return out;
}

inline LeastSquaresProblem problem_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    if (m < 1 || n < 1) throw std::runtime_error("json: m and n must be positive");
    const auto& a = j.at("a");
    if (!a.is_array() || static_cast<int>(a.size()) != m) {
        throw std::runtime_error("json: 'a' must hold m rows");
    }
    LeastSquaresProblem p;
    p.a = DenseMatrix(m, n);
    for (int i = 0; i < m; ++i) {
        const auto& row = a.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw std::runtime_error("json: A row " + std::to_string(i + 1) +
                                     " must hold n entries");
        }
        for (int jj = 0; jj < n; ++jj) {
            p.a(i, jj) = row.at(static_cast<std::size_t>(jj)).get<double>();
        }
    }
    const auto& b = j.at("b");
    if (!b.is_array() || static_cast<int>(b.size()) != m) {
        throw std::runtime_error("json: 'b' must hold m entries");
    }
    p.b.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        p.b[static_cast<std::size_t>(i)] = b.at(static_cast<std::size_t>(i)).get<double>();
    }
    check_problem(p);
    return p;
}

inline LeastSquaresProblem load_problem(const std::string& path, FileFormat fmt) {
    const std::string text = read_text_file(path);
    return fmt == FileFormat::Csv ? problem_from_csv(text) : problem_from_json(text);
}

inline void save_problem(const std::string& path, const LeastSquaresProblem& p,
                         FileFormat fmt) {
    write_text_file(path, fmt == FileFormat::Csv ? problem_to_csv(p) : problem_to_json(p));
}

// ---------------------------------------------------------------------
// Qubo / Ising. Shared shape: {"linear":[[i,v]...],"n":N,"offset":O,
// "quadratic":[[a,b,w]...]} with linear in index order and quadratic in
// (a, b) order.
// ---------------------------------------------------------------------

namespace detail {

inline std::string coeffs_to_json(int n, const std::vector<double>& linear,
                                  const std::vector<Coupling>& quadratic, double offset) {
    std::vector<Coupling> sorted = quadratic;
    sort_couplings(sorted);
    std::string out = "{\"linear\":[";
    for (int i = 0; i < n; ++i) {
        if (i) out += ',';
        out += '[' + std::to_string(i) + ',' + fmt_real(linear[static_cast<std::size_t>(i)]) + ']';
    }
    out += "],\"n\":" + std::to_string(n);
    out += ",\"offset\":" + fmt_real(offset);
    out += ",\"quadratic\":[";
    bool first = true;
    for (const Coupling& c : sorted) {
        if (!first) out += ',';
        first = false;
        out += '[' + std::to_string(c.a) + ',' + std::to_string(c.b) + ',' + fmt_real(c.w) + ']';
    }
    out += "]}";
    return out;
}

struct ParsedCoeffs {
    int n = 0;
    std::vector<double> linear;
    std::vector<Coupling> quadratic;
    double offset = 0.0;
};

inline ParsedCoeffs coeffs_from_json(const std::string& text, const char* what) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ParsedCoeffs out;
    out.n = j.at("n").get<int>();
    if (out.n < 1) throw std::runtime_error(std::string(what) + ": n must be positive");
    out.offset = j.at("offset").get<double>();
    out.linear.assign(static_cast<std::size_t>(out.n), 0.0);
    for (const auto& entry : j.at("linear")) {
        if (!entry.is_array() || entry.size() != 2) {
            throw std::runtime_error(std::string(what) + ": linear entries are [index, value]");
        }
        const int i = entry.at(0).get<int>();
        if (i < 0 || i >= out.n) {
            throw std::runtime_error(std::string(what) + ": linear index " +
                                     std::to_string(i) + " out of range");
        }
        out.linear[static_cast<std::size_t>(i)] = entry.at(1).get<double>();
    }
    for (const auto& entry : j.at("quadratic")) {
        if (!entry.is_array() || entry.size() != 3) {
            throw std::runtime_error(std::string(what) +
                                     ": quadratic entries are [a, b, value]");
        }
        Coupling c;
        c.a = entry.at(0).get<int>();
        c.b = entry.at(1).get<int>();
        c.w = entry.at(2).get<double>();
        if (c.a < 0 || c.b < 0 || c.a >= out.n || c.b >= out.n || c.a >= c.b) {
            throw std::runtime_error(std::string(what) + ": quadratic pair (" +
                                     std::to_string(c.a) + ", " + std::to_string(c.b) +
                                     ") must satisfy 0 <= a < b < n");
        }
        out.quadratic.push_back(c);
    }
    sort_couplings(out.quadratic);
    for (std::size_t i = 1; i < out.quadratic.size(); ++i) {
        if (out.quadratic[i - 1].a == out.quadratic[i].a &&
            out.quadratic[i - 1].b == out.quadratic[i].b) {
            throw std::runtime_error(std::string(what) + ": duplicate quadratic pair (" +
                                     std::to_string(out.quadratic[i].a) + ", " +
                                     std::to_string(out.quadratic[i].b) + ")");
        }
    }
    return out;
}

}  // namespace detail

inline std::string qubo_to_json(const Qubo& q) {
    return detail::coeffs_to_json(q.n_qubits, q.linear, q.quadratic, q.offset);
}

inline Qubo qubo_from_json(const std::string& text) {
    detail::ParsedCoeffs c = detail::coeffs_from_json(text, "qubo");
    Qubo q;
    q.n_qubits = c.n;
    q.linear = std::move(c.linear);
    q.quadratic = std::move(c.quadratic);
    q.offset = c.offset;
    return q;
}

inline std::string ising_to_json(const Ising& i) {
    return detail::coeffs_to_json(i.n_spins, i.h, i.j, i.offset);
}

inline Ising ising_from_json(const std::string& text) {
    detail::ParsedCoeffs c = detail::coeffs_from_json(text, "ising");
    Ising i;
    i.n_spins = c.n;
    i.h = std::move(c.linear);
    i.j = std::move(c.quadratic);
    i.offset = c.offset;
    return i;
}

// ---------------------------------------------------------------------
// Sample sets and Boltzmann tables.
// ---------------------------------------------------------------------

inline std::string bits_to_string(const Assignment& bits) {
    std::string s(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) s[i] = '1';
    }
    return s;
}

inline Assignment bits_from_string(const std::string& s) {
    Assignment bits(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1') {
            throw std::runtime_error("bit string must contain only 0 and 1");
        }
        bits[i] = static_cast<std::uint8_t>(s[i] - '0');
    }
    return bits;
}

inline std::string sample_set_to_json(const SampleSet& set) {
    std::string out = "[";
    bool first = true;
    for (const Sample& s : set.samples) {
        if (!first) out += ',';
        first = false;
        out += "{\"bits\":\"" + bits_to_string(s.bits) + "\"";
        out += ",\"energy\":" + fmt_real(s.energy);
        out += ",\"multiplicity\":" + std::to_string(s.multiplicity) + "}";
    }
    out += ']';
    return out;
}

inline SampleSet sample_set_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_array()) throw std::runtime_error("sample set: top level must be an array");
    SampleSet set;
    for (const auto& entry : j) {
        Sample s;
        s.bits = bits_from_string(entry.at("bits").get<std::string>());
        s.energy = entry.at("energy").get<double>();
        s.multiplicity = entry.at("multiplicity").get<std::uint64_t>();
        if (s.multiplicity < 1) throw std::runtime_error("sample set: multiplicity < 1");
        set.samples.push_back(std::move(s));
    }
    return set;
}

/// CSV with one row per assignment in ascending code order; the bit string
/// lists qubit 0 first.
inline std::string boltzmann_to_csv(const BoltzmannTable& t) {
    std::string out = "bits,probability\n";
    const std::uint64_t count = std::uint64_t{1} << t.n_qubits;
    std::string bits(static_cast<std::size_t>(t.n_qubits), '0');
    for (std::uint64_t code = 0; code < count; ++code) {
        for (int k = 0; k < t.n_qubits; ++k) {
            bits[static_cast<std::size_t>(k)] = ((code >> k) & 1u) ? '1' : '0';
        }
        out += bits;
        out += ',';
        out += fmt_real(t.probabilities[code]);
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------
// Encodings and cost reports.
// ---------------------------------------------------------------------

inline std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Basic: return "basic";
        case Scheme::OnesComplement: return "ones_complement";
        case Scheme::TwosComplement: return "twos_complement";
    }
    throw std::logic_error("unknown scheme");
}

inline Scheme parse_scheme(const std::string& name) {
    if (name == "basic") return Scheme::Basic;
    if (name == "ones_complement") return Scheme::OnesComplement;
    if (name == "twos_complement") return Scheme::TwosComplement;
    throw std::runtime_error("unknown scheme '" + name +
                             "' (use basic, ones_complement or twos_complement)");
}

inline std::string encoding_to_json(const Encoding& e) {
    return "{\"o\":" + std::to_string(e.min_exp) + ",\"p\":" + std::to_string(e.max_exp) +
           ",\"scheme\":\"" + detail::json_escape(scheme_name(e.scheme)) + "\"}";
}

inline Encoding encoding_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    return make_encoding(parse_scheme(j.at("scheme").get<std::string>()),
                         j.at("o").get<int>(), j.at("p").get<int>());
}

inline std::string cost_report_to_json(const CostReport& r) {
    std::string out = "{";
    out += "\"beta_ok\":" + std::string(r.beta_ok ? "true" : "false");
    out += ",\"cost_ne\":" + fmt_real(r.cost_ne);
    out += ",\"cost_qa_prep\":" + fmt_real(r.cost_qa_prep);
    out += ",\"cost_qr\":" + fmt_real(r.cost_qr);
    out += ",\"cost_svd\":" + fmt_real(r.cost_svd);
    out += ",\"delta_ne\":" + fmt_real(r.delta_ne);
    out += ",\"delta_qa_star\":" + fmt_real(r.delta_qa_star);
    out += ",\"lambda\":" + fmt_real(r.lambda);
    out += ",\"lambda_upper\":" + fmt_real(r.lambda_upper);
    out += ",\"speedup_feasible\":" + std::string(r.speedup_feasible ? "true" : "false");
    out += "}";
    return out;
}

}  // namespace qals
