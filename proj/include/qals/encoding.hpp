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

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qals/problem.hpp"

namespace qals {

/// Radix-2 encodings of a real variable onto a block of qubits.
///
/// Basic uses two rails of positive powers of two (one added, one
/// subtracted). The complement schemes use a single rail plus a sign
/// qubit whose weight makes the block behave like one's or two's
/// complement arithmetic.
enum class Scheme { Basic, OnesComplement, TwosComplement };

/// One variable's qubit block. Weights are the contiguous powers of two
/// 2^min_exp .. 2^max_exp; complement schemes add a sign qubit in slot 0.
struct Encoding {
    Scheme scheme = Scheme::TwosComplement;
    int min_exp = 0;
    int max_exp = 0;
    double sign_weight = 0.0;  // 0 for Basic
    int qubits_per_var = 0;

    int exponent_count() const { return max_exp - min_exp + 1; }
};

inline Encoding make_encoding(Scheme scheme, int min_exp, int max_exp) {
    if (min_exp > max_exp) {
        throw std::invalid_argument("make_encoding: min_exp " +
                                    std::to_string(min_exp) + " exceeds max_exp " +
                                    std::to_string(max_exp));
    }
    Encoding e;
    e.scheme = scheme;
    e.min_exp = min_exp;
    e.max_exp = max_exp;
    const double top = std::ldexp(1.0, max_exp + 1);
    const double step = std::ldexp(1.0, min_exp);
    switch (scheme) {
        case Scheme::Basic:
            e.sign_weight = 0.0;
            e.qubits_per_var = 2 * e.exponent_count();
            break;
        case Scheme::OnesComplement:
            e.sign_weight = -top + step;
            e.qubits_per_var = e.exponent_count() + 1;
            break;
        case Scheme::TwosComplement:
            e.sign_weight = -top;
            e.qubits_per_var = e.exponent_count() + 1;
            break;
    }
    return e;
}

/// Signed weight contributed by one slot of a variable block.
/// Complement schemes: slot 0 is the sign qubit, slots 1.. hold ascending
/// exponents. Basic: the positive rail (ascending) precedes the negative
/// rail (ascending).
inline double slot_weight(const Encoding& e, int slot) {
    if (slot < 0 || slot >= e.qubits_per_var) {
        throw std::invalid_argument("slot_weight: slot " + std::to_string(slot) +
                                    " out of range");
    }
    if (e.scheme == Scheme::Basic) {
        const int rail_len = e.exponent_count();
        if (slot < rail_len) return std::ldexp(1.0, e.min_exp + slot);
        return -std::ldexp(1.0, e.min_exp + (slot - rail_len));
    }
    if (slot == 0) return e.sign_weight;
    return std::ldexp(1.0, e.min_exp + slot - 1);
}

/// All slot weights of one variable block, in slot order.
inline std::vector<double> block_weights(const Encoding& e) {
    std::vector<double> w(static_cast<std::size_t>(e.qubits_per_var));
    for (int s = 0; s < e.qubits_per_var; ++s) w[static_cast<std::size_t>(s)] = slot_weight(e, s);
    return w;
}

/// Fixed mapping of n_vars variable blocks onto a flat qubit index space.
/// Global index = variable * qubits_per_var + slot.
struct QubitLayout {
    int n_vars = 0;
    Encoding encoding;
    int total_qubits = 0;

    int global_index(int var, int slot) const {
        return var * encoding.qubits_per_var + slot;
    }
    int var_of(int g) const { return g / encoding.qubits_per_var; }
    int slot_of(int g) const { return g % encoding.qubits_per_var; }
};

inline QubitLayout make_layout(const Encoding& e, int n_vars) {
    if (n_vars < 1) {
        throw std::invalid_argument("make_layout: n_vars must be positive");
    }
    QubitLayout l;
    l.n_vars = n_vars;
    l.encoding = e;
    l.total_qubits = n_vars * e.qubits_per_var;
    return l;
}

/// Bit values in global qubit order, one entry per qubit, each 0 or 1.
using Assignment = std::vector<std::uint8_t>;

/// Decodes one variable block. All weights are dyadic with a short
/// mantissa, so the sum is exact; in particular the one's-complement
/// all-ones pattern (negative zero) yields exactly +0.0.
inline double decode_block(const Encoding& e, const std::uint8_t* bits) {
    double x = 0.0;
    for (int s = 0; s < e.qubits_per_var; ++s) {
        if (bits[s]) x += slot_weight(e, s);
    }
    return x == 0.0 ? 0.0 : x;  // collapse -0.0
}

/// Decodes a full assignment to the real vector it represents.
inline std::vector<double> decode(const QubitLayout& l, const Assignment& a) {
    if (static_cast<int>(a.size()) != l.total_qubits) {
        throw std::invalid_argument("decode: assignment has " +
                                    std::to_string(a.size()) + " bits, layout expects " +
                                    std::to_string(l.total_qubits));
    }
    std::vector<double> x(static_cast<std::size_t>(l.n_vars));
    for (int j = 0; j < l.n_vars; ++j) {
        x[static_cast<std::size_t>(j)] =
            decode_block(l.encoding, a.data() + l.global_index(j, 0));
    }
    return x;
}

/// Closed interval of decodable values plus their uniform spacing.
struct ValueRange {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
};

/// Every value between lo and hi in multiples of step is attainable; the
/// two's-complement interval is asymmetric, the others are symmetric.
inline ValueRange representable_range(const Encoding& e) {
    const double top = std::ldexp(1.0, e.max_exp + 1);
    const double step = std::ldexp(1.0, e.min_exp);
    ValueRange r;
    r.step = step;
    if (e.scheme == Scheme::TwosComplement) {
        r.lo = -top;
        r.hi = top - step;
    } else {
        r.lo = -(top - step);
        r.hi = top - step;
    }
    return r;
}

/// A decodable value together with the one-variable bit block producing it.
struct GridPoint {
    double value = 0.0;
    Assignment bits;  // length qubits_per_var
};

namespace detail {

// Writes |magnitude| = units * 2^min_exp onto an exponent rail starting at
// bits[base], ascending order. units must fit in exponent_count() bits.
inline void write_rail(const Encoding& e, std::uint64_t units, Assignment& bits, int base) {
    for (int t = 0; t < e.exponent_count(); ++t) {
        bits[static_cast<std::size_t>(base + t)] =
            static_cast<std::uint8_t>((units >> t) & 1u);
    }
}

}  // namespace detail

/// Bit block for an exactly representable value. Negative Basic values use
/// the negative rail only, so the returned pattern is canonical.
inline GridPoint encode_value(const Encoding& e, double value) {
    const ValueRange r = representable_range(e);
    GridPoint g;
    g.value = value;
    g.bits.assign(static_cast<std::size_t>(e.qubits_per_var), 0);
    const double units_real = value / r.step;
    const auto units = static_cast<std::int64_t>(std::llround(units_real));
    if (static_cast<double>(units) != units_real || value < r.lo || value > r.hi) {
        throw std::invalid_argument("encode_value: value not representable");
    }
    if (e.scheme == Scheme::Basic) {
        const int rail_len = e.exponent_count();
        if (units >= 0) {
            detail::write_rail(e, static_cast<std::uint64_t>(units), g.bits, 0);
        } else {
            detail::write_rail(e, static_cast<std::uint64_t>(-units), g.bits, rail_len);
        }
        return g;
    }
    if (units >= 0) {
        detail::write_rail(e, static_cast<std::uint64_t>(units), g.bits, 1);
    } else {
        // value = sign_weight + remainder, remainder laid on the rail
        const double remainder = value - e.sign_weight;
        g.bits[0] = 1;
        detail::write_rail(e, static_cast<std::uint64_t>(std::llround(remainder / r.step)),
                           g.bits, 1);
    }
    return g;
}

/// Nearest decodable value to v (clamped to the range); exact ties between
/// two grid neighbours round toward zero.
inline GridPoint nearest_representable(const Encoding& e, double v) {
    const ValueRange r = representable_range(e);
    if (v <= r.lo) return encode_value(e, r.lo);
    if (v >= r.hi) return encode_value(e, r.hi);
    const double t = v / r.step;
    const double lo_val = std::floor(t) * r.step;
    const double hi_val = std::ceil(t) * r.step;
    if (lo_val == hi_val) return encode_value(e, lo_val);
    const double d_lo = v - lo_val;
    const double d_hi = hi_val - v;
    double pick;
    if (d_lo < d_hi) {
        pick = lo_val;
    } else if (d_hi < d_lo) {
        pick = hi_val;
    } else {
        pick = std::abs(lo_val) <= std::abs(hi_val) ? lo_val : hi_val;
    }
    return encode_value(e, pick);
}

/// Best decodable vector for a small problem, by exhaustive enumeration.
struct GridOptimum {
    std::vector<double> x;
    double residual = 0.0;
    Assignment bits;
};

/// Enumerates every assignment of the layout (Gray order, incremental
/// residual updates) and returns the minimizer of the residual norm.
/// Ties break toward the lexicographically smallest bit pattern. Guarded
/// to at most 24 qubits.
inline GridOptimum grid_optimum(const LeastSquaresProblem& p, const Encoding& e) {
    check_problem(p);
    const int n = p.cols();
    const int m = p.rows();
    const QubitLayout layout = make_layout(e, n);
    const int total = layout.total_qubits;
    if (total > 24) {
        throw std::invalid_argument("grid_optimum: " + std::to_string(total) +
                                    " qubits exceed the 24-qubit guard");
    }

    const std::vector<double> weights = block_weights(e);
    Assignment bits(static_cast<std::size_t>(total), 0);
    std::vector<double> res(static_cast<std::size_t>(m));  // A x - b at current bits
    for (int i = 0; i < m; ++i) res[static_cast<std::size_t>(i)] = -p.b[static_cast<std::size_t>(i)];
    double sq = 0.0;
    for (double ri : res) sq += ri * ri;

    auto exact_sq = [&](const Assignment& a) {
        const std::vector<double> x = decode(layout, a);
        const double rn = residual(p, x);
        return rn * rn;
    };

    double best_sq = sq;
    Assignment best_bits = bits;

    const std::uint64_t count = std::uint64_t{1} << total;
    for (std::uint64_t u = 1; u < count; ++u) {
        const int g = std::countr_zero(u);  // Gray code: bit flipped at step u
        const int var = layout.var_of(g);
        const int slot = layout.slot_of(g);
        auto& bit = bits[static_cast<std::size_t>(g)];
        bit ^= 1u;
        const double w = weights[static_cast<std::size_t>(slot)];
        const double d = bit ? w : -w;
        for (int i = 0; i < m; ++i) {
            const double di = d * p.a(i, var);
            auto& ri = res[static_cast<std::size_t>(i)];
            sq += di * (2.0 * ri + di);
            ri += di;
        }
        if ((u & 0xFFFFu) == 0u) {
            // periodic refresh bounds incremental drift
            const std::vector<double> x = decode(layout, bits);
            sq = 0.0;
            for (int i = 0; i < m; ++i) {
                double ri = -p.b[static_cast<std::size_t>(i)];
                for (int j = 0; j < n; ++j) ri += p.a(i, j) * x[static_cast<std::size_t>(j)];
                res[static_cast<std::size_t>(i)] = ri;
                sq += ri * ri;
            }
        }
        if (sq <= best_sq + 1e-9 * (1.0 + best_sq)) {
            const double exact = exact_sq(bits);
            if (exact < best_sq || (exact == best_sq && bits < best_bits)) {
                best_sq = exact;
                best_bits = bits;
            }
        }
    }

    GridOptimum out;
    out.bits = std::move(best_bits);
    out.x = decode(layout, out.bits);
    out.residual = residual(p, out.x);
    return out;
}

}  // namespace qals
