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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "qals/encoding.hpp"
#include "qals/solvers.hpp"
#include "test_util.hpp"

using qals::Encoding;
using qals::Scheme;

namespace {

// All decoded values of an encoding, by full enumeration through the
// reference decoder.
std::set<double> enumerate_values(const Encoding& e) {
    std::set<double> values;
    const std::uint64_t count = std::uint64_t{1} << e.qubits_per_var;
    for (std::uint64_t code = 0; code < count; ++code) {
        const qals::Assignment bits = testutil::assignment_from_code(code, e.qubits_per_var);
        values.insert(testutil::ref_decode_block(e.scheme, e.min_exp, e.max_exp, bits.data()));
    }
    return values;
}

}  // namespace

TEST_CASE("make_encoding fills weights and counts", "[encoding]") {
    const Encoding twos = qals::make_encoding(Scheme::TwosComplement, 0, 1);
    REQUIRE(twos.sign_weight == -4.0);
    REQUIRE(twos.qubits_per_var == 3);

    const Encoding ones = qals::make_encoding(Scheme::OnesComplement, -5, -2);
    REQUIRE(ones.sign_weight == -0.46875);
    REQUIRE(ones.qubits_per_var == 5);

    const Encoding basic = qals::make_encoding(Scheme::Basic, -5, -2);
    REQUIRE(basic.sign_weight == 0.0);
    REQUIRE(basic.qubits_per_var == 8);

    REQUIRE_THROWS_AS(qals::make_encoding(Scheme::Basic, 1, 0), std::invalid_argument);
}

TEST_CASE("slot weights follow the documented order", "[encoding]") {
    const Encoding ones = qals::make_encoding(Scheme::OnesComplement, -2, 0);
    REQUIRE(qals::slot_weight(ones, 0) == ones.sign_weight);
    REQUIRE(qals::slot_weight(ones, 1) == 0.25);
    REQUIRE(qals::slot_weight(ones, 2) == 0.5);
    REQUIRE(qals::slot_weight(ones, 3) == 1.0);

    const Encoding basic = qals::make_encoding(Scheme::Basic, -1, 0);
    REQUIRE(qals::slot_weight(basic, 0) == 0.5);
    REQUIRE(qals::slot_weight(basic, 1) == 1.0);
    REQUIRE(qals::slot_weight(basic, 2) == -0.5);
    REQUIRE(qals::slot_weight(basic, 3) == -1.0);

    REQUIRE_THROWS_AS(qals::slot_weight(basic, 4), std::invalid_argument);
}

TEST_CASE("decode matches hand examples", "[encoding]") {
    const Encoding twos = qals::make_encoding(Scheme::TwosComplement, -2, -1);
    const qals::QubitLayout layout = qals::make_layout(twos, 1);
    REQUIRE(qals::decode(layout, {1, 1, 0})[0] == -0.75);

    const Encoding ones = qals::make_encoding(Scheme::OnesComplement, -5, -2);
    const qals::QubitLayout ones_layout = qals::make_layout(ones, 1);
    const double neg_zero = qals::decode(ones_layout, {1, 1, 1, 1, 1})[0];
    REQUIRE(neg_zero == 0.0);
    REQUIRE(!std::signbit(neg_zero));

    const Encoding basic = qals::make_encoding(Scheme::Basic, -5, -2);
    const qals::QubitLayout basic_layout = qals::make_layout(basic, 1);
    REQUIRE(qals::decode(basic_layout, qals::Assignment(8, 1))[0] == 0.0);

    REQUIRE_THROWS_AS(qals::decode(layout, {1, 1}), std::invalid_argument);
}

TEST_CASE("decode agrees with the reference decoder on every pattern", "[encoding]") {
    const std::vector<std::pair<int, int>> windows{{-5, -2}, {-2, -1}, {0, 1}, {-1, 2}};
    for (Scheme scheme : {Scheme::Basic, Scheme::OnesComplement, Scheme::TwosComplement}) {
        for (const auto& [o, p] : windows) {
            const Encoding e = qals::make_encoding(scheme, o, p);
            const qals::QubitLayout layout = qals::make_layout(e, 2);
            const std::uint64_t count = std::uint64_t{1} << layout.total_qubits;
            for (std::uint64_t code = 0; code < count; ++code) {
                const qals::Assignment a =
                    testutil::assignment_from_code(code, layout.total_qubits);
                const std::vector<double> got = qals::decode(layout, a);
                const std::vector<double> want = testutil::ref_decode(scheme, o, p, 2, a);
                REQUIRE(got == want);
            }
        }
    }
}

TEST_CASE("representable_range matches enumeration", "[encoding]") {
    const Encoding twos = qals::make_encoding(Scheme::TwosComplement, 0, 1);
    qals::ValueRange r = qals::representable_range(twos);
    REQUIRE(r.lo == -4.0);
    REQUIRE(r.hi == 3.0);
    REQUIRE(r.step == 1.0);

    const Encoding ones = qals::make_encoding(Scheme::OnesComplement, -5, -2);
    r = qals::representable_range(ones);
    REQUIRE(r.lo == -0.46875);
    REQUIRE(r.hi == 0.46875);
    REQUIRE(r.step == 0.03125);

    const Encoding basic = qals::make_encoding(Scheme::Basic, 0, 0);
    r = qals::representable_range(basic);
    REQUIRE(r.lo == -1.0);
    REQUIRE(r.hi == 1.0);
    REQUIRE(r.step == 1.0);

    for (Scheme scheme : {Scheme::Basic, Scheme::OnesComplement, Scheme::TwosComplement}) {
        for (const auto& [o, p] : std::vector<std::pair<int, int>>{{-3, -1}, {0, 2}, {1, 1}}) {
            const Encoding e = qals::make_encoding(scheme, o, p);
            const qals::ValueRange range = qals::representable_range(e);
            const std::set<double> values = enumerate_values(e);
            REQUIRE(*values.begin() == range.lo);
            REQUIRE(*values.rbegin() == range.hi);
            // contiguous grid: every multiple of step between lo and hi occurs
            const auto expected =
                static_cast<std::size_t>(std::llround((range.hi - range.lo) / range.step)) + 1;
            REQUIRE(values.size() == expected);
        }
    }
}

TEST_CASE("distinct decoded value counts", "[encoding]") {
    for (int width = 1; width <= 5; ++width) {
        const Encoding twos = qals::make_encoding(Scheme::TwosComplement, 0, width - 1);
        const Encoding ones = qals::make_encoding(Scheme::OnesComplement, 0, width - 1);
        const auto c = static_cast<std::size_t>(width + 1);
        REQUIRE(enumerate_values(twos).size() == (std::size_t{1} << c));
        REQUIRE(enumerate_values(ones).size() == (std::size_t{1} << c) - 1);
    }
}

TEST_CASE("nearest_representable picks the closest grid point", "[encoding]") {
    const Encoding ones = qals::make_encoding(Scheme::OnesComplement, -5, -2);
    qals::GridPoint g = qals::nearest_representable(ones, 0.3);
    REQUIRE(g.value == 0.3125);

    // clamping
    REQUIRE(qals::nearest_representable(ones, 7.0).value == 0.46875);
    REQUIRE(qals::nearest_representable(ones, -7.0).value == -0.46875);

    // exact tie rounds toward zero
    const Encoding twos = qals::make_encoding(Scheme::TwosComplement, 0, 1);
    REQUIRE(qals::nearest_representable(twos, -0.5).value == 0.0);
    REQUIRE(qals::nearest_representable(twos, 2.5).value == 2.0);

    // returned bits decode back to the returned value (identity), and the
    // value matches a brute-force nearest search
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (Scheme scheme : {Scheme::Basic, Scheme::OnesComplement, Scheme::TwosComplement}) {
        const Encoding e = qals::make_encoding(scheme, -3, -1);
        const std::set<double> values = enumerate_values(e);
        for (int t = 0; t < 200; ++t) {
            const double v = dist(rng);
            const qals::GridPoint pt = qals::nearest_representable(e, v);
            REQUIRE(testutil::ref_decode_block(scheme, -3, -1, pt.bits.data()) == pt.value);
            double best = *values.begin();
            for (double cand : values) {
                const double d_cand = std::abs(cand - v);
                const double d_best = std::abs(best - v);
                if (d_cand < d_best ||
                    (d_cand == d_best && std::abs(cand) < std::abs(best))) {
                    best = cand;
                }
            }
            REQUIRE(pt.value == best);
        }
    }
}

TEST_CASE("range endpoints are attained by explicit patterns", "[encoding]") {
    const Encoding twos = qals::make_encoding(Scheme::TwosComplement, -1, 1);
    const qals::ValueRange r = qals::representable_range(twos);
    // sign only
    qals::Assignment lo_bits(static_cast<std::size_t>(twos.qubits_per_var), 0);
    lo_bits[0] = 1;
    // full rail, no sign
    qals::Assignment hi_bits(static_cast<std::size_t>(twos.qubits_per_var), 1);
    hi_bits[0] = 0;
    REQUIRE(qals::decode_block(twos, lo_bits.data()) == r.lo);
    REQUIRE(qals::decode_block(twos, hi_bits.data()) == r.hi);
}

TEST_CASE("grid_optimum agrees with brute force and respects its guard", "[encoding]") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        const qals::LeastSquaresProblem p = testutil::random_problem(rng, 6, 2);
        const Encoding e = qals::make_encoding(
            t % 2 ? Scheme::OnesComplement : Scheme::TwosComplement, -2, 0);
        const qals::GridOptimum got = qals::grid_optimum(p, e);

        // independent enumeration over all assignments
        const qals::QubitLayout layout = qals::make_layout(e, 2);
        double best_sq = std::numeric_limits<double>::infinity();
        qals::Assignment best_bits;
        const std::uint64_t count = std::uint64_t{1} << layout.total_qubits;
        for (std::uint64_t code = 0; code < count; ++code) {
            const qals::Assignment a =
                testutil::assignment_from_code(code, layout.total_qubits);
            const double sq =
                testutil::ref_residual_sq(p, testutil::ref_decode(e.scheme, -2, 0, 2, a));
            if (sq < best_sq || (sq == best_sq && a < best_bits)) {
                best_sq = sq;
                best_bits = a;
            }
        }
        REQUIRE(got.bits == best_bits);
        REQUIRE(got.residual == Catch::Approx(std::sqrt(best_sq)).margin(1e-12));
    }
}

TEST_CASE("grid_optimum contains exactly representable solutions", "[encoding]") {
    // A x = b with x = (1.5, -0.5), both on the two's-complement grid
    const qals::LeastSquaresProblem p = testutil::make_problem(
        {{1, 0}, {0, 1}, {1, 1}}, {1.5, -0.5, 1.0});
    const Encoding e = qals::make_encoding(Scheme::TwosComplement, -1, 0);
    const qals::GridOptimum got = qals::grid_optimum(p, e);
    REQUIRE(got.x == std::vector<double>{1.5, -0.5});
    REQUIRE(got.residual == Catch::Approx(0.0).margin(1e-12));

    const qals::ClassicalSolution qr = qals::solve_qr(p);
    REQUIRE(got.residual >= qr.residual_norm - 1e-12);
}

TEST_CASE("grid_optimum never beats the unconstrained optimum", "[encoding]") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 10; ++t) {
        const qals::LeastSquaresProblem p = testutil::random_problem(rng, 8, 3);
        const Encoding e = qals::make_encoding(Scheme::OnesComplement, -2, 0);
        const qals::GridOptimum got = qals::grid_optimum(p, e);
        REQUIRE(got.residual >= qals::solve_qr(p).residual_norm - 1e-12);
    }
}

TEST_CASE("grid_optimum guard", "[encoding]") {
    const qals::LeastSquaresProblem p = qals::gen_random_problem(10, 7, 1, 3);
    const Encoding e = qals::make_encoding(Scheme::TwosComplement, -2, 0);  // 7*4 = 28
    REQUIRE_THROWS_AS(qals::grid_optimum(p, e), std::invalid_argument);
}

TEST_CASE("grid_optimum breaks ties lexicographically", "[encoding]") {
    // b = 0: x = 0 is optimal; Basic redundancy yields many zero patterns,
    // the all-zeros assignment is the lexicographically smallest
    const qals::LeastSquaresProblem p =
        testutil::make_problem({{1, 0}, {0, 1}, {1, 1}}, {0, 0, 0});
    const Encoding e = qals::make_encoding(Scheme::Basic, -1, 0);
    const qals::GridOptimum got = qals::grid_optimum(p, e);
    REQUIRE(got.residual == 0.0);
    REQUIRE(got.bits == qals::Assignment(8, 0));
}
