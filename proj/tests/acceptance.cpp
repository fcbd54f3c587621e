/* Copyright 2026 The bchcoeff Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any gating criterion fails. Criterion 5 (scaling trend) is informational
// and reported without gating.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bch/bch.hpp"
#include "oracles.hpp"
#include "process.hpp"

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    bool gating;
    std::function<Outcome()> check;
};

bch::ExactRational q(long num, long den) { return bch::ExactRational(bch::BigInt(num), bch::BigInt(den)); }

// 1. Exhaustive block vs naive equality for every word of length <= 12.
Outcome oracle_equivalence() {
    const auto tables = bch::precompute_tables(12);
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const auto& w : bch::enumerate_words(n)) {
            const auto fast = bch::coefficient_block(w, tables);
            const auto slow = bch::coefficient_naive(w);
            if (fast != slow) {
                return {false, "mismatch at " + w.str() + ": block " + fast.to_string() + " vs naive " + slow.to_string()};
            }
            ++checked;
        }
    }
    return {checked == 8190, std::to_string(checked) + " words equal"};
}

// 2. Closed-form spot values and third-order combinations.
Outcome spot_values() {
    const auto tables = bch::precompute_tables(12);
    auto block = [&](const std::string& w) { return bch::coefficient_block(bch::parse_word(w), tables); };
    auto naive = [](const std::string& w) { return bch::coefficient_naive(bch::parse_word(w)); };
    const std::vector<std::pair<std::string, bch::ExactRational>> expected{
        {"X", q(1, 1)},     {"Y", q(1, 1)},     {"XY", q(1, 4)},     {"YX", q(-1, 4)},    {"XXY", q(1, 36)},
        {"XYX", q(-1, 18)}, {"YYX", q(1, 36)},  {"YXY", q(-1, 18)},
    };
    std::size_t checked = 0;
    for (const auto& [w, value] : expected) {
        if (block(w) != value || naive(w) != value) {
            return {false, "M(" + w + ") = " + block(w).to_string() + ", expected " + value.to_string()};
        }
        ++checked;
    }
    for (std::size_t k = 2; k <= 12; ++k) {
        if (!block(std::string(k, 'X')).is_zero() || !block(std::string(k, 'Y')).is_zero()) {
            return {false, "pure-letter word of length " + std::to_string(k) + " has nonzero coefficient"};
        }
        checked += 2;
    }
    if (block("XXY") - block("XYX") != q(1, 12) || block("YYX") - block("YXY") != q(1, 12)) {
        return {false, "third-order combinations differ from 1/12"};
    }
    return {true, std::to_string(checked) + " values and both 1/12 identities"};
}

// 3. Order-6 residual bound and epsilon-halving ratio.
Outcome numerical_ground_truth() {
    constexpr std::size_t order = 6;
    constexpr std::size_t dim = 4;
    constexpr std::size_t samples = 20;
    constexpr double eps = 0.05;
    constexpr std::uint64_t seed = 2024;
    const double bound = 1e2 * std::pow(eps, order + 1);
    constexpr double ratio_lo = 16.0;  // 2^4
    constexpr double ratio_hi = 64.0;  // 2^6

    const auto tables = bch::precompute_tables(order);
    const auto coarse = bch::verify_convergence(order, dim, eps, samples, seed, tables);
    const auto fine = bch::verify_convergence(order, dim, eps / 2, samples, seed, tables);
    const double ratio = coarse.max_residual / fine.max_residual;

    std::ostringstream detail;
    detail.precision(4);
    detail << "max_residual(0.05) = " << coarse.max_residual << " (bound " << bound << "), max_residual(0.025) = "
           << fine.max_residual << ", ratio = " << ratio << " (required [" << ratio_lo << ", " << ratio_hi << "])";
    const bool bound_ok = coarse.max_residual <= bound;
    const bool ratio_ok = ratio >= ratio_lo && ratio <= ratio_hi;
    if (!bound_ok) {
        detail << "; residual bound violated";
    }
    if (!ratio_ok) {
        detail << "; ratio outside bracket";
    }
    return {bound_ok && ratio_ok, detail.str()};
}

// 4. f' closed form vs surjection recurrence (u <= 30); g' vs partition enumeration (u + v <= 8).
Outcome table_properties() {
    const auto surjections = bch::oracle::surjection_table(30);
    const auto tables = bch::precompute_tables(30);
    std::size_t checked = 0;
    for (std::size_t u = 1; u <= 30; ++u) {
        for (std::size_t n = 1; n <= u; ++n) {
            if (bch::f_prime(u, n) != surjections[u][n] || tables.f(u, n) != surjections[u][n]) {
                return {false, "f'(" + std::to_string(u) + "," + std::to_string(n) + ") disagrees with the recurrence"};
            }
            ++checked;
        }
    }
    for (std::size_t u = 0; u <= 8; ++u) {
        for (std::size_t v = 0; u + v <= 8; ++v) {
            if (u + v == 0) {
                continue;
            }
            for (std::size_t n = 1; n <= u + v; ++n) {
                const mpq_class expected = bch::oracle::block_enumeration(u, v, n);
                if (expected.get_den() != 1 || tables.g(u, v, n) != expected.get_num() ||
                    bch::g_prime(u, v, n) != expected.get_num()) {
                    return {false, "g'(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(n) +
                                       ") disagrees with enumeration"};
                }
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) + " table entries exact"};
}

struct BenchRow {
    std::size_t order = 0;
    std::size_t words = 0;
    double seconds = 0.0;
};

std::vector<BenchRow> run_bench(const std::string& args, std::string& error) {
    const auto r = bch::testing::run_tool("bench " + args);
    std::vector<BenchRow> rows;
    if (r.exit_code != 0) {
        error = "bench exited with " + std::to_string(r.exit_code) + ": " + r.err;
        return rows;
    }
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        BenchRow row;
        char mode[16] = {};
        if (std::sscanf(line.c_str(), "%zu,%15[^,],%zu,%lf", &row.order, mode, &row.words, &row.seconds) == 4) {
            rows.push_back(row);
        }
    }
    return rows;
}

// 5. Scaling trend of block-mode expansion, and block vs naive at N = 14.
Outcome scaling_benchmark() {
    std::string error;
    const auto block = run_bench("--min-order 12 --max-order 18 --mode block --threads 1", error);
    if (block.size() != 7) {
        return {false, "block bench failed " + error};
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& row : block) {
        if (row.words != (std::size_t{1} << (row.order + 1)) - 2 || !(row.seconds > 0)) {
            return {false, "bad bench record at order " + std::to_string(row.order)};
        }
        const double x = static_cast<double>(row.order);
        const double y = std::log2(row.seconds);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double count = static_cast<double>(block.size());
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);

    const auto naive = run_bench("--min-order 14 --max-order 14 --mode naive --threads 1", error);
    if (naive.size() != 1) {
        return {false, "naive bench failed " + error};
    }
    const double block14 = block[2].seconds;
    const double speedup = naive[0].seconds / block14;

    std::ostringstream detail;
    detail.precision(4);
    detail << "log2(time) slope over N in [12,18] = " << slope << " (required [1.3, 1.7]); N=14 block " << block14
           << " s, naive " << naive[0].seconds << " s, speedup " << speedup << "x (required >= 10)";
    const bool slope_ok = slope >= 1.3 && slope <= 1.7;
    const bool speed_ok = speedup >= 10.0;
    if (!slope_ok) {
        detail << "; slope outside bracket";
    }
    if (!speed_ok) {
        detail << "; speedup too small";
    }
    return {slope_ok && speed_ok, detail.str()};
}

// 6. Byte-identical JSON across runs and thread counts.
Outcome determinism() {
    const auto a = bch::testing::run_tool("expand --order 10 --format json --threads 1");
    const auto b = bch::testing::run_tool("expand --order 10 --format json --threads 4");
    const auto c = bch::testing::run_tool("expand --order 10 --format json");
    if (a.exit_code != 0 || b.exit_code != 0 || c.exit_code != 0) {
        return {false, "expand failed"};
    }
    const bool same = a.out == b.out && a.out == c.out;
    return {same, std::to_string(a.out.size()) + " bytes, " + (same ? "identical" : "different") +
                      " across --threads 1, 4 and default"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "oracle equivalence (all words, length <= 12)", true, oracle_equivalence},
        {2, "closed-form spot values", true, spot_values},
        {3, "numerical ground truth (d=4, eps=0.05, k=20, N=6)", true, numerical_ground_truth},
        {4, "table properties", true, table_properties},
        {5, "scaling benchmark (informational)", false, scaling_benchmark},
        {6, "determinism of expand --order 10 --format json", true, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        const char* tag = outcome.pass ? "PASS" : (c.gating ? "FAIL" : "FAIL (informational)");
        std::printf("[%s] criterion %d: %s -- %s [%.1f s]\n", tag, c.id, c.name.c_str(), outcome.detail.c_str(),
                    elapsed.count());
        std::fflush(stdout);
        if (!outcome.pass && c.gating) {
            ++failures;
        }
    }
    std::printf("%d gating criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
