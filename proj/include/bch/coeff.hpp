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
// The coefficient M(C) of a monomial in Dynkin's expansion of log(e^X e^Y):
//
//   M(C) = sum over compositions (r_i, s_i)_{i=1..n} of C of
//          (-1)^{n+1} / n * 1 / (N(C) * prod r_i! s_i!)
//
// coefficient_naive() enumerates the compositions; coefficient_block() uses
// the block decomposition and the g' table and never enumerates them.

#ifndef BCH_COEFF_HPP
#define BCH_COEFF_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "bch/error.hpp"
#include "bch/rational.hpp"
#include "bch/tables.hpp"
#include "bch/word.hpp"

namespace bch {

// One substring X^r Y^s of a composition.
struct Part {
    std::size_t r = 0;
    std::size_t s = 0;
    friend bool operator==(const Part&, const Part&) = default;
    friend auto operator<=>(const Part&, const Part&) = default;
};

struct Composition {
    std::vector<Part> parts;

    std::size_t size() const noexcept { return parts.size(); }

    std::string concatenate() const {
        std::string out;
        for (const Part& p : parts) {
            out.append(p.r, 'X');
            out.append(p.s, 'Y');
        }
        return out;
    }

    friend bool operator==(const Composition&, const Composition&) = default;
};

namespace detail {

template <typename Visitor>
void visit_compositions(const std::string& letters, std::size_t pos, std::vector<Part>& stack, Visitor& visit) {
    if (pos == letters.size()) {
        visit(std::span<const Part>(stack));
        return;
    }
    std::size_t x_run = 0;
    while (pos + x_run < letters.size() && letters[pos + x_run] == 'X') {
        ++x_run;
    }
    std::size_t y_run = 0;
    while (pos + x_run + y_run < letters.size() && letters[pos + x_run + y_run] == 'Y') {
        ++y_run;
    }
    for (std::size_t r = 0; r <= x_run; ++r) {
        // Y letters may only follow once the X run is used up.
        const std::size_t s_max = (r == x_run) ? y_run : 0;
        for (std::size_t s = (r == 0 ? 1 : 0); s <= s_max; ++s) {
            stack.push_back(Part{r, s});
            visit_compositions(letters, pos + r + s, stack, visit);
            stack.pop_back();
        }
    }
}

}  // namespace detail

// Calls visit(std::span<const Part>) once per composition of w. The span is
// only valid for the duration of the call.
template <typename Visitor>
void for_each_composition(const Word& w, Visitor&& visit) {
    std::vector<Part> stack;
    stack.reserve(w.size());
    detail::visit_compositions(w.str(), 0, stack, visit);
}

// Every composition of w, ordered by part count, then lexicographically on
// the flattened (r_1, s_1, r_2, s_2, ...) sequence.
inline std::vector<Composition> enumerate_compositions(const Word& w) {
    std::vector<Composition> out;
    for_each_composition(w, [&](std::span<const Part> parts) {
        out.push_back(Composition{std::vector<Part>(parts.begin(), parts.end())});
    });
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a.parts < b.parts;
    });
    return out;
}

/* Brute-force M(w) straight from Dynkin's sum. Time grows like 3.4^N(w).
 *
 * Each composition contributes the multinomial N!/prod r_i! s_i! to a per-n
 * integer total W_n; then M = sum_n (-1)^{n+1} W_n / (n * N * N!). */
inline ExactRational coefficient_naive(const Word& w) {
    const std::size_t order = w.size();
    std::vector<BigInt> totals(order + 1, BigInt(0));

    if (order <= 20) {
        // 20! < 2^63, so every multinomial fits in a machine word.
        std::array<std::uint64_t, 21> fact{};
        fact[0] = 1;
        for (std::size_t i = 1; i <= 20; ++i) {
            fact[i] = fact[i - 1] * i;
        }
        const std::uint64_t order_fact = fact[order];
        for_each_composition(w, [&](std::span<const Part> parts) {
            std::uint64_t denom = 1;
            for (const Part& p : parts) {
                denom *= fact[p.r] * fact[p.s];
            }
            mpz_add_ui(totals[parts.size()].get_mpz_t(), totals[parts.size()].get_mpz_t(), order_fact / denom);
        });
    } else {
        const BigInt order_fact = factorial(order);
        for_each_composition(w, [&](std::span<const Part> parts) {
            BigInt denom = 1;
            for (const Part& p : parts) {
                denom *= factorial(p.r) * factorial(p.s);
            }
            totals[parts.size()] += order_fact / denom;
        });
    }

    const BigInt scale = BigInt(static_cast<unsigned long>(order)) * factorial(order);
    ExactRational sum;
    for (std::size_t n = 1; n <= order; ++n) {
        if (totals[n] == 0) {
            continue;
        }
        ExactRational term(totals[n], scale * static_cast<unsigned long>(n));
        if (n % 2 == 0) {
            sum -= term;
        } else {
            sum += term;
        }
    }
    return sum;
}

inline BigInt lcm_up_to(std::size_t n) {
    BigInt out = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        mpz_lcm_ui(out.get_mpz_t(), out.get_mpz_t(), k);
    }
    return out;
}

/* M(w) from the block decomposition:
 *
 *   M = 1 / (N prod u_i! v_i!) * sum_{n=L}^{N} (-1)^{n+1}/n
 *         * sum_{n_1+...+n_L = n, n_i >= 1} prod_i g'(u_i, v_i, n_i)
 *
 * The inner sum is a convolution: each block contributes the polynomial
 * sum_k g'(u_i, v_i, k) t^k with k in [1, u_i + v_i], and the coefficient of
 * t^n in their product is the sum over allocations. The outer sum is taken
 * over the common denominator lcm(1..N) so only one division happens.
 * Tables built to at most kMachineWordOrder take a 128-bit path. */
namespace detail {

// Same computation as coefficient_block() in 128-bit arithmetic; requires
// w.size() <= kMachineWordOrder and tables built to at most that order.
inline ExactRational coefficient_block_small(const BlockDecomposition& decomposition, std::size_t order,
                                             const CoefficientTables& tables) {
    std::array<Int128, kMachineWordOrder + 1> allocations{};
    std::array<Int128, kMachineWordOrder + 1> next{};
    allocations[0] = 1;
    std::size_t used = 0;  // highest reachable substring count so far
    std::array<std::uint64_t, kMachineWordOrder + 1> fact{};
    fact[0] = 1;
    for (std::size_t i = 1; i <= kMachineWordOrder; ++i) {
        fact[i] = fact[i - 1] * i;
    }
    std::uint64_t block_factorials = 1;
    for (const Block& block : decomposition.blocks) {
        const std::size_t len = block.length();
        next.fill(0);
        for (std::size_t k = 0; k <= used; ++k) {
            if (allocations[k] == 0) {
                continue;
            }
            for (std::size_t j = 1; j <= len; ++j) {
                next[k + j] += allocations[k] * tables.g_small(block.x_count, block.y_count, j);
            }
        }
        allocations = next;
        used += len;
        block_factorials *= fact[block.x_count] * fact[block.y_count];
    }

    std::uint64_t common = 1;
    for (std::uint64_t k = 2; k <= order; ++k) {
        common = std::lcm(common, k);
    }
    Int128 numerator = 0;
    for (std::size_t n = decomposition.block_count(); n <= order; ++n) {
        const Int128 term = allocations[n] * static_cast<Int128>(common / n);
        numerator += (n % 2 == 1) ? term : -term;
    }
    const Int128 denominator = static_cast<Int128>(common) * static_cast<Int128>(order) * block_factorials;
    return ExactRational(to_bigint(numerator), to_bigint(denominator));
}

}  // namespace detail

inline ExactRational coefficient_block(const Word& w, const CoefficientTables& tables) {
    const std::size_t order = w.size();
    if (order > tables.max_order()) {
        throw TableOverflowError(static_cast<int>(order), static_cast<int>(tables.max_order()));
    }
    const BlockDecomposition decomposition = decompose_blocks(w);
    if (tables.max_order() <= kMachineWordOrder) {
        return detail::coefficient_block_small(decomposition, order, tables);
    }

    std::vector<BigInt> allocations{BigInt(1)};  // index = substrings used so far
    std::vector<BigInt> next;
    BigInt block_factorials = 1;
    for (const Block& block : decomposition.blocks) {
        const std::size_t len = block.length();
        next.assign(allocations.size() + len, BigInt(0));
        for (std::size_t k = 0; k < allocations.size(); ++k) {
            if (allocations[k] == 0) {
                continue;
            }
            for (std::size_t j = 1; j <= len; ++j) {
                const BigInt& g = tables.g(block.x_count, block.y_count, j);
                mpz_addmul(next[k + j].get_mpz_t(), allocations[k].get_mpz_t(), g.get_mpz_t());
            }
        }
        allocations.swap(next);
        block_factorials *= factorial(block.x_count) * factorial(block.y_count);
    }

    const BigInt common = lcm_up_to(order);
    BigInt numerator = 0;
    for (std::size_t n = decomposition.block_count(); n <= order; ++n) {
        const BigInt weight = common / static_cast<unsigned long>(n);
        if (n % 2 == 1) {
            mpz_addmul(numerator.get_mpz_t(), allocations[n].get_mpz_t(), weight.get_mpz_t());
        } else {
            mpz_submul(numerator.get_mpz_t(), allocations[n].get_mpz_t(), weight.get_mpz_t());
        }
    }
    return ExactRational(numerator, common * static_cast<unsigned long>(order) * block_factorials);
}

}  // namespace bch

#endif  // BCH_COEFF_HPP
