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
// Integer tables behind the block coefficient formula.
//
//   f'(u, n) = Δ^n x^u |_{x=0} = sum_{z=0}^{n} (-1)^z C(n,z) (n-z)^u
//
// counts surjections from u letters onto n ordered nonempty groups, i.e.
// u! times the sum over compositions r_1+...+r_n = u (r_j > 0) of 1/prod r_j!.
//
//   g'(u, v, n) = u! v! * sum over splittings of the block X^u Y^v into n
//                 nonempty substrings X^r Y^s of 1/prod r_j! s_j!
//
// A splitting of X^u Y^v either has no substring containing both letters
// (the X run in a parts, the Y run in n-a parts) or exactly one, which is the
// merge of an X-only and a Y-only piece with the same weight (a + b - 1 = n).

#ifndef BCH_TABLES_HPP
#define BCH_TABLES_HPP

#include <cstddef>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "bch/error.hpp"
#include "bch/rational.hpp"

namespace bch {

inline BigInt binomial(std::size_t n, std::size_t k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline BigInt factorial(std::size_t n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

// Largest order whose table entries and block-coefficient intermediates fit in
// a signed 128-bit integer: every g' is at most u! v! 2^(u+v-1) <= 2^81, and the
// assembled numerator is bounded by N! 2^(N-1) lcm(1..N) <= 2^108.
inline constexpr std::size_t kMachineWordOrder = 20;

using Int128 = __int128;

inline BigInt to_bigint(Int128 value) {
    const bool negative = value < 0;
    unsigned __int128 magnitude = negative ? -static_cast<unsigned __int128>(value) : static_cast<unsigned __int128>(value);
    const unsigned long long words[2] = {static_cast<unsigned long long>(magnitude),
                                         static_cast<unsigned long long>(magnitude >> 64)};
    BigInt out;
    mpz_import(out.get_mpz_t(), 2, -1, sizeof(unsigned long long), 0, 0, words);
    return negative ? BigInt(-out) : out;
}

inline Int128 to_int128(const BigInt& value) {
    if (mpz_sizeinbase(value.get_mpz_t(), 2) > 126) {
        throw Error(ErrorKind::InvalidArgument, "value does not fit in 128 bits");
    }
    unsigned long long words[2] = {0, 0};
    mpz_export(words, nullptr, -1, sizeof(unsigned long long), 0, 0, value.get_mpz_t());
    const Int128 magnitude = static_cast<Int128>((static_cast<unsigned __int128>(words[1]) << 64) | words[0]);
    return sgn(value) < 0 ? -magnitude : magnitude;
}

// Closed-form finite difference. Zero whenever n > u.
inline BigInt f_prime(std::size_t u, std::size_t n) {
    if (u == 0 || n == 0) {
        throw Error(ErrorKind::InvalidArgument,
                    "f'(u, n) needs u >= 1 and n >= 1, got (" + std::to_string(u) + ", " + std::to_string(n) + ")");
    }
    if (n > u) {
        return 0;
    }
    BigInt sum = 0;
    BigInt power;
    for (std::size_t z = 0; z <= n; ++z) {
        mpz_ui_pow_ui(power.get_mpz_t(), n - z, u);
        BigInt term = binomial(n, z) * power;
        if (z % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

namespace detail {

// g' assembled from any f' source; both the table-free fallback and the
// table builder go through here so the bounds live in one place.
template <typename F>
BigInt assemble_g_prime(std::size_t u, std::size_t v, std::size_t n, F&& f) {
    if (u + v == 0) {
        throw Error(ErrorKind::InvalidBlock, "block X^0 Y^0 is empty");
    }
    if (n == 0) {
        throw Error(ErrorKind::InvalidArgument, "g' needs at least one substring");
    }
    if (v == 0) {
        return f(u, n);
    }
    if (u == 0) {
        return f(v, n);
    }
    if (n > u + v) {
        return 0;
    }
    BigInt sum = 0;
    // No mixed substring: a pieces of X^u, n - a pieces of Y^v.
    for (std::size_t a = 1; a + 1 <= n && a <= u; ++a) {
        if (n - a <= v) {
            sum += f(u, a) * f(v, n - a);
        }
    }
    // One mixed substring: a pieces of X^u, n + 1 - a pieces of Y^v, the
    // last X piece merged with the first Y piece.
    for (std::size_t a = 1; a <= n && a <= u; ++a) {
        if (n + 1 - a <= v) {
            sum += f(u, a) * f(v, n + 1 - a);
        }
    }
    return sum;
}

}  // namespace detail

// Table-free g'. Computes every f' from the closed form on demand.
inline BigInt g_prime(std::size_t u, std::size_t v, std::size_t n) {
    return detail::assemble_g_prime(u, v, n, [](std::size_t a, std::size_t b) { return f_prime(a, b); });
}

class CoefficientTables;
inline CoefficientTables precompute_tables(std::size_t max_order);

/* Memoized f' and g' up to a fixed order. Immutable once built; lookups are
 * constant-time and safe from any number of threads. Entries outside the
 * support (n > u for f', n > u + v for g') read as zero. */
class CoefficientTables {
public:
    std::size_t max_order() const noexcept { return max_order_; }

    const BigInt& f(std::size_t u, std::size_t n) const {
        if (u == 0 || n == 0) {
            throw Error(ErrorKind::InvalidArgument, "f' lookup needs u >= 1 and n >= 1");
        }
        if (u > max_order_) {
            throw TableOverflowError(static_cast<int>(u), static_cast<int>(max_order_));
        }
        return n > u ? zero() : f_[u * stride_ + n];
    }

    const BigInt& g(std::size_t u, std::size_t v, std::size_t n) const {
        if (u + v == 0) {
            throw Error(ErrorKind::InvalidBlock, "block X^0 Y^0 is empty");
        }
        if (n == 0) {
            throw Error(ErrorKind::InvalidArgument, "g' lookup needs n >= 1");
        }
        if (u + v > max_order_) {
            throw TableOverflowError(static_cast<int>(u + v), static_cast<int>(max_order_));
        }
        return n > u + v ? zero() : g_[(u * stride_ + v) * stride_ + n];
    }

    // g' as a 128-bit integer; only for u + v <= min(max_order, kMachineWordOrder).
    Int128 g_small(std::size_t u, std::size_t v, std::size_t n) const noexcept {
        return n > u + v ? 0 : g_small_[(u * stride_ + v) * stride_ + n];
    }

    friend bool operator==(const CoefficientTables&, const CoefficientTables&) = default;

    friend CoefficientTables precompute_tables(std::size_t max_order);

private:
    static const BigInt& zero() {
        static const BigInt value = 0;
        return value;
    }

    std::size_t max_order_ = 0;
    std::size_t stride_ = 0;
    std::vector<BigInt> f_;  // [u][n]
    std::vector<BigInt> g_;  // [u][v][n]
    std::vector<Int128> g_small_;  // same layout, entries with u + v <= kMachineWordOrder
};

inline CoefficientTables precompute_tables(std::size_t max_order) {
    if (max_order == 0) {
        throw Error(ErrorKind::InvalidOrder, "tables need max_order >= 1");
    }
    CoefficientTables t;
    try {
        t.max_order_ = max_order;
        t.stride_ = max_order + 1;
        const std::size_t s = t.stride_;
        if (s > std::vector<BigInt>().max_size() / s / s) {
            throw std::length_error("table size overflows");
        }
        t.f_.assign(s * s, BigInt(0));
        t.g_.assign(s * s * s, BigInt(0));

        for (std::size_t u = 1; u <= max_order; ++u) {
            for (std::size_t n = 1; n <= u; ++n) {
                t.f_[u * s + n] = f_prime(u, n);
            }
        }
        auto f_lookup = [&](std::size_t a, std::size_t b) -> const BigInt& {
            return b > a ? CoefficientTables::zero() : t.f_[a * s + b];
        };
        for (std::size_t u = 0; u <= max_order; ++u) {
            for (std::size_t v = 0; u + v <= max_order; ++v) {
                if (u + v == 0) {
                    continue;
                }
                for (std::size_t n = 1; n <= u + v; ++n) {
                    t.g_[(u * s + v) * s + n] = detail::assemble_g_prime(u, v, n, f_lookup);
                }
            }
        }
        if (max_order <= kMachineWordOrder) {
            t.g_small_.resize(t.g_.size());
            for (std::size_t i = 0; i < t.g_.size(); ++i) {
                t.g_small_[i] = to_int128(t.g_[i]);
            }
        }
    } catch (const std::bad_alloc&) {
        throw Error(ErrorKind::Allocation, "out of memory building tables for max_order " + std::to_string(max_order));
    } catch (const std::length_error&) {
        throw Error(ErrorKind::Allocation, "tables for max_order " + std::to_string(max_order) + " are too large");
    }
    return t;
}

}  // namespace bch

#endif  // BCH_TABLES_HPP
