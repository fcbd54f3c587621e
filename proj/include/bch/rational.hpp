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
// Arbitrary-precision integers and exact rationals, backed by GMP.

#ifndef BCH_RATIONAL_HPP
#define BCH_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "bch/error.hpp"

namespace bch {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(10); }

inline BigInt parse_decimal(const std::string& text) {
    BigInt value;
    if (text.empty() || value.set_str(text, 10) != 0) {
        throw Error(ErrorKind::Format, "'" + text + "' is not a decimal integer");
    }
    return value;
}

/* Exact rational number, always stored in lowest terms with a positive
 * denominator. Zero is 0/1. */
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    explicit ExactRational(const BigInt& value) : value_(value) {}

    ExactRational(const BigInt& numerator, const BigInt& denominator) {
        if (denominator == 0) {
            throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
        }
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }

    // "num/den", e.g. "-1/18" or "0/1".
    std::string to_string() const { return to_decimal(numerator()) + "/" + to_decimal(denominator()); }

    ExactRational& operator+=(const ExactRational& rhs) { value_ += rhs.value_; return *this; }
    ExactRational& operator-=(const ExactRational& rhs) { value_ -= rhs.value_; return *this; }
    ExactRational& operator*=(const ExactRational& rhs) { value_ *= rhs.value_; return *this; }
    ExactRational& operator/=(const ExactRational& rhs) {
        if (rhs.is_zero()) {
            throw Error(ErrorKind::InvalidArgument, "division by zero rational");
        }
        value_ /= rhs.value_;
        return *this;
    }

    friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
    friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
    friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
    friend ExactRational operator-(const ExactRational& value) {
        ExactRational out;
        out.value_ = -value.value_;
        return out;
    }

    friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& value) {
        return os << value.to_string();
    }

private:
    mpq_class value_;
};

}  // namespace bch

#endif  // BCH_RATIONAL_HPP
