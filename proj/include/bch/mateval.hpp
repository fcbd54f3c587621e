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
// Numerical check of a truncated series: evaluate its nested commutators on
// dense matrices and compare with log(exp X exp Y) computed directly.

#ifndef BCH_MATEVAL_HPP
#define BCH_MATEVAL_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bch/error.hpp"
#include "bch/series.hpp"
#include "bch/tables.hpp"
#include "bch/word.hpp"

namespace bch {

// Square matrix of finite doubles.
class Matrix {
public:
    explicit Matrix(Eigen::MatrixXd values) : values_(std::move(values)) {
        if (values_.rows() != values_.cols() || values_.rows() == 0) {
            throw Error(ErrorKind::DimensionMismatch, "matrix must be square and nonempty");
        }
        if (!values_.allFinite()) {
            throw Error(ErrorKind::InvalidArgument, "matrix entries must be finite");
        }
    }

    static Matrix zero(std::size_t dim) { return Matrix(Eigen::MatrixXd::Zero(index(dim), index(dim))); }
    static Matrix identity(std::size_t dim) { return Matrix(Eigen::MatrixXd::Identity(index(dim), index(dim))); }

    std::size_t dim() const noexcept { return static_cast<std::size_t>(values_.rows()); }
    const Eigen::MatrixXd& values() const noexcept { return values_; }
    double operator()(std::size_t i, std::size_t j) const { return values_(index(i), index(j)); }

    double frobenius_norm() const { return values_.norm(); }

private:
    static Eigen::Index index(std::size_t i) { return static_cast<Eigen::Index>(i); }

    Eigen::MatrixXd values_;
};

namespace detail {

inline double one_norm(const Eigen::MatrixXd& a) { return a.cwiseAbs().colwise().sum().maxCoeff(); }

inline void require_same_dim(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "matrices of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
}

}  // namespace detail

/* Scaling and squaring around a Taylor kernel: A is scaled by 2^-s until its
 * 1-norm is at most 1/2, the series is summed until terms drop below double
 * resolution, and the result is squared s times. */
inline Matrix mat_exp(const Matrix& a) {
    const Eigen::MatrixXd& values = a.values();
    const double norm = detail::one_norm(values);
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    }
    const Eigen::MatrixXd scaled = values / std::ldexp(1.0, squarings);
    const auto n = values.rows();

    Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    for (int k = 1; k <= 30; ++k) {
        term = (term * scaled) / static_cast<double>(k);
        sum += term;
        if (detail::one_norm(term) <= 1e-18 * detail::one_norm(sum)) {
            break;
        }
    }
    for (int i = 0; i < squarings; ++i) {
        sum = sum * sum;
    }
    return Matrix(std::move(sum));
}

// Mercator tail target for mat_log; well below the 1e-13 the verifier needs.
inline constexpr double kLogTailBound = 1e-16;

namespace detail {

// Number of Mercator terms after which E^k is exactly zero, or 0 if E is not
// (numerically exactly) nilpotent.
inline std::size_t nilpotent_terms(const Eigen::MatrixXd& e) {
    Eigen::MatrixXd power = e;
    for (Eigen::Index k = 1; k <= e.rows(); ++k) {
        if ((power.array() == 0.0).all()) {
            return static_cast<std::size_t>(k - 1);
        }
        power = power * e;
    }
    return 0;
}

}  // namespace detail

/* log(I + E) = E - E^2/2 + E^3/3 - ..., valid while ||E||_F < 1. The term
 * count m is the smallest with ||E||^{m+1} / (1 - ||E||) <= kLogTailBound.
 * An E whose powers vanish exactly (nilpotent, e.g. [[0,1],[0,0]]) needs no
 * norm bound: the series terminates. */
inline Matrix mat_log(const Matrix& a) {
    const auto n = a.values().rows();
    const Eigen::MatrixXd e = a.values() - Eigen::MatrixXd::Identity(n, n);
    const double norm = e.norm();
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    if (norm == 0.0) {
        return Matrix(std::move(sum));
    }
    std::size_t terms = 0;
    if (norm < 1.0) {
        terms = 1;
        double tail = norm * norm / (1.0 - norm);
        while (tail > kLogTailBound) {
            ++terms;
            tail *= norm;
        }
    } else {
        terms = detail::nilpotent_terms(e);
        if (terms == 0) {
            throw Error(ErrorKind::NotNearIdentity,
                        "||A - I||_F = " + std::to_string(norm) + " is not below 1; logarithm series diverges");
        }
    }
    Eigen::MatrixXd power = e;
    for (std::size_t k = 1; k <= terms; ++k) {
        if (k > 1) {
            power = power * e;
        }
        const double scale = (k % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(k);
        sum += scale * power;
    }
    return Matrix(std::move(sum));
}

// [M_1,[M_2,[...,[M_{N-1},M_N]...]]] with M_j = X or Y per letter.
inline Matrix nested_commutator(const Word& w, const Matrix& x, const Matrix& y) {
    detail::require_same_dim(x, y);
    auto pick = [&](Letter letter) -> const Eigen::MatrixXd& { return letter == Letter::X ? x.values() : y.values(); };
    Eigen::MatrixXd result = pick(w[w.size() - 1]);
    for (std::size_t j = w.size() - 1; j-- > 0;) {
        const Eigen::MatrixXd& m = pick(w[j]);
        result = (m * result - result * m).eval();
    }
    return Matrix(std::move(result));
}

// sum_terms double(M(w)) * [w](X, Y). The coefficient conversion is the only
// rounding that is not matrix arithmetic.
inline Matrix evaluate_series(const BchSeries& series, const Matrix& x, const Matrix& y) {
    detail::require_same_dim(x, y);
    const auto n = static_cast<Eigen::Index>(x.dim());
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    for (const SeriesTerm& term : series.terms) {
        if (term.coefficient.is_zero()) {
            continue;
        }
        sum += term.coefficient.to_double() * nested_commutator(term.word, x, y).values();
    }
    return Matrix(std::move(sum));
}

inline Matrix bch_reference(const Matrix& x, const Matrix& y) {
    detail::require_same_dim(x, y);
    return mat_log(Matrix(mat_exp(x).values() * mat_exp(y).values()));
}

struct VerificationReport {
    std::size_t order = 0;
    std::size_t dim = 0;
    double epsilon = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::string generator = "mt19937_64";
    std::string norm = "frobenius";
    std::vector<double> residuals;
    double max_residual = 0.0;
};

// Largest entry scale accepted by verify_convergence().
inline constexpr double kMaxVerifyEpsilon = 0.1;

/* Draws `samples` pairs (X, Y) with entries uniform in [-epsilon, epsilon]
 * and records ||log(e^X e^Y) - series_N(X, Y)||_F for each. Entries are drawn
 * as epsilon * U(-1, 1) in row-major order, X before Y, so the same seed at a
 * different epsilon yields the same matrices rescaled. */
inline VerificationReport verify_convergence(std::size_t order, std::size_t dim, double epsilon, std::size_t samples,
                                             std::uint64_t seed, const CoefficientTables& tables) {
    if (order == 0) {
        throw Error(ErrorKind::InvalidOrder, "verification order must be at least 1");
    }
    if (dim == 0 || samples == 0) {
        throw Error(ErrorKind::InvalidArgument, "dimension and sample count must be positive");
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw Error(ErrorKind::InvalidArgument, "epsilon must be a positive finite number");
    }
    if (epsilon > kMaxVerifyEpsilon) {
        throw Error(ErrorKind::NotNearIdentity,
                    "epsilon " + std::to_string(epsilon) + " exceeds " + std::to_string(kMaxVerifyEpsilon));
    }
    const BchSeries series = expand(order, ExpandOptions{true, true, 1}, tables);

    VerificationReport report;
    report.order = order;
    report.dim = dim;
    report.epsilon = epsilon;
    report.samples = samples;
    report.seed = seed;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const auto n = static_cast<Eigen::Index>(dim);
    auto draw = [&] {
        Eigen::MatrixXd m(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                m(i, j) = epsilon * unit(rng);
            }
        }
        return Matrix(std::move(m));
    };
    for (std::size_t k = 0; k < samples; ++k) {
        const Matrix x = draw();
        const Matrix y = draw();
        const Eigen::MatrixXd diff = bch_reference(x, y).values() - evaluate_series(series, x, y).values();
        report.residuals.push_back(diff.norm());
    }
    report.max_residual = *std::max_element(report.residuals.begin(), report.residuals.end());
    return report;
}

inline std::string to_json(const VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["order"] = report.order;
    doc["dim"] = report.dim;
    doc["epsilon"] = report.epsilon;
    doc["samples"] = report.samples;
    doc["seed"] = report.seed;
    doc["generator"] = report.generator;
    doc["norm"] = report.norm;
    doc["residuals"] = report.residuals;
    doc["max_residual"] = report.max_residual;
    return doc.dump() + "\n";
}

}  // namespace bch

#endif  // BCH_MATEVAL_HPP
