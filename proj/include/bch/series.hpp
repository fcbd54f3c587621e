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
// The order-N truncation of log(e^X e^Y) as a table of (word, M(word)) terms,
// and its text/JSON/CSV serializations.

#ifndef BCH_SERIES_HPP
#define BCH_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "bch/coeff.hpp"
#include "bch/error.hpp"
#include "bch/rational.hpp"
#include "bch/tables.hpp"
#include "bch/word.hpp"

namespace bch {

struct SeriesTerm {
    Word word;
    ExactRational coefficient;
    friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

// Terms sorted by word length, then lexicographically (X < Y); no duplicates.
struct BchSeries {
    std::size_t order = 0;
    std::vector<SeriesTerm> terms;
    friend bool operator==(const BchSeries&, const BchSeries&) = default;
};

struct ExpandOptions {
    bool prune_zero_coefficients = false;
    // Drop words whose last two letters agree; their bracket [.., [A, A]] is zero.
    bool prune_zero_monomials = false;
    // 0 picks std::thread::hardware_concurrency(). Never affects the result.
    unsigned threads = 0;
};

inline bool is_zero_monomial(const Word& w) noexcept { return w.size() >= 2 && w[w.size() - 1] == w[w.size() - 2]; }

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/* Builds the series with an arbitrary per-word coefficient routine
 * (coefficient_block or coefficient_naive). Words are split into contiguous
 * index ranges, one per worker, and each worker writes only its own slots, so
 * the output is independent of the thread count. */
template <typename CoefficientFn>
BchSeries expand_with(std::size_t order, const ExpandOptions& options, CoefficientFn&& coefficient) {
    if (order == 0 || order >= 63) {
        throw Error(ErrorKind::InvalidOrder, "series order must be in [1, 62], got " + std::to_string(order));
    }
    std::vector<Word> words;
    for (std::size_t length = 1; length <= order; ++length) {
        const std::uint64_t count = std::uint64_t{1} << length;
        for (std::uint64_t i = 0; i < count; ++i) {
            Word w = Word::from_index(length, i);
            if (options.prune_zero_monomials && is_zero_monomial(w)) {
                continue;
            }
            words.push_back(std::move(w));
        }
    }

    std::vector<ExactRational> coefficients(words.size());
    const std::size_t workers = std::min<std::size_t>(resolve_threads(options.threads), std::max<std::size_t>(1, words.size()));
    std::vector<std::exception_ptr> failures(workers);
    auto work = [&](std::size_t worker) {
        const std::size_t begin = words.size() * worker / workers;
        const std::size_t end = words.size() * (worker + 1) / workers;
        try {
            for (std::size_t i = begin; i < end; ++i) {
                coefficients[i] = coefficient(words[i]);
            }
        } catch (...) {
            failures[worker] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t k = 0; k < workers; ++k) {
            pool.emplace_back(work, k);
        }
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    BchSeries series;
    series.order = order;
    series.terms.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (options.prune_zero_coefficients && coefficients[i].is_zero()) {
            continue;
        }
        series.terms.push_back(SeriesTerm{std::move(words[i]), std::move(coefficients[i])});
    }
    return series;
}

inline BchSeries expand(std::size_t order, const ExpandOptions& options, const CoefficientTables& tables) {
    if (order > tables.max_order()) {
        throw TableOverflowError(static_cast<int>(order), static_cast<int>(tables.max_order()));
    }
    return expand_with(order, options, [&](const Word& w) { return coefficient_block(w, tables); });
}

inline BchSeries expand(std::size_t order, bool prune_zero_coefficients, bool prune_zero_monomials,
                        const CoefficientTables& tables) {
    return expand(order, ExpandOptions{prune_zero_coefficients, prune_zero_monomials, 0}, tables);
}

enum class SeriesFormat { Text, Json, Csv };

inline std::optional<SeriesFormat> parse_series_format(std::string_view name) {
    if (name == "text") return SeriesFormat::Text;
    if (name == "json") return SeriesFormat::Json;
    if (name == "csv") return SeriesFormat::Csv;
    return std::nullopt;
}

// "[X,[Y,X]]" for XYX; a single letter renders bare.
inline std::string bracket_notation(const Word& w) {
    const std::string& letters = w.str();
    std::string out;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        out += '[';
        out += letters[i];
        out += ',';
    }
    out += letters.back();
    out.append(letters.size() - 1, ']');
    return out;
}

inline std::string serialize(const BchSeries& series, SeriesFormat format) {
    std::ostringstream out;
    switch (format) {
        case SeriesFormat::Text:
            for (const SeriesTerm& term : series.terms) {
                out << term.coefficient.to_string() << " · " << bracket_notation(term.word) << '\n';
            }
            break;
        case SeriesFormat::Csv:
            out << "word,num,den\n";
            for (const SeriesTerm& term : series.terms) {
                out << term.word.str() << ',' << to_decimal(term.coefficient.numerator()) << ','
                    << to_decimal(term.coefficient.denominator()) << '\n';
            }
            break;
        case SeriesFormat::Json: {
            nlohmann::ordered_json doc;
            doc["order"] = series.order;
            auto& terms = doc["terms"] = nlohmann::ordered_json::array();
            for (const SeriesTerm& term : series.terms) {
                nlohmann::ordered_json entry;
                entry["word"] = term.word.str();
                entry["num"] = to_decimal(term.coefficient.numerator());
                entry["den"] = to_decimal(term.coefficient.denominator());
                terms.push_back(std::move(entry));
            }
            out << doc.dump() << '\n';
            break;
        }
    }
    return out.str();
}

// Inverse of serialize(..., Json). Rejects anything serialize() could not
// have produced: unreduced fractions, misordered or overlong words.
inline BchSeries parse_series_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Format, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("order") || !doc["order"].is_number_unsigned() || !doc.contains("terms") ||
        !doc["terms"].is_array()) {
        throw Error(ErrorKind::Format, "series JSON needs an unsigned \"order\" and a \"terms\" array");
    }
    BchSeries series;
    series.order = doc["order"].get<std::size_t>();
    if (series.order == 0) {
        throw Error(ErrorKind::Format, "series order must be positive");
    }
    for (const auto& entry : doc["terms"]) {
        if (!entry.is_object()) {
            throw Error(ErrorKind::Format, "every term must be an object");
        }
        for (const char* key : {"word", "num", "den"}) {
            if (!entry.contains(key) || !entry[key].is_string()) {
                throw Error(ErrorKind::Format, std::string("term field \"") + key + "\" must be a string");
            }
        }
        Word word = parse_word(entry["word"].get<std::string>());
        const BigInt num = parse_decimal(entry["num"].get<std::string>());
        const BigInt den = parse_decimal(entry["den"].get<std::string>());
        if (den <= 0) {
            throw Error(ErrorKind::Format, "denominator of " + word.str() + " must be positive");
        }
        ExactRational coefficient(num, den);
        if (coefficient.numerator() != num || coefficient.denominator() != den) {
            throw Error(ErrorKind::Format, "coefficient of " + word.str() + " is not in lowest terms");
        }
        if (word.size() > series.order) {
            throw Error(ErrorKind::Format, "word " + word.str() + " is longer than the series order");
        }
        if (!series.terms.empty() && !(series.terms.back().word < word)) {
            throw Error(ErrorKind::Format, "terms are not strictly ordered at " + word.str());
        }
        series.terms.push_back(SeriesTerm{std::move(word), std::move(coefficient)});
    }
    return series;
}

}  // namespace bch

#endif  // BCH_SERIES_HPP
