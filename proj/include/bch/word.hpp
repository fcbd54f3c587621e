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
// Commutator monomials as words over {X, Y}.
//
// The word w_1 w_2 ... w_N stands for the right-nested bracket
// [w_1,[w_2,[...,[w_{N-1},w_N]...]]]. Its length is the order of the monomial.

#ifndef BCH_WORD_HPP
#define BCH_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "bch/error.hpp"

namespace bch {

enum class Letter : std::uint8_t { X, Y };

inline char to_char(Letter letter) noexcept { return letter == Letter::X ? 'X' : 'Y'; }

class Word {
public:
    // Checked construction from text; see parse_word().
    static Word parse(std::string_view text) {
        if (text.empty()) {
            throw Error(ErrorKind::EmptyWord, "a word needs at least one letter");
        }
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] != 'X' && text[i] != 'Y') {
                throw InvalidCharacterError(i + 1, text[i]);
            }
        }
        return Word(std::string(text));
    }

    // The index-th word of the given length in lexicographic order (X < Y):
    // bit (length-1-j) of index selects letter j, 0 meaning X.
    static Word from_index(std::size_t length, std::uint64_t index) {
        if (length == 0) {
            throw Error(ErrorKind::InvalidOrder, "word length must be at least 1");
        }
        std::string letters(length, 'X');
        for (std::size_t j = 0; j < length; ++j) {
            if ((index >> (length - 1 - j)) & 1u) {
                letters[j] = 'Y';
            }
        }
        return Word(std::move(letters));
    }

    std::size_t size() const noexcept { return letters_.size(); }
    Letter operator[](std::size_t i) const noexcept { return letters_[i] == 'X' ? Letter::X : Letter::Y; }

    const std::string& str() const noexcept { return letters_; }

    std::size_t count(Letter letter) const noexcept {
        std::size_t n = 0;
        for (char c : letters_) {
            n += (c == to_char(letter));
        }
        return n;
    }

    friend bool operator==(const Word&, const Word&) = default;

    // Length first, then lexicographic with X < Y.
    friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
        if (auto c = lhs.size() <=> rhs.size(); c != 0) {
            return c;
        }
        return lhs.letters_.compare(rhs.letters_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.letters_; }

private:
    explicit Word(std::string letters) : letters_(std::move(letters)) {}

    std::string letters_;
};

inline Word parse_word(std::string_view text) { return Word::parse(text); }

// N(C): the number of letters.
inline std::size_t word_order(const Word& w) noexcept { return w.size(); }

// One maximal run X^x_count Y^y_count between descending (YX) edges.
struct Block {
    std::size_t x_count = 0;
    std::size_t y_count = 0;

    std::size_t length() const noexcept { return x_count + y_count; }
    friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
    std::vector<Block> blocks;

    // L(C)
    std::size_t block_count() const noexcept { return blocks.size(); }

    std::string concatenate() const {
        std::string out;
        for (const Block& b : blocks) {
            out.append(b.x_count, 'X');
            out.append(b.y_count, 'Y');
        }
        return out;
    }

    friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

// Cuts the word between every adjacent Y followed by X.
inline BlockDecomposition decompose_blocks(const Word& w) {
    BlockDecomposition out;
    Block current;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Letter::X) {
            if (current.y_count > 0) {
                out.blocks.push_back(current);
                current = Block{};
            }
            ++current.x_count;
        } else {
            ++current.y_count;
        }
    }
    out.blocks.push_back(current);
    return out;
}

// All 2^length words of exactly this length, lexicographic with X < Y.
inline std::vector<Word> enumerate_words(std::size_t length) {
    if (length == 0) {
        throw Error(ErrorKind::InvalidOrder, "word length must be at least 1");
    }
    if (length >= 63) {
        throw Error(ErrorKind::InvalidOrder, "cannot enumerate words of length " + std::to_string(length));
    }
    const std::uint64_t count = std::uint64_t{1} << length;
    std::vector<Word> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        out.push_back(Word::from_index(length, i));
    }
    return out;
}

}  // namespace bch

#endif  // BCH_WORD_HPP
