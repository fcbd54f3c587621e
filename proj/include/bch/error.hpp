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
// Error types shared by every bch module.

#ifndef BCH_ERROR_HPP
#define BCH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bch {

enum class ErrorKind {
    EmptyWord,
    InvalidCharacter,
    InvalidOrder,
    InvalidBlock,
    InvalidArgument,
    TableOverflow,
    Allocation,
    NotNearIdentity,
    DimensionMismatch,
    Format,
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::EmptyWord: return "EmptyWord";
        case ErrorKind::InvalidCharacter: return "InvalidCharacter";
        case ErrorKind::InvalidOrder: return "InvalidOrder";
        case ErrorKind::InvalidBlock: return "InvalidBlock";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::TableOverflow: return "TableOverflow";
        case ErrorKind::Allocation: return "Allocation";
        case ErrorKind::NotNearIdentity: return "NotNearIdentity";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::Format: return "Format";
    }
    return "Unknown";
}

/* Every failure raised by the library. The kind is stable and machine-checkable;
 * the message is for humans.
 *
 * Input errors (bad words, bad orders, bad arguments) are distinguished from
 * computation errors by is_input_error(), which the CLI maps onto exit codes. */
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    bool is_input_error() const noexcept {
        switch (kind_) {
            case ErrorKind::EmptyWord:
            case ErrorKind::InvalidCharacter:
            case ErrorKind::InvalidOrder:
            case ErrorKind::InvalidBlock:
            case ErrorKind::InvalidArgument:
            case ErrorKind::Format:
                return true;
            default:
                return false;
        }
    }

private:
    ErrorKind kind_;
};

class InvalidCharacterError : public Error {
public:
    InvalidCharacterError(std::size_t position, char found)
        : Error(ErrorKind::InvalidCharacter,
                "character '" + std::string(1, found) + "' at position " + std::to_string(position) +
                    " is not 'X' or 'Y'"),
          position_(position) {}

    // 1-based position of the offending character.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class TableOverflowError : public Error {
public:
    TableOverflowError(int required, int available)
        : Error(ErrorKind::TableOverflow, "tables built to order " + std::to_string(available) +
                                              " but order " + std::to_string(required) + " is required"),
          required_(required) {}

    int required_order() const noexcept { return required_; }

private:
    int required_;
};

}  // namespace bch

#endif  // BCH_ERROR_HPP
