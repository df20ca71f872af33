// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#include <psl/core/error.hpp>

#include <string>


namespace psl {


std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::invalid_argument:
        return "InvalidArgument";
    case ErrorCode::dimension_mismatch:
        return "DimensionMismatch";
    case ErrorCode::unknown_operation:
        return "UnknownOperation";
    case ErrorCode::parse_error:
        return "ParseError";
    case ErrorCode::unsupported_field:
        return "UnsupportedField";
    case ErrorCode::index_out_of_range:
        return "IndexOutOfRange";
    case ErrorCode::overflow:
        return "Overflow";
    case ErrorCode::io_error:
        return "IoError";
    case ErrorCode::validation_failed:
        return "ValidationFailed";
    case ErrorCode::serialization_error:
        return "SerializationError";
    }
    return "Unknown";
}


DimensionMismatch::DimensionMismatch(std::string_view where,
                                     std::size_t expected, std::size_t actual)
    : Error(ErrorCode::dimension_mismatch,
            std::string(where) + ": expected size " + std::to_string(expected) +
                ", got " + std::to_string(actual))
{}


UnknownOperation::UnknownOperation(std::string_view name)
    : Error(ErrorCode::unknown_operation,
            "operation '" + std::string(name) + "' has no kernel binding")
{}


ParseError::ParseError(std::size_t line, std::string_view message)
    : Error(ErrorCode::parse_error,
            line ? "line " + std::to_string(line) + ": " + std::string(message)
                 : std::string(message)),
      line_{line}
{}


UnsupportedField::UnsupportedField(std::string_view what)
    : Error(ErrorCode::unsupported_field,
            "unsupported MatrixMarket type: " + std::string(what))
{}


IndexOutOfRange::IndexOutOfRange(std::size_t line, std::string_view message)
    : Error(ErrorCode::index_out_of_range,
            line ? "line " + std::to_string(line) + ": " + std::string(message)
                 : std::string(message))
{}


Overflow::Overflow(std::string_view message)
    : Error(ErrorCode::overflow, std::string(message))
{}


}  // namespace psl
