// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>


namespace psl {


enum class ErrorCode {
    invalid_argument,
    dimension_mismatch,
    unknown_operation,
    parse_error,
    unsupported_field,
    index_out_of_range,
    overflow,
    io_error,
    validation_failed,
    serialization_error,
};

std::string_view to_string(ErrorCode code) noexcept;


/// Base class of every error thrown by the library. The code drives the
/// command-line exit status mapping.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_{code}
    {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};


class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what)
        : Error(ErrorCode::invalid_argument, what)
    {}
};


class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::string_view where, std::size_t expected,
                      std::size_t actual);
};


class UnknownOperation : public Error {
public:
    explicit UnknownOperation(std::string_view name);
};


/// Malformed MatrixMarket header or record. `line` is 1-based, 0 if unknown.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::string_view message);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};


class UnsupportedField : public Error {
public:
    explicit UnsupportedField(std::string_view what);
};


class IndexOutOfRange : public Error {
public:
    IndexOutOfRange(std::size_t line, std::string_view message);
};


class Overflow : public Error {
public:
    explicit Overflow(std::string_view message);
};


class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorCode::io_error, what)
    {}
};


class ValidationFailed : public Error {
public:
    explicit ValidationFailed(const std::string& what)
        : Error(ErrorCode::validation_failed, what)
    {}
};


class SerializationError : public Error {
public:
    explicit SerializationError(const std::string& what)
        : Error(ErrorCode::serialization_error, what)
    {}
};


}  // namespace psl
