// SPDX-FileCopyrightText: 2026 The psl authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>


namespace psl {


/// Matrix indices are 32 bit, so a nonzero costs one value plus 4 bytes of
/// index per stored index array.
using index_type = std::int32_t;
using size_type = std::size_t;

inline constexpr std::int64_t max_index =
    std::numeric_limits<index_type>::max();


enum class Precision { f32, f64 };

inline constexpr size_type index_bytes = sizeof(index_type);

constexpr size_type value_bytes(Precision p) noexcept
{
    return p == Precision::f32 ? 4 : 8;
}

constexpr std::string_view to_string(Precision p) noexcept
{
    return p == Precision::f32 ? "f32" : "f64";
}

std::optional<Precision> parse_precision(std::string_view s) noexcept;


template <typename T>
concept Scalar = std::same_as<T, float> || std::same_as<T, double>;

template <Scalar T>
inline constexpr Precision precision_of =
    std::same_as<T, float> ? Precision::f32 : Precision::f64;


}  // namespace psl
