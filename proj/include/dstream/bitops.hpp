// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace dstream::bitops {

using word = std::uint64_t;

inline constexpr unsigned word_width = 64;

// floor(log2(x)) + 1 for x > 0; 0 for x == 0.
constexpr word bit_length(word x) noexcept {
    return static_cast<word>(std::bit_width(x));
}

// max{n : x mod 2^n == 0}. Returns word_width for x == 0, matching the
// hardware convention; callers pass x >= 1 on every algorithm path.
constexpr word count_trailing_zeros(word x) noexcept {
    return static_cast<word>(std::countr_zero(x));
}

// Largest power of two <= x. Requires x > 0.
constexpr word bit_floor(word x) noexcept {
    assert(x > 0);
    return std::bit_floor(x);
}

// Largest power of two <= x, with bit_floor_safe(0) == 0.
constexpr word bit_floor_safe(word x) noexcept {
    return std::bit_floor(x);
}

// Number of set bits.
constexpr word bit_count(word x) noexcept {
    return static_cast<word>(std::popcount(x));
}

// 2^n * x. Requires n < word_width; callers keep shifts in range.
constexpr word left_shift(word x, word n) noexcept {
    assert(n < word_width);
    return x << n;
}

// floor(x / 2^n) for any n, including n >= word_width (which yields 0).
// The arithmetic definition is total even where a hardware shift is not.
constexpr word right_shift(word x, word n) noexcept {
    return n < word_width ? x >> n : 0;
}

constexpr word indicator(bool x) noexcept {
    return x ? 1 : 0;
}

// x if x != 0 else y.
constexpr word elvis(word x, word y) noexcept {
    return x != 0 ? x : y;
}

// x mod n for n a power of two.
constexpr word mod_pow2(word x, word n) {
    if (!std::has_single_bit(n)) {
        throw std::invalid_argument{"mod_pow2: modulus must be a power of two"};
    }
    return x & (n - 1);
}

}  // namespace dstream::bitops
