// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdint>
#include <random>

#include "dstream/bitops.hpp"

using namespace dstream::bitops;

namespace {

// Direct arithmetic re-implementations, no bit tricks.
word naive_bit_length(word x) {
    word n = 0;
    while (x > 0) {
        x /= 2;
        ++n;
    }
    return n;
}

word naive_ctz(word x) {
    if (x == 0) return word_width;
    word n = 0;
    while (x % 2 == 0) {
        x /= 2;
        ++n;
    }
    return n;
}

word naive_bit_floor(word x) {
    if (x == 0) return 0;
    word p = 1;
    while (p <= x / 2) p *= 2;
    return p;
}

word naive_popcount(word x) {
    word n = 0;
    while (x > 0) {
        n += x % 2;
        x /= 2;
    }
    return n;
}

}  // namespace

TEST_CASE("bit_length on listed examples") {
    CHECK(bit_length(0) == 0);
    CHECK(bit_length(1) == 1);
    CHECK(bit_length(32) == 6);  // frozen from repeated halving
}

TEST_CASE("count_trailing_zeros on listed examples") {
    CHECK(count_trailing_zeros(1) == 0);
    CHECK(count_trailing_zeros(8) == 3);   // frozen from divide-until-odd
    CHECK(count_trailing_zeros(12) == 2);  // frozen from divide-until-odd
    CHECK(count_trailing_zeros(0) == word_width);
}

TEST_CASE("bit_floor_safe on listed examples") {
    CHECK(bit_floor_safe(0) == 0);
    CHECK(bit_floor_safe(5) == 4);  // frozen: largest power of two <= 5
    CHECK(bit_floor_safe(16) == 16);
}

TEST_CASE("bit_count on listed examples") {
    CHECK(bit_count(0) == 0);
    CHECK(bit_count(7) == 3);  // frozen from masking loop
    CHECK(bit_count(32) == 1);
}

TEST_CASE("mod_pow2 on listed examples") {
    CHECK(mod_pow2(13, 8) == 5);  // frozen: integer remainder
    CHECK(mod_pow2(8, 8) == 0);
    CHECK(mod_pow2(3, 1) == 0);
    CHECK_THROWS_AS(mod_pow2(5, 6), std::invalid_argument);
    CHECK_THROWS_AS(mod_pow2(5, 0), std::invalid_argument);
}

TEST_CASE("shift and selection helpers") {
    CHECK(left_shift(3, 4) == 48);
    CHECK(right_shift(48, 4) == 3);
    CHECK(right_shift(48, 64) == 0);
    CHECK(right_shift(48, 200) == 0);
    CHECK(indicator(true) == 1);
    CHECK(indicator(false) == 0);
    CHECK(elvis(0, 9) == 9);
    CHECK(elvis(4, 9) == 4);
}

TEST_CASE("helpers agree with direct arithmetic on random words") {
    std::mt19937_64 rng{0x5eed};
    for (int trial = 0; trial < 100000; ++trial) {
        // Mix full-range and small words so low bit counts are well covered.
        word x = rng();
        if (trial % 3 == 0) x >>= rng() % 64;
        CAPTURE(x);
        REQUIRE(bit_length(x) == naive_bit_length(x));
        REQUIRE(count_trailing_zeros(x) == naive_ctz(x));
        REQUIRE(bit_floor_safe(x) == naive_bit_floor(x));
        REQUIRE(bit_count(x) == naive_popcount(x));
        const word n = word{1} << (rng() % 63);
        REQUIRE(mod_pow2(x, n) == x % n);
        REQUIRE(mod_pow2(x, n) == x - n * (x / n));
    }
}

TEST_CASE("bit_length brackets its argument") {
    std::mt19937_64 rng{7};
    for (int trial = 0; trial < 10000; ++trial) {
        const word x = rng() >> (rng() % 64);
        if (x == 0) continue;
        const word bl = bit_length(x);
        REQUIRE(bl >= 1);
        // 2^(bl-1) <= x < 2^bl
        REQUIRE((word{1} << (bl - 1)) <= x);
        if (bl < 64) REQUIRE(x < (word{1} << bl));
    }
}

TEST_CASE("count_trailing_zeros is the exact power-of-two divisor") {
    std::mt19937_64 rng{11};
    for (int trial = 0; trial < 10000; ++trial) {
        const word x = rng() >> (rng() % 64);
        if (x == 0) continue;
        const word n = count_trailing_zeros(x);
        REQUIRE(x % (word{1} << n) == 0);
        if (n + 1 < 64) REQUIRE(x % (word{1} << (n + 1)) != 0);
    }
}
