// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdint>

#include "dstream/chronology.hpp"
#include "dstream/oracle.hpp"

using namespace dstream;
using namespace dstream::chronology;
using u64 = std::uint64_t;

TEST_CASE("hanoi value first terms") {
    // 0, 1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0, 1, 0, 4, ...
    const u64 expected[] = {0, 1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0, 1, 0, 4, 0};
    for (u64 t = 0; t < std::size(expected); ++t) {
        CHECK(hanoi_value(t) == expected[t]);
    }
}

TEST_CASE("hanoi value matches the naive oracle") {
    for (u64 t = 0; t < 1 << 16; ++t) {
        REQUIRE(hanoi_value(t) == oracle::hanoi_value_naive(t));
    }
}

TEST_CASE("hanoi recurrence: H(2T+1) = H(T)+1 and H(2T) = 0") {
    for (u64 t = 0; t < 1 << 15; ++t) {
        REQUIRE(hanoi_value(2 * t + 1) == hanoi_value(t) + 1);
        REQUIRE(hanoi_value(2 * t) == 0);
    }
}

TEST_CASE("hanoi incidence formula matches brute force") {
    for (u64 h = 0; h <= 17; ++h) {
        u64 seen = 0;
        for (u64 t = 0; t <= u64{1} << 16; ++t) {
            REQUIRE(hanoi_count(t, h) == seen);
            if (t < u64{1} << 16 && hanoi_value(t) == h) ++seen;
        }
    }
}

TEST_CASE("epoch_of on listed examples") {
    const surface_spec s32{32};
    CHECK(epoch_of(s32, 31) == 0);
    CHECK(epoch_of(s32, 32) == 1);
    CHECK(epoch_of(s32, 0) == 0);
    const surface_spec s16{16};
    CHECK(epoch_of(s16, 0) == 0);
}

TEST_CASE("epoch_of is nondecreasing and steps exactly at epoch starts") {
    const surface_spec spec{16};
    u64 prev = 0;
    for (u64 t = 1; t <= 1 << 14; ++t) {
        const u64 e = epoch_of(spec, t);
        REQUIRE(e >= prev);
        REQUIRE(e - prev <= 1);
        if (e != prev) {
            REQUIRE(t == epoch_start_time(spec, e));
        }
        prev = e;
    }
}

TEST_CASE("epoch_start_time on listed examples") {
    CHECK(epoch_start_time(surface_spec{32}, 1) == 32);
    CHECK(epoch_start_time(surface_spec{32}, 2) == 64);
    CHECK(epoch_start_time(surface_spec{16}, 0) == 0);
}

TEST_CASE("meta_epoch_of on listed examples") {
    CHECK(meta_epoch_of(0) == 0);
    CHECK(meta_epoch_of(1) == 1);
    CHECK(meta_epoch_of(4) == 2);  // start epochs run 1, 2, 5, 12, ...
}

TEST_CASE("meta-epoch bit formula equals interval search") {
    for (u64 t = 0; t <= 61; ++t) {
        REQUIRE(meta_epoch_of(t) == oracle::meta_epoch_by_search(t));
    }
}

TEST_CASE("meta_epoch_start_epoch on listed examples") {
    CHECK(meta_epoch_start_epoch(1) == 1);
    CHECK(meta_epoch_start_epoch(3) == 5);
    CHECK(meta_epoch_start_epoch(5) == 27);
    CHECK_THROWS_AS(meta_epoch_start_epoch(0), std::invalid_argument);
}

TEST_CASE("meta-epoch intervals partition the epochs") {
    // tau = 0 covers exactly {0}; tau >= 1 covers [2^tau-tau .. 2^(tau+1)-(tau+1)).
    for (u64 t = 0; t <= 10000; ++t) {
        const u64 tau = meta_epoch_of(t);
        if (t == 0) {
            REQUIRE(tau == 0);
        } else {
            REQUIRE(tau >= 1);
            REQUIRE(meta_epoch_start_epoch(tau) <= t);
            REQUIRE(t < meta_epoch_start_epoch(tau + 1));
        }
    }
}

TEST_CASE("meta-epoch upper bounds over the supported epoch range") {
    // tau <= min(log2(t + log2 S), log2(t) + 1) for t in [1..S - log2 S).
    for (const u64 size : {16u, 32u, 64u}) {
        const surface_spec spec{size};
        for (u64 t = 1; t < spec.size - spec.log_size; ++t) {
            const u64 tau = meta_epoch_of(t);
            CAPTURE(size);
            CAPTURE(t);
            REQUIRE((u64{1} << tau) <= t + spec.log_size);
            REQUIRE((u64{1} << (tau - 1)) <= t);
        }
    }
}
