// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>

#include "dstream/bitops.hpp"
#include "dstream/types.hpp"

// Time-derived quantities shared by all three curation algorithms: hanoi
// value, epoch, meta-epoch, and their boundary times.
namespace dstream::chronology {

using bitops::word;

// H(T): number of trailing zeros of T+1 (OEIS A007814 shifted).
// For T == UINT64_MAX the ctz-of-zero convention yields 64, which is the
// mathematically correct hanoi value of 2^64 - 1.
constexpr word hanoi_value(logical_time t) noexcept {
    return bitops::count_trailing_zeros(t + 1);
}

// Number of times hanoi value h occurs at ingest times < t, i.e.
// floor((t + 2^h) / 2^(h+1)), computed without overflow.
constexpr word hanoi_count(logical_time t, word h) noexcept {
    if (h >= bitops::word_width) return 0;
    return bitops::right_shift(t, h + 1) + ((t >> h) & 1);
}

// Epoch of logical time: 0 for T < S, floor(log2 T) - log2(S) + 1 otherwise.
constexpr word epoch_of(const surface_spec& spec, logical_time t) noexcept {
    const word bl = bitops::bit_length(t);
    return bl > spec.log_size ? bl - spec.log_size : 0;
}

// Meta-epoch of an epoch, via the bit formula used by the site-selection
// listings. The interval-search oracle in dstream::oracle must agree.
constexpr word meta_epoch_of(word epoch) noexcept {
    const bool correction =
        bitops::bit_floor_safe(2 * epoch) > epoch + bitops::bit_length(epoch);
    return bitops::bit_length(epoch) - bitops::indicator(correction);
}

// First epoch of meta-epoch tau >= 1: 2^tau - tau. Meta-epoch 0 is the
// single epoch 0 by definition and has no start formula.
constexpr word meta_epoch_start_epoch(word tau) {
    if (tau == 0) {
        throw std::invalid_argument{"meta_epoch_start_epoch: tau must be >= 1"};
    }
    assert(tau < bitops::word_width);
    return (word{1} << tau) - tau;
}

// First logical time of an epoch: 0 for epoch 0, 2^(epoch + log2(S) - 1)
// for later epochs.
constexpr logical_time epoch_start_time(const surface_spec& spec, word epoch) {
    if (epoch == 0) return 0;
    const word shift = epoch + spec.log_size - 1;
    assert(shift < bitops::word_width);
    return logical_time{1} << shift;
}

}  // namespace dstream::chronology
