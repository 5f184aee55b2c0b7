// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "dstream/bitops.hpp"
#include "dstream/chronology.hpp"
#include "dstream/types.hpp"

// Recursively nested reservation-segment layout shared by the stretched and
// tilted algorithms. Segments are indexed two ways: logically (fill order,
// by decreasing initial size) and physically (left to right in the buffer).
namespace dstream::segments {

using bitops::word;
namespace bo = bitops;

// Maps a logical bunch index to its physical left-to-right position.
// Bunches at nestedness level v are spaced S >> v apart, offset half a step.
inline word physical_bunch_index(word buffer_size, word logical) noexcept {
    const word v = bo::bit_length(logical);
    const word w = v > 0 ? bo::right_shift(buffer_size, v) : 0;
    const word o = w >> 1;
    const word p = logical - bo::bit_floor_safe(logical);
    return o + w * p;
}

// Leftmost buffer site of the bunch at physical index b_p.
inline site_index bunch_site(word buffer_size, word physical, word correction) noexcept {
    return 2 * physical + bo::bit_count(2 * buffer_size - physical) - 1 - correction;
}

// Placement site for hanoi value h within the logical bunch b_l; h is the
// offset within the bunch.
inline site_index site_of(word buffer_size, word logical, word h) noexcept {
    const word b_p = physical_bunch_index(buffer_size, logical);
    return bunch_site(buffer_size, b_p, bo::indicator(logical > 0)) + h;
}

struct segment_geometry {
    word bunch_logical_index;
    word bunch_physical_index;
    site_index bunch_site;
    word segment_width;  // initial width, at epoch 0
};

// Epoch-0 geometry of the segment with logical index b_l. Initial widths
// recapitulate the hanoi sequence: s+1, H(0)+1, H(1)+1, ... in physical order.
inline segment_geometry geometry_of(const surface_spec& spec, word logical) {
    if (logical >= spec.size / 2) {
        throw std::invalid_argument{"segment index out of range"};
    }
    const word b_p = physical_bunch_index(spec.size, logical);
    const word width = b_p == 0 ? word{spec.log_size} + 1
                                : chronology::hanoi_value(b_p - 1) + 1;
    return {logical, b_p, site_of(spec.size, logical, 0), width};
}

// Mature width reached by a segment initialized at width r before it is
// invaded to elimination.
constexpr word mature_width(word r) noexcept {
    return (word{1} << r) - 1;
}

// Shared precondition for stretched/tilted: S >= 8 and T < 2^S - 1 (capped
// at the word range for S >= 64, where the formal guarantee horizon exceeds
// representable time).
inline void require_domain(const surface_spec& spec, logical_time T, const char* who) {
    if (spec.log_size < 3) {
        throw std::invalid_argument{std::string{who} +
                                    ": surface size must be >= 8"};
    }
    const bool in_domain =
        spec.log_size >= 6 ? T < ~logical_time{0}
                           : T < (logical_time{1} << spec.size) - 1;
    if (!in_domain) {
        throw domain_exhausted{std::string{who} +
                               ": logical time outside supported ingest domain"};
    }
}

// Largest logical time accepted by site selection and lookup.
inline logical_time max_time(const surface_spec& spec) noexcept {
    return spec.log_size >= 6 ? ~logical_time{0} - 1
                              : (logical_time{1} << spec.size) - 2;
}

}  // namespace dstream::segments
