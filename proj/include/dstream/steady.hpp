// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <cstdint>
#include <utility>

#include "dstream/bitops.hpp"
#include "dstream/chronology.hpp"
#include "dstream/types.hpp"

// Steady curation: retain items spread evenly over history by keeping only
// the top hanoi values encountered so far. Site selection is O(1); decoding
// every slot's ingest time is O(S). Supports indefinite ingests.
namespace dstream::steady {

using bitops::word;
namespace bo = bitops;

// K(T): buffer index for the item ingested at time T, or nullopt to discard.
inline site_selection site_select(const surface_spec& spec, logical_time T) {
    const word s = spec.log_size;
    // Epoch, allowed to go negative while the buffer is unfilled so that no
    // item is discarded before T = S.
    const std::int64_t t =
        static_cast<std::int64_t>(bo::bit_length(T)) - static_cast<std::int64_t>(s);
    const word h = chronology::hanoi_value(T);
    if (static_cast<std::int64_t>(h) < t) {
        return std::nullopt;  // not a top-n hanoi value this epoch
    }
    const word i = bo::right_shift(T, h + 1);  // hanoi value incidence
    word k_b, o, w;
    if (i == 0) {  // 0th bunch is a special case
        k_b = 0;
        o = 0;
        w = s + 1;
    } else {
        const word j = bo::bit_floor(i) - 1;  // num full-bunch segments
        const word b = bo::bit_length(j);     // num full bunches
        k_b = (s - b + 1) << b;
        w = static_cast<word>(static_cast<std::int64_t>(h) - t + 1);
        o = w * (i - j - 1);
    }
    const word p = h % w;  // within-segment offset
    return k_b + o + p;
}

namespace detail {

using u128 = unsigned __int128;

// Filled-buffer decoder: walks bunches/segments left to right, yielding the
// resident ingest time at every site for T >= S.
template <class F>
void lookup_each_filled(const surface_spec& spec, logical_time T, F&& yield) {
    const word s = spec.log_size;
    const word t = bo::bit_length(T) - s;  // current epoch, >= 1 here
    word b = 0;            // bunch index
    word mb_down = 1;      // segments remaining in bunch
    word km_down = s + 1;  // sites remaining in segment
    for (site_index k = 0; k < spec.size; ++k) {
        const word eps_w = bo::indicator(b == 0);
        const word w = s - b + eps_w;            // segment width
        const word m_p = (word{1} << b) - mb_down;  // segment fill-order index
        const word h_max = t + w - 1;            // max h.v. hosted this epoch
        const word h_cand = h_max - ((h_max + km_down) % w);
        const u128 guess = ((u128{2} * m_p + 1) << h_cand) - 1;
        word h = h_cand;
        if (guess >= T) {
            // Current-epoch item has not arrived; previous reservation
            // cycle's item is still resident.
            assert(h_cand >= w);
            h = h_cand - w;
        }
        yield(k, static_cast<logical_time>(((u128{2} * m_p + 1) << h) - 1));

        km_down = bo::elvis(km_down, w) - 1;
        mb_down -= bo::indicator(km_down == 0);
        if (mb_down == 0 && km_down == 0) ++b;
        if (mb_down == 0) mb_down = word{1} << (b - 1);  // b >= 1 here
    }
}

}  // namespace detail

// L(T): streams (site, ingest time or nullopt) pairs in site order. Before
// the buffer fills, decodes at horizon S and blanks not-yet-seen entries.
template <class F>
void lookup_each(const surface_spec& spec, logical_time T, F&& yield) {
    if (T < spec.size) {
        detail::lookup_each_filled(
            spec, spec.size, [&](site_index k, logical_time v) {
                yield(k, v < T ? lookup_entry{v} : lookup_entry{});
            });
    } else {
        detail::lookup_each_filled(
            spec, T, [&](site_index k, logical_time v) {
                yield(k, lookup_entry{v});
            });
    }
}

inline lookup_table lookup(const surface_spec& spec, logical_time T) {
    lookup_table out(spec.size);
    lookup_each(spec, T, [&](site_index k, lookup_entry v) { out[k] = v; });
    return out;
}

}  // namespace dstream::steady
