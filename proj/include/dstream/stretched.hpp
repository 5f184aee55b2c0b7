// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <cstdint>

#include "dstream/bitops.hpp"
#include "dstream/chronology.hpp"
#include "dstream/segments.hpp"
#include "dstream/types.hpp"

// Stretched curation: favor early history by retaining the first n(T)
// instances of every hanoi value, with n(T) halving at meta-epoch
// boundaries as inner reservation segments are invaded away.
namespace dstream::stretched {

using bitops::word;
namespace bo = bitops;

// K(T). Discards once the incidence of H(T) meets the per-hanoi-value
// reservation count; otherwise the incidence is the logical bunch index.
inline site_selection site_select(const surface_spec& spec, logical_time T) {
    segments::require_domain(spec, T, "stretched::site_select");
    const word s = spec.log_size;
    const word bl_T = bo::bit_length(T);
    const word t = bl_T > s ? bl_T - s : 0;  // current epoch
    const word h = chronology::hanoi_value(T);
    const word i = bo::right_shift(T, h + 1);  // hanoi value incidence
    const word tau = chronology::meta_epoch_of(t);
    // Reservation count per hanoi value. The max(1, ...) guard keeps the
    // final meta-epoch's single surviving segment addressable. Unlike
    // tilted, no uninvaded correction applies here: it could only admit
    // extra instances into segments that invasion is about to consume, and
    // the first-n retention guarantee holds without them.
    const word reserved = bo::elvis(bo::right_shift(spec.size, tau + 1), 1);
    if (i >= reserved) {
        return std::nullopt;  // seen more than sites reserved to this h.v.
    }
    return segments::site_of(spec.size, i, h);
}

namespace detail {

using u128 = unsigned __int128;

// Filled-buffer decoder, T >= S. Regions pair each surviving (invading)
// segment with the invaded sites it absorbs during the current meta-epoch.
template <class F>
void lookup_each_filled(const surface_spec& spec, logical_time T, F&& yield) {
    const word s = spec.log_size;
    const word t = bo::bit_length(T) - s;  // >= 1 here
    const word tau0 = chronology::meta_epoch_of(t);
    const word tau1 = tau0 + 1;
    // Number of invading segments present during the current meta-epoch.
    const word M = bo::elvis(bo::right_shift(spec.size, tau1), 1);
    const word w0 = (word{1} << tau0) - 1;  // smallest segment size at meta-epoch outset
    const word w1 = (word{1} << tau1) - 1;  // ... at next meta-epoch outset

    word h_res = 0;  // reserved hanoi value at current site
    word m_p = 0;    // physical (left-to-right) region index
    for (site_index k = 0; k < spec.size; ++k) {
        const word b_l = bo::count_trailing_zeros(M + m_p);
        const word eps_w = bo::indicator(m_p == 0);
        const word w = w1 + b_l + eps_w;  // region size after this meta-epoch's growth
        const word m_l = bo::right_shift(M + m_p, b_l + 1);  // logical segment index

        const u128 guess = ((u128{2} * m_l + 1) << h_res) - 1;
        word h = h_res;
        word i = m_l;
        if (guess >= T) {
            // Assigned instance not yet seen; the site still holds the item
            // from the segment absorbed into this region.
            assert(h_res >= w - w0);
            h = h_res - (w - w0);
            i = m_p + M;
        }
        const u128 value = ((u128{2} * i + 1) << h) - 1;
        assert(value < T);
        yield(k, static_cast<logical_time>(value));

        ++h_res;
        if (h_res == w) {
            ++m_p;
            h_res = 0;
        }
    }
}

}  // namespace detail

// L(T): streams (site, entry) pairs. Decodes at horizon S while the buffer
// is unfilled, blanking not-yet-seen entries.
template <class F>
void lookup_each(const surface_spec& spec, logical_time T, F&& yield) {
    segments::require_domain(spec, T, "stretched::lookup");
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

}  // namespace dstream::stretched
