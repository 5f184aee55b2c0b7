// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <cstdint>

#include "dstream/bitops.hpp"
#include "dstream/chronology.hpp"
#include "dstream/segments.hpp"
#include "dstream/types.hpp"

// Tilted curation: favor recency by keeping the last n(T) instances of every
// hanoi value. Uses the stretched reservation layout, but once a hanoi
// value's reservations fill, placement cycles around them as a ring buffer.
namespace dstream::tilted {

using bitops::word;
namespace bo = bitops;

// K(T). Returns site_selection for signature uniformity across algorithms,
// but never discards within the supported domain.
inline site_selection site_select(const surface_spec& spec, logical_time T) {
    segments::require_domain(spec, T, "tilted::site_select");
    const word s = spec.log_size;
    const word bl_T = bo::bit_length(T);
    const word t = bl_T > s ? bl_T - s : 0;  // current epoch
    const word h = chronology::hanoi_value(T);
    const word i = bo::right_shift(T, h + 1);  // hanoi value incidence
    const word tau = chronology::meta_epoch_of(t);
    const word t0 = (word{1} << tau) - tau;              // first epoch of meta-epoch
    const word t1 = (word{1} << (tau + 1)) - (tau + 1);  // first epoch of next one
    // Uninvaded correction: h.v.s the current meta-epoch's invasion has not
    // yet reached still hold double reservations. Unsatisfiable at tau == 0,
    // where t0 == t1 == 1 empties the open interval.
    const word eps_b = bo::indicator(t < h + t0 && h + t0 < t1);
    const word reserved = bo::elvis(bo::right_shift(spec.size, tau + 1 - eps_b), 1);
    const word b_l = i & (reserved - 1);  // incidence cycles the ring of bunches
    return segments::site_of(spec.size, b_l, h);
}

namespace detail {

using u128 = unsigned __int128;

// Filled-buffer decoder, T >= S. On top of the stretched region walk, four
// mutually exclusive correction scenarios handle sites whose hanoi-value
// ring buffer is mid-invasion:
//   A      site in invaded segment, ring still intact (invasion pending)
//   A-hat  site in invaded segment, overwritten later this epoch
//   B      site in invading segment, ring halves later this meta-epoch
//   B-hat  site in invading segment, refilled later this epoch
template <class F>
void lookup_each_filled(const surface_spec& spec, logical_time T, F&& yield) {
    const word s = spec.log_size;
    const word t = bo::bit_length(T) - s;  // >= 1 here
    const word tau0 = chronology::meta_epoch_of(t);
    const word tau1 = tau0 + 1;
    const word t0 = (word{1} << tau0) - tau0;
    const word dt = t - t0;  // epochs elapsed within current meta-epoch
    const logical_time T0 = chronology::epoch_start_time(spec, t);
    const word M_guess = bo::elvis(bo::right_shift(spec.size, tau1), 1);
    const word w0 = (word{1} << tau0) - 1;
    const word w1 = (word{1} << tau1) - 1;
    const word last_epoch_guard = bo::indicator(t < spec.size - s);

    word h_res = 0;
    word m_p = 0;
    for (site_index k = 0; k < spec.size; ++k) {
        const word b_l = bo::count_trailing_zeros(M_guess + m_p);
        const word eps_w = bo::indicator(m_p == 0);
        const word w = w1 + b_l + eps_w;
        const word m_l_guess = bo::right_shift(M_guess + m_p, b_l + 1);

        const bool chi_a = h_res > w - w0 + dt;
        // Time the invader claims this site (epoch-relative for B-hat).
        const u128 invade_time = ((u128{2} * m_l_guess + 1) << h_res) - 1;
        const bool chi_a_hat = h_res == w - w0 + dt && invade_time >= T;
        const bool chi_b = dt < h_res && h_res < w0 && last_epoch_guard;
        const u128 refill_time = u128{T0} + invade_time;
        const bool chi_b_hat = h_res == dt && refill_time >= T && last_epoch_guard;
        assert(static_cast<int>(chi_a) + chi_a_hat + chi_b + chi_b_hat <= 1);

        const bool any = chi_a || chi_a_hat || chi_b || chi_b_hat;
        const word M = M_guess + (any ? M_guess : 0);  // ring not yet halved
        const word h = h_res - ((chi_a || chi_a_hat) ? w - w0 : 0);
        const logical_time Tc = T - ((chi_a_hat || chi_b_hat) ? T - T0 : 0);
        const word m_l = (chi_a || chi_a_hat) ? M_guess + m_p : m_l_guess;

        // Most recent instance of h.v. h before Tc, zero-indexed, then snap
        // down to the instance congruent to this segment's ring position.
        const u128 shifted = (u128{Tc} + (u128{1} << h)) >> (h + 1);
        assert(shifted >= 1);
        const word j = static_cast<word>(shifted) - 1;
        const word i = j - ((j - m_l + M) & (M - 1));
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

template <class F>
void lookup_each(const surface_spec& spec, logical_time T, F&& yield) {
    segments::require_domain(spec, T, "tilted::lookup");
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

}  // namespace dstream::tilted
