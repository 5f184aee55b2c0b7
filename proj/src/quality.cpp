// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#include "dstream/quality.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dstream/bitops.hpp"
#include "dstream/chronology.hpp"

namespace dstream::quality {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

ratio::ratio(u64 n, u64 d) : num{n}, den{d} {
    if (d == 0) throw std::invalid_argument{"ratio: zero denominator"};
    const u64 g = std::gcd(n, d);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
}

std::string ratio::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator==(const ratio& a, const ratio& b) noexcept {
    return a.num == b.num && a.den == b.den;
}

bool operator<(const ratio& a, const ratio& b) noexcept {
    return u128{a.num} * b.den < u128{b.num} * a.den;
}

ratio min(const ratio& a, const ratio& b) noexcept { return b < a ? b : a; }
ratio max(const ratio& a, const ratio& b) noexcept { return a < b ? b : a; }

namespace {

void require_sorted_subset(const std::vector<logical_time>& retained,
                           logical_time T) {
    logical_time prev = 0;
    bool first = true;
    for (const logical_time r : retained) {
        if (r >= T || (!first && r <= prev)) {
            throw std::invalid_argument{
                "retained set must be sorted, unique, and within [0..T)"};
        }
        prev = r;
        first = false;
    }
}

// Invokes fn(start, length) for each maximal run of discarded indices.
template <class F>
void for_each_gap_run(const std::vector<logical_time>& retained, logical_time T,
                      F&& fn) {
    logical_time cursor = 0;
    for (const logical_time r : retained) {
        if (r > cursor) fn(cursor, r - cursor);
        cursor = r + 1;
    }
    if (T > cursor) fn(cursor, T - cursor);
}

}  // namespace

std::vector<u64> gap_profile(const std::vector<logical_time>& retained,
                             logical_time T) {
    require_sorted_subset(retained, T);
    std::vector<u64> profile(T, 0);
    for_each_gap_run(retained, T, [&](logical_time start, u64 length) {
        for (u64 i = 0; i < length; ++i) profile[start + i] = length;
    });
    return profile;
}

u64 cost_steady(const std::vector<logical_time>& retained, logical_time T) {
    require_sorted_subset(retained, T);
    u64 worst = 0;
    for_each_gap_run(retained, T, [&](logical_time, u64 length) {
        if (length > worst) worst = length;
    });
    return worst;
}

ratio cost_stretched(const std::vector<logical_time>& retained, logical_time T) {
    require_sorted_subset(retained, T);
    // Within a run the ratio gap/item is maximized at the smallest item >= 1.
    ratio worst{};
    for_each_gap_run(retained, T, [&](logical_time start, u64 length) {
        const logical_time item = start > 0 ? start : 1;
        if (item < start + length) {
            worst = max(worst, ratio{length, item});
        }
    });
    return worst;
}

ratio cost_tilted(const std::vector<logical_time>& retained, logical_time T) {
    require_sorted_subset(retained, T);
    if (T < 2) return ratio{};
    // Within a run the ratio gap/(T-1-item) is maximized at the largest
    // item <= T-2.
    ratio worst{};
    for_each_gap_run(retained, T, [&](logical_time start, u64 length) {
        const logical_time last = start + length - 1;
        const logical_time item = last <= T - 2 ? last : T - 2;
        if (item >= start) {
            worst = max(worst, ratio{length, T - 1 - item});
        }
    });
    return worst;
}

u64 bound_steady_lower(u64 S, logical_time T) { return T / (S + 1); }

u64 bound_steady_upper(u64 S, logical_time T) {
    const u64 doubled = 2 * bitops::bit_floor_safe(T / S);
    return doubled == 0 ? 0 : doubled - 1;
}

ratio bound_stretched_upper(const surface_spec& spec, logical_time T) {
    const u64 t = chronology::epoch_of(spec, T);
    const u64 tau = chronology::meta_epoch_of(t);
    ratio bound = min(ratio{u64{1} << (tau + 1), spec.size},
                      ratio{2 * (t + spec.log_size), spec.size});
    bound = min(bound, ratio{4 * t, spec.size});
    return min(bound, ratio::integer(1));
}

ratio bound_tilted_upper(const surface_spec& spec, logical_time T) {
    const ratio cap = ratio::integer(2);
    const u64 t = chronology::epoch_of(spec, T);
    if (t == 0) return cap;  // epoch 0 has no discards; only the cap applies
    const u64 tau = chronology::meta_epoch_of(t);
    ratio m = max(ratio{spec.size, 2 * (t + spec.log_size)},
                  ratio{spec.size, 4 * t});
    m = max(m, ratio{spec.size, u64{1} << (tau + 1)});
    if (2 * m.num <= m.den) {
        // Past the last fully-characterized epoch (t >= S - log2 S) the
        // ratio formula is vacuous; only the cap applies.
        return cap;
    }
    // 1 / (m - 1/2) == 2*den / (2*num - den).
    return min(ratio{2 * m.den, 2 * m.num - m.den}, cap);
}

ratio bound_stretched_lower(u64 S, logical_time T) {
    if (T <= S) return ratio{};
    const long double Tl = static_cast<long double>(T);
    const long double Sl = static_cast<long double>(S);
    const long double inner =
        (Tl - Sl) * (std::pow(Tl, 1.0L / Sl) - 1.0L) + 1.0L;
    const long double v = Sl * (std::log(inner) / std::log(Tl));
    long double f = std::floor(v);
    // Near-integer boundary: resolve downward so the reported lower bound
    // can only be looser than the true one.
    if (v - f < 1e-9L && f > 0) f -= 1;
    const u64 q = static_cast<u64>(f);
    return ratio{1, 1 + S - q};
}

}  // namespace dstream::quality
