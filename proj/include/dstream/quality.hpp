// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dstream/types.hpp"

// Gap-size computation, the three criterion cost functions, and their
// theoretical lower/upper bounds. Costs are exact rationals, never floats,
// so bound comparisons are decidable rather than tolerance-dependent.
namespace dstream::quality {

// Non-negative rational, kept in lowest terms. Comparisons cross-multiply
// in 128-bit arithmetic and are exact.
struct ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    constexpr ratio() = default;
    ratio(std::uint64_t n, std::uint64_t d);

    static ratio integer(std::uint64_t n) { return ratio{n, 1}; }

    double value() const noexcept {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    std::string str() const;  // "p/q"
};

bool operator==(const ratio& a, const ratio& b) noexcept;
bool operator<(const ratio& a, const ratio& b) noexcept;
inline bool operator!=(const ratio& a, const ratio& b) noexcept { return !(a == b); }
inline bool operator<=(const ratio& a, const ratio& b) noexcept { return !(b < a); }
inline bool operator>(const ratio& a, const ratio& b) noexcept { return b < a; }
inline bool operator>=(const ratio& a, const ratio& b) noexcept { return !(a < b); }

ratio min(const ratio& a, const ratio& b) noexcept;
ratio max(const ratio& a, const ratio& b) noexcept;

// Gap size per record index: zero where retained, else the length of the
// maximal run of discarded items containing it. `retained` must be a sorted,
// duplicate-free subset of [0..T). Runs in O(T) by run-length scanning.
std::vector<std::uint64_t> gap_profile(const std::vector<logical_time>& retained,
                                       logical_time T);

// Criterion costs over the same inputs. Each is the max over its index
// range; an empty range (T too small) yields cost 0 by convention.
//   steady:    max gap size over [0..T)
//   stretched: max gap/ingest-time over [1..T)
//   tilted:    max gap/(T-1-ingest-time) over [0..T-1)
std::uint64_t cost_steady(const std::vector<logical_time>& retained, logical_time T);
ratio cost_stretched(const std::vector<logical_time>& retained, logical_time T);
ratio cost_tilted(const std::vector<logical_time>& retained, logical_time T);

// Steady bounds: floor(T/(S+1)) below, 2*floor(T/S)_bin - 1 above (clamped
// to 0 before the buffer fills, where no gaps are possible).
std::uint64_t bound_steady_lower(std::uint64_t S, logical_time T);
std::uint64_t bound_steady_upper(std::uint64_t S, logical_time T);

// Stretched/tilted upper bounds, exact rationals in the epoch/meta-epoch of
// T. The epoch-0 values degenerate (no discards occur then); both include
// the unconditional caps (1 for stretched, 2 for tilted).
ratio bound_stretched_upper(const surface_spec& spec, logical_time T);
ratio bound_tilted_upper(const surface_spec& spec, logical_time T);

// Strict stretched lower bound for T > S (0 otherwise). The logarithmic
// term is evaluated in extended precision; a floor that lands within 1e-9
// of an integer is resolved downward, which only loosens this lower bound.
ratio bound_stretched_lower(std::uint64_t S, logical_time T);

struct cost_report {
    logical_time time;
    ratio cost;
    ratio lower_bound;
    ratio upper_bound;
};

}  // namespace dstream::quality
