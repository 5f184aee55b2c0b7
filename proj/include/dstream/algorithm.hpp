// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "dstream/steady.hpp"
#include "dstream/stretched.hpp"
#include "dstream/tilted.hpp"
#include "dstream/types.hpp"

namespace dstream {

inline site_selection site_select(algorithm a, const surface_spec& spec,
                                  logical_time T) {
    switch (a) {
        case algorithm::steady: return steady::site_select(spec, T);
        case algorithm::stretched: return stretched::site_select(spec, T);
        case algorithm::tilted: return tilted::site_select(spec, T);
    }
    throw std::invalid_argument{"unknown algorithm"};
}

inline lookup_table lookup(algorithm a, const surface_spec& spec,
                           logical_time T) {
    switch (a) {
        case algorithm::steady: return steady::lookup(spec, T);
        case algorithm::stretched: return stretched::lookup(spec, T);
        case algorithm::tilted: return tilted::lookup(spec, T);
    }
    throw std::invalid_argument{"unknown algorithm"};
}

// Smallest supported surface size; steady alone accepts S = 4.
inline std::uint64_t min_surface_size(algorithm a) noexcept {
    return a == algorithm::steady ? 4 : 8;
}

// Largest counter value a surface may reach. Stretched/tilted accept
// 2^S - 2 ingests; steady ingests indefinitely (any representable time).
inline logical_time ingest_capacity(algorithm a, const surface_spec& spec) noexcept {
    if (a == algorithm::steady) return ~logical_time{0};
    return segments::max_time(spec);
}

// Largest T accepted by site_select/lookup for this algorithm.
inline logical_time max_lookup_time(algorithm a, const surface_spec& spec) noexcept {
    if (a == algorithm::steady) return ~logical_time{0};
    return segments::max_time(spec);
}

}  // namespace dstream
