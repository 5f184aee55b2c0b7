// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#include "dstream/oracle.hpp"

#include <algorithm>
#include <cassert>

#include "dstream/algorithm.hpp"
#include "dstream/chronology.hpp"

namespace dstream::oracle {

namespace {
using u128 = unsigned __int128;
}  // namespace


replay_state::replay_state(algorithm a, surface_spec spec)
    : select_{[a](const surface_spec& s, logical_time t) {
          return site_select(a, s, t);
      }},
      spec_{spec},
      table_(spec.size) {}

replay_state::replay_state(selector sel, surface_spec spec)
    : select_{std::move(sel)}, spec_{spec}, table_(spec.size) {}

void replay_state::step() {
    const site_selection k = select_(spec_, time_);
    if (k.has_value()) {
        assert(*k < spec_.size);
        table_[*k] = time_;
    }
    ++time_;
}

void replay_state::advance_to(logical_time T) {
    while (time_ < T) step();
}

lookup_table replay(algorithm a, const surface_spec& spec, logical_time T) {
    replay_state state{a, spec};
    state.advance_to(T);
    return state.table();
}

std::vector<logical_time> replay_retained(algorithm a, const surface_spec& spec,
                                          logical_time T) {
    std::vector<logical_time> out;
    for (const lookup_entry& e : replay(a, spec, T)) {
        if (e.has_value()) out.push_back(*e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t hanoi_value_naive(logical_time T) {
    logical_time x = T + 1;
    std::uint64_t n = 0;
    while (x % 2 == 0) {
        x /= 2;
        ++n;
    }
    return n;
}

std::uint64_t meta_epoch_by_search(std::uint64_t epoch) {
    if (epoch == 0) return 0;
    // Meta-epoch tau >= 1 spans epochs [2^tau - tau .. 2^(tau+1) - (tau+1)).
    std::uint64_t tau = 1;
    while ((std::uint64_t{1} << (tau + 1)) - (tau + 1) <= epoch) ++tau;
    return tau;
}

std::uint64_t retention_quota(const surface_spec& spec, logical_time T) {
    std::uint64_t tau = meta_epoch_by_search(chronology::epoch_of(spec, T));
    // The final epoch of the extended domain reaches tau == log2(S); the
    // per-hanoi-value reservation count floors at one site there, mirroring
    // the max(1, ...) guard in site selection.
    if (tau >= spec.log_size) tau = spec.log_size - 1;
    return std::uint64_t{1} << (spec.log_size - 1 - tau);
}

std::vector<logical_time> goal_steady(const surface_spec& spec, logical_time T) {
    const std::uint64_t epoch = chronology::epoch_of(spec, T);
    std::vector<logical_time> out;
    for (logical_time item = 0; item < T; ++item) {
        if (hanoi_value_naive(item) >= epoch) out.push_back(item);
    }
    return out;
}

std::vector<logical_time> goal_stretched(const surface_spec& spec, logical_time T) {
    const std::uint64_t quota = retention_quota(spec, T);
    std::vector<logical_time> out;
    for (std::uint64_t h = 0; h < 64 && (logical_time{1} << h) - 1 < T; ++h) {
        // i-th instance of hanoi value h arrives at i * 2^(h+1) + 2^h - 1.
        const u128 period = u128{2} << h;
        for (std::uint64_t i = 0; i < quota; ++i) {
            const u128 item = i * period + period / 2 - 1;
            if (item >= T) break;
            out.push_back(static_cast<logical_time>(item));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<logical_time> goal_tilted(const surface_spec& spec, logical_time T) {
    const std::uint64_t quota = retention_quota(spec, T);
    std::vector<logical_time> out;
    for (std::uint64_t h = 0; h < 64 && (logical_time{1} << h) - 1 < T; ++h) {
        const u128 period = u128{2} << h;
        // Latest instance of hanoi value h before T.
        const u128 latest =
            ((T - period / 2) / period) * period + period / 2 - 1;
        for (std::uint64_t i = 0; i < quota; ++i) {
            if (latest < i * period) break;
            out.push_back(static_cast<logical_time>(latest - i * period));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<logical_time> closed_form_stretched(std::uint64_t n, logical_time T) {
    std::vector<logical_time> out;
    for (std::uint64_t h = 0; h < 64 && (logical_time{1} << h) - 1 < T; ++h) {
        for (std::uint64_t j = 1; j <= 2 * n; ++j) {
            const u128 item = (u128{j} << h) - 1;
            if (item >= T) break;
            out.push_back(static_cast<logical_time>(item));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<logical_time> closed_form_tilted(std::uint64_t n, logical_time T) {
    std::vector<logical_time> out;
    for (std::uint64_t h = 0; h < 64 && (logical_time{1} << h) <= T; ++h) {
        const logical_time pow = logical_time{1} << h;
        const logical_time count = T / pow;
        for (std::uint64_t j = 0; j < 2 * n && j < count; ++j) {
            const logical_time value = pow * (count - j) - 1;
            if (value < T) out.push_back(value);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace dstream::oracle
