// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dstream/types.hpp"

// Brute-force references, written in deliberately naive style (plain loops,
// direct formula transcription, no bit tricks) so they can be audited
// independently of the optimized decoders they are used to check.
namespace dstream::oracle {

using selector = std::function<site_selection(const surface_spec&, logical_time)>;

// Last-writer-wins replay of site selections over ingests [0..T). This is
// the ground truth every lookup decoder must reproduce exactly.
class replay_state {
public:
    replay_state(algorithm a, surface_spec spec);
    replay_state(selector sel, surface_spec spec);

    // Applies the selection for the current time and advances it.
    void step();
    // Advances until the given time is reached.
    void advance_to(logical_time T);

    logical_time time() const noexcept { return time_; }
    const lookup_table& table() const noexcept { return table_; }

private:
    selector select_;
    surface_spec spec_;
    lookup_table table_;
    logical_time time_ = 0;
};

lookup_table replay(algorithm a, const surface_spec& spec, logical_time T);

// Ingest times retained at time T, ascending; derived from replay.
std::vector<logical_time> replay_retained(algorithm a, const surface_spec& spec,
                                          logical_time T);

// Naive hanoi value: divide T+1 by two until odd.
std::uint64_t hanoi_value_naive(logical_time T);

// Naive meta-epoch: walk interval starts 2^tau - tau until the epoch fits.
std::uint64_t meta_epoch_by_search(std::uint64_t epoch);

// Per-hanoi-value retention quota for stretched/tilted at time T:
// 2^(log2(S) - 1 - tau).
std::uint64_t retention_quota(const surface_spec& spec, logical_time T);

// Goal sets, ascending. goal_steady keeps every item whose hanoi value is
// at least the current epoch; goal_stretched/goal_tilted keep the first /
// last quota instances of every hanoi value.
std::vector<logical_time> goal_steady(const surface_spec& spec, logical_time T);
std::vector<logical_time> goal_stretched(const surface_spec& spec, logical_time T);
std::vector<logical_time> goal_tilted(const surface_spec& spec, logical_time T);

// Closed-form retained-set characterizations, ascending, filtered to [0..T):
//   stretched: { j * 2^h - 1 : j in [1..2n], h in N }
//   tilted:    { 2^h * (floor(T / 2^h) - j) - 1 : j in [0..2n-1], h in N }
std::vector<logical_time> closed_form_stretched(std::uint64_t n, logical_time T);
std::vector<logical_time> closed_form_tilted(std::uint64_t n, logical_time T);

}  // namespace dstream::oracle
