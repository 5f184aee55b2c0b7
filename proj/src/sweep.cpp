// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#include "dstream/sweep.hpp"

#include <algorithm>
#include <cstdint>

#include "dstream/algorithm.hpp"
#include "dstream/chronology.hpp"
#include "dstream/oracle.hpp"

namespace dstream::sweep {

namespace {

using u64 = std::uint64_t;

constexpr u64 min_chunk = 1024;

std::string entry_str(const lookup_entry& e) {
    return e.has_value() ? std::to_string(*e) : "null";
}

template <class Fn>
void for_each_chunk(u64 chunks, execution exec, Fn&& fn) {
#ifdef _OPENMP
    if (exec == execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
            fn(static_cast<u64>(c));
        }
        return;
    }
#else
    (void)exec;
#endif
    for (u64 c = 0; c < chunks; ++c) fn(c);
}

u64 chunk_count(u64 n, execution exec) {
    if (exec == execution::serial) return 1;
    return std::max<u64>(1, std::min<u64>(64, n / min_chunk + 1));
}

oracle::selector make_selector(const validate_config& cfg) {
    const algorithm a = cfg.algo;
    if (!cfg.inject_fault_at.has_value()) {
        return [a](const surface_spec& s, logical_time t) {
            return site_select(a, s, t);
        };
    }
    const logical_time fault = *cfg.inject_fault_at;
    return [a, fault](const surface_spec& s, logical_time t) {
        site_selection k = site_select(a, s, t);
        if (t == fault) {
            k = k.has_value() ? site_selection{(*k + 1) % s.size}
                              : site_selection{0};
        }
        return k;
    };
}

void keep_earliest(std::optional<validation_failure>& best,
                   const std::optional<validation_failure>& candidate) {
    if (candidate.has_value() &&
        (!best.has_value() || candidate->time < best->time)) {
        best = candidate;
    }
}

// Chunked driver over T in [0..horizon]: reconstructs the replay prefix at
// each chunk start, then steps through the chunk invoking
// body(T, replay_table). The earliest failure across chunks wins, so the
// merged result is independent of scheduling order.
template <class Body>
std::optional<validation_failure> run_with_replay(const validate_config& cfg,
                                                  Body&& body) {
    const u64 n = cfg.horizon + 1;
    const u64 chunks = chunk_count(n, cfg.exec);
    const u64 per = (n + chunks - 1) / chunks;
    const oracle::selector sel = make_selector(cfg);

    std::vector<std::optional<validation_failure>> results(chunks);
    for_each_chunk(chunks, cfg.exec, [&](u64 c) {
        const logical_time begin = c * per;
        const logical_time end = std::min<u64>(n, begin + per);
        if (begin >= end) return;
        oracle::replay_state state{sel, cfg.spec};
        state.advance_to(begin);
        for (logical_time T = begin; T < end; ++T) {
            if (auto failure = body(T, state.table())) {
                results[c] = std::move(failure);
                return;
            }
            state.step();
        }
    });

    std::optional<validation_failure> best;
    for (const auto& r : results) keep_earliest(best, r);
    return best;
}

// Plain chunked driver without replay state, for per-T independent checks.
template <class Body>
std::optional<validation_failure> run_independent(const validate_config& cfg,
                                                  Body&& body) {
    const u64 n = cfg.horizon + 1;
    const u64 chunks = chunk_count(n, cfg.exec);
    const u64 per = (n + chunks - 1) / chunks;

    std::vector<std::optional<validation_failure>> results(chunks);
    for_each_chunk(chunks, cfg.exec, [&](u64 c) {
        const logical_time begin = c * per;
        const logical_time end = std::min<u64>(n, begin + per);
        for (logical_time T = begin; T < end; ++T) {
            if (auto failure = body(T)) {
                results[c] = std::move(failure);
                return;
            }
        }
    });

    std::optional<validation_failure> best;
    for (const auto& r : results) keep_earliest(best, r);
    return best;
}

quality::cost_report report_at(algorithm algo, const surface_spec& spec,
                               logical_time T);

void require_horizon(const validate_config& cfg) {
    if (cfg.horizon > max_lookup_time(cfg.algo, cfg.spec)) {
        throw std::invalid_argument{
            "horizon exceeds the algorithm's supported domain"};
    }
}

}  // namespace

std::vector<logical_time> goal_set(algorithm algo, const surface_spec& spec,
                                   logical_time T) {
    std::vector<logical_time> out;
    const u64 epoch = chronology::epoch_of(spec, T);
    // Instance i of hanoi value h falls at (2i+1)*2^h - 1.
    if (algo == algorithm::steady) {
        for (u64 h = epoch; h < bitops::word_width; ++h) {
            const u64 count = chronology::hanoi_count(T, h);
            if (count == 0) break;  // first instance of every higher h.v. is later
            for (u64 i = 0; i < count; ++i) {
                out.push_back(((2 * i + 1) << h) - 1);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    const u64 tau =
        std::min<u64>(chronology::meta_epoch_of(epoch), spec.log_size - 1);
    const u64 quota = u64{1} << (spec.log_size - 1 - tau);
    for (u64 h = 0; h < bitops::word_width && (logical_time{1} << h) - 1 < T; ++h) {
        const u64 count = chronology::hanoi_count(T, h);
        const u64 keep = std::min(quota, count);
        for (u64 i = 0; i < keep; ++i) {
            const u64 instance =
                algo == algorithm::stretched ? i : count - 1 - i;
            out.push_back(((2 * instance + 1) << h) - 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

quality::cost_report report_at(algorithm algo, const surface_spec& spec,
                               logical_time T) {
    const std::vector<logical_time> retained = lookup_retained(algo, spec, T);
    using quality::ratio;
    switch (algo) {
        case algorithm::steady:
            return {T, ratio::integer(quality::cost_steady(retained, T)),
                    ratio::integer(quality::bound_steady_lower(spec.size, T)),
                    ratio::integer(quality::bound_steady_upper(spec.size, T))};
        case algorithm::stretched:
            return {T, quality::cost_stretched(retained, T),
                    quality::bound_stretched_lower(spec.size, T),
                    quality::bound_stretched_upper(spec, T)};
        case algorithm::tilted:
            // The strict stretched lower bound applies to tilted cost too.
            return {T, quality::cost_tilted(retained, T),
                    quality::bound_stretched_lower(spec.size, T),
                    quality::bound_tilted_upper(spec, T)};
    }
    throw std::invalid_argument{"unknown algorithm"};
}

}  // namespace

std::vector<logical_time> lookup_retained(algorithm algo,
                                          const surface_spec& spec,
                                          logical_time T) {
    std::vector<logical_time> out;
    for (const lookup_entry& e : lookup(algo, spec, T)) {
        if (e.has_value()) out.push_back(*e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<validation_failure> check_roundtrip(const validate_config& cfg) {
    require_horizon(cfg);
    return run_with_replay(
        cfg,
        [&](logical_time T,
            const lookup_table& replayed) -> std::optional<validation_failure> {
            const lookup_table decoded = lookup(cfg.algo, cfg.spec, T);
            for (site_index k = 0; k < cfg.spec.size; ++k) {
                if (decoded[k] != replayed[k]) {
                    return validation_failure{"roundtrip", T, k,
                                              entry_str(replayed[k]),
                                              entry_str(decoded[k])};
                }
            }
            return std::nullopt;
        });
}

std::optional<validation_failure> check_retention(const validate_config& cfg) {
    require_horizon(cfg);
    return run_with_replay(
        cfg,
        [&](logical_time T,
            const lookup_table& replayed) -> std::optional<validation_failure> {
            std::vector<logical_time> retained;
            for (const lookup_entry& e : replayed) {
                if (e.has_value()) retained.push_back(*e);
            }
            std::sort(retained.begin(), retained.end());
            for (const logical_time item : goal_set(cfg.algo, cfg.spec, T)) {
                if (!std::binary_search(retained.begin(), retained.end(), item)) {
                    return validation_failure{"retention", T, item,
                                              "item retained", "item missing"};
                }
            }
            return std::nullopt;
        });
}

std::optional<validation_failure> check_bounds(const validate_config& cfg) {
    require_horizon(cfg);
    const u64 S = cfg.spec.size;
    return run_independent(
        cfg, [&](logical_time T) -> std::optional<validation_failure> {
            const quality::cost_report row = report_at(cfg.algo, cfg.spec, T);
            const u64 epoch = chronology::epoch_of(cfg.spec, T);
            const bool check_upper =
                cfg.algo == algorithm::steady ? T >= S : epoch >= 1;
            const bool check_lower = cfg.algo == algorithm::steady || T > S;
            if (check_upper && row.upper_bound < row.cost) {
                return validation_failure{"bounds", T, 0,
                                          "cost <= " + row.upper_bound.str(),
                                          row.cost.str()};
            }
            if (check_lower && row.cost < row.lower_bound) {
                return validation_failure{"bounds", T, 0,
                                          "cost >= " + row.lower_bound.str(),
                                          row.cost.str()};
            }
            return std::nullopt;
        });
}

std::optional<validation_failure> validate(const validate_config& cfg) {
    std::optional<validation_failure> best = check_roundtrip(cfg);
    keep_earliest(best, check_retention(cfg));
    keep_earliest(best, check_bounds(cfg));
    return best;
}

std::vector<quality::cost_report> quality_curve(algorithm algo,
                                                const surface_spec& spec,
                                                logical_time horizon,
                                                logical_time stride,
                                                execution exec) {
    if (stride == 0) throw std::invalid_argument{"stride must be >= 1"};
    const u64 rows = horizon / stride + 1;
    std::vector<quality::cost_report> out(rows);
    const u64 chunks = chunk_count(rows, exec);
    const u64 per = (rows + chunks - 1) / chunks;
    for_each_chunk(chunks, exec, [&](u64 c) {
        const u64 begin = c * per;
        const u64 end = std::min<u64>(rows, begin + per);
        for (u64 r = begin; r < end; ++r) {
            out[r] = report_at(algo, spec, r * stride);
        }
    });
    return out;
}

}  // namespace dstream::sweep
