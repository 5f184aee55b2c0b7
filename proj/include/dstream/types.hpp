// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dstream {

// Count of data items ingested so far, or the sequence index of one item.
using logical_time = std::uint64_t;

// Buffer slot index, in [0..S).
using site_index = std::uint64_t;

// Index of the buffer slot chosen for an ingest, or nullopt to discard the
// item without storing. Discards are never encoded as index S.
using site_selection = std::optional<site_index>;

// Ingest time decoded for one slot; nullopt while the slot is unfilled.
using lookup_entry = std::optional<logical_time>;

// One entry per buffer slot, in site order.
using lookup_table = std::vector<lookup_entry>;

// Raised when a surface has exhausted its algorithm's supported ingest count.
class domain_exhausted : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Validated buffer geometry: S slots with S = 2^log_size.
struct surface_spec {
    std::uint64_t size;
    std::uint32_t log_size;

    explicit surface_spec(std::uint64_t s) : size{s}, log_size{0} {
        if (!std::has_single_bit(s) || s < 4) {
            throw std::invalid_argument{
                "surface size must be a power of two >= 4, got " +
                std::to_string(s)};
        }
        log_size = static_cast<std::uint32_t>(std::countr_zero(s));
    }
};

enum class algorithm { steady, stretched, tilted };

inline const char* to_string(algorithm a) noexcept {
    switch (a) {
        case algorithm::steady: return "steady";
        case algorithm::stretched: return "stretched";
        case algorithm::tilted: return "tilted";
    }
    return "?";
}

inline std::optional<algorithm> parse_algorithm(const std::string& name) noexcept {
    if (name == "steady") return algorithm::steady;
    if (name == "stretched") return algorithm::stretched;
    if (name == "tilted") return algorithm::tilted;
    return std::nullopt;
}

}  // namespace dstream
