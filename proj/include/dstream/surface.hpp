// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dstream/algorithm.hpp"
#include "dstream/types.hpp"

namespace dstream {

namespace detail {
std::string base64_encode(const std::string& bytes);
std::string base64_decode(const std::string& text);
}  // namespace detail

template <class Item>
struct retained_record {
    site_index site;
    logical_time ingest_time;
    Item payload;
};

// Fixed-capacity container binding an algorithm to item storage. Slots hold
// opaque payloads only; no per-item metadata exists, so slot validity is
// decided solely by lookup emptiness, never by payload inspection. Single
// writer per surface; readers may run concurrently between ingests.
template <class Item>
class surface {
    static_assert(std::is_integral_v<Item> || std::is_same_v<Item, std::string>,
                  "surface payloads are integers or byte strings");

public:
    surface(algorithm a, surface_spec spec)
        : algo_{a}, spec_{spec}, slots_(spec.size) {
        if (spec.size < min_surface_size(a)) {
            throw std::invalid_argument{
                std::string{to_string(a)} + " requires surface size >= " +
                std::to_string(min_surface_size(a))};
        }
    }

    algorithm algo() const noexcept { return algo_; }
    const surface_spec& spec() const noexcept { return spec_; }
    logical_time time() const noexcept { return counter_; }

    // Writes the item at the site selected for the current counter (if any)
    // and advances the counter. Returns the selection for introspection.
    site_selection ingest(Item item) {
        if (counter_ >= ingest_capacity(algo_, spec_)) {
            throw domain_exhausted{
                std::string{to_string(algo_)} +
                " surface exhausted its supported ingest count"};
        }
        const site_selection k = site_select(algo_, spec_, counter_);
        if (k.has_value()) slots_[*k] = std::move(item);
        ++counter_;
        return k;
    }

    // Ingest times per slot, decoded from the current counter alone.
    lookup_table lookup() const { return dstream::lookup(algo_, spec_, counter_); }

    // One record per stored item, ascending site order.
    std::vector<retained_record<Item>> read_retained() const {
        std::vector<retained_record<Item>> out;
        const lookup_table table = lookup();
        for (site_index k = 0; k < spec_.size; ++k) {
            if (table[k].has_value()) {
                out.push_back({k, *table[k], slots_[k]});
            }
        }
        return out;
    }

    const std::vector<Item>& slots() const noexcept { return slots_; }

    // Serialized form: {"algo", "s", "t", "slots"}; slots in site order,
    // encoded as integers or base64 strings by payload type. Round-trips
    // bit-exactly.
    nlohmann::json to_json() const {
        nlohmann::json slots = nlohmann::json::array();
        for (const Item& item : slots_) {
            if constexpr (std::is_integral_v<Item>) {
                slots.push_back(item);
            } else {
                slots.push_back(detail::base64_encode(item));
            }
        }
        return {{"algo", to_string(algo_)},
                {"s", spec_.size},
                {"t", counter_},
                {"slots", std::move(slots)}};
    }

    static surface from_json(const nlohmann::json& j) {
        const auto algo = parse_algorithm(j.at("algo").get<std::string>());
        if (!algo.has_value()) {
            throw std::invalid_argument{"unknown algorithm in serialized surface"};
        }
        surface out{*algo, surface_spec{j.at("s").get<std::uint64_t>()}};
        out.counter_ = j.at("t").get<logical_time>();
        const auto& slots = j.at("slots");
        if (slots.size() != out.spec_.size) {
            throw std::invalid_argument{"serialized slot count does not match size"};
        }
        for (site_index k = 0; k < out.spec_.size; ++k) {
            if constexpr (std::is_integral_v<Item>) {
                out.slots_[k] = slots[k].get<Item>();
            } else {
                out.slots_[k] = detail::base64_decode(slots[k].get<std::string>());
            }
        }
        return out;
    }

private:
    algorithm algo_;
    surface_spec spec_;
    std::vector<Item> slots_;
    logical_time counter_ = 0;
};

}  // namespace dstream
