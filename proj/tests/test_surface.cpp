// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dstream/surface.hpp"

using namespace dstream;
using u64 = std::uint64_t;

TEST_CASE("first steady ingest lands at site 0") {
    surface<u64> s{algorithm::steady, surface_spec{32}};
    CHECK(s.ingest(42) == site_selection{0});
    CHECK(s.time() == 1);
    CHECK(s.slots()[0] == 42);
}

TEST_CASE("stretched discards advance the counter without writing") {
    surface<u64> s{algorithm::stretched, surface_spec{32}};
    for (u64 i = 0; i < 33; ++i) s.ingest(i);
    CHECK(s.time() == 33);
    const site_selection k = s.ingest(999);  // K(33) is a discard
    CHECK(!k.has_value());
    CHECK(s.time() == 34);
    for (const u64 v : s.slots()) CHECK(v != 999);
}

TEST_CASE("tilted wraparound overwrites the oldest payload") {
    surface<u64> s{algorithm::tilted, surface_spec{32}};
    for (u64 i = 0; i < 32; ++i) s.ingest(1000 + i);
    CHECK(s.slots()[0] == 1000);
    const site_selection k = s.ingest(7777);  // K(32) = 0
    CHECK(k == site_selection{0});
    CHECK(s.slots()[0] == 7777);
}

TEST_CASE("read_retained on listed examples") {
    SUBCASE("empty at counter zero") {
        surface<u64> s{algorithm::steady, surface_spec{32}};
        CHECK(s.read_retained().empty());
    }
    SUBCASE("steady after three ingests") {
        surface<u64> s{algorithm::steady, surface_spec{32}};
        for (u64 i = 0; i < 3; ++i) s.ingest(i);
        const auto records = s.read_retained();
        REQUIRE(records.size() == 3);
        CHECK(records[0].site == 0);
        CHECK(records[0].ingest_time == 0);
        CHECK(records[1].site == 1);
        CHECK(records[1].ingest_time == 1);
        CHECK(records[2].site == 6);
        CHECK(records[2].ingest_time == 2);
    }
    SUBCASE("tilted stays full at depth") {
        surface<u64> s{algorithm::tilted, surface_spec{16}};
        for (u64 i = 0; i < 3000; ++i) s.ingest(i);
        CHECK(s.read_retained().size() == 16);
    }
}

TEST_CASE("payloads round-trip through ingest and lookup") {
    std::mt19937_64 rng{0xfeed};
    for (const algorithm a :
         {algorithm::steady, algorithm::stretched, algorithm::tilted}) {
        for (const u64 size : {8u, 16u, 32u}) {
            surface<u64> s{a, surface_spec{size}};
            const u64 horizon =
                std::min<u64>(4096, ingest_capacity(a, s.spec()));
            std::vector<u64> history;
            for (u64 T = 0; T <= horizon; ++T) {
                // Retained payloads must be exactly the ones ingested at the
                // decoded times.
                if (T % 64 == 0 || T < 2 * size) {
                    u64 count = 0;
                    for (const auto& rec : s.read_retained()) {
                        REQUIRE(rec.ingest_time < history.size());
                        REQUIRE(rec.payload == history[rec.ingest_time]);
                        ++count;
                    }
                    REQUIRE(count == std::min<u64>(T, size));
                }
                if (T < horizon) {
                    const u64 payload = rng();
                    history.push_back(payload);
                    s.ingest(payload);
                }
            }
        }
    }
}

TEST_CASE("stretched surfaces exhaust after 2^S - 2 ingests") {
    surface<u64> s{algorithm::stretched, surface_spec{8}};
    for (u64 i = 0; i < 254; ++i) s.ingest(i);
    CHECK(s.time() == 254);
    CHECK_THROWS_AS(s.ingest(0), domain_exhausted);
    CHECK(s.time() == 254);  // failed ingest does not advance the counter
}

TEST_CASE("surface construction enforces per-algorithm minimum sizes") {
    CHECK_NOTHROW((surface<u64>{algorithm::steady, surface_spec{4}}));
    CHECK_THROWS_AS((surface<u64>{algorithm::stretched, surface_spec{4}}),
                    std::invalid_argument);
    CHECK_THROWS_AS((surface<u64>{algorithm::tilted, surface_spec{4}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(surface_spec{12}, std::invalid_argument);
    CHECK_THROWS_AS(surface_spec{0}, std::invalid_argument);
}

TEST_CASE("integer surfaces serialize to json and back bit-exactly") {
    surface<u64> s{algorithm::tilted, surface_spec{16}};
    std::mt19937_64 rng{3};
    for (int i = 0; i < 777; ++i) s.ingest(rng());

    const nlohmann::json j = s.to_json();
    CHECK(j.at("algo") == "tilted");
    CHECK(j.at("s") == 16);
    CHECK(j.at("t") == 777);
    CHECK(j.at("slots").size() == 16);

    const auto restored = surface<u64>::from_json(j);
    CHECK(restored.time() == s.time());
    CHECK(restored.slots() == s.slots());
    CHECK(restored.to_json().dump() == j.dump());

    // A restored surface continues identically.
    auto a = s;
    auto b = restored;
    for (int i = 0; i < 100; ++i) {
        const u64 payload = rng();
        CHECK(a.ingest(payload) == b.ingest(payload));
    }
    CHECK(a.slots() == b.slots());
}

TEST_CASE("single-byte payloads cost exactly one byte per slot") {
    surface<std::uint8_t> s{algorithm::steady, surface_spec{64}};
    static_assert(sizeof(s.slots()[0]) == 1);
    for (int i = 0; i < 500; ++i) s.ingest(static_cast<std::uint8_t>(i));
    const auto restored =
        surface<std::uint8_t>::from_json(s.to_json());
    CHECK(restored.slots() == s.slots());
    CHECK(restored.time() == 500);
}

TEST_CASE("byte-string surfaces serialize slots as base64") {
    surface<std::string> s{algorithm::steady, surface_spec{8}};
    s.ingest(std::string{"\x00\x01\xfe", 3});
    s.ingest("plain");
    const nlohmann::json j = s.to_json();
    for (const auto& slot : j.at("slots")) {
        REQUIRE(slot.is_string());
    }
    const auto restored = surface<std::string>::from_json(j);
    CHECK(restored.slots() == s.slots());
    CHECK(restored.slots()[0] == std::string{"\x00\x01\xfe", 3});
}

TEST_CASE("malformed serialized surfaces are rejected") {
    surface<u64> s{algorithm::steady, surface_spec{8}};
    nlohmann::json j = s.to_json();
    j["algo"] = "zigzag";
    CHECK_THROWS_AS(surface<u64>::from_json(j), std::invalid_argument);
    j["algo"] = "steady";
    j["slots"].push_back(0);
    CHECK_THROWS_AS(surface<u64>::from_json(j), std::invalid_argument);
}
