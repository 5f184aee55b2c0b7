// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dstream/quality.hpp"
#include "dstream/types.hpp"

// Bulk kernels over ranges of logical time. Every per-time evaluation is an
// independent pure-function call, so the kernels parallelize over chunks of
// the time range with OpenMP; serial twins of each kernel are kept as the
// reference implementation and compared in tests and in the benchmark.
namespace dstream::sweep {

enum class execution { serial, parallel };

// First point where a validation suite disagreed, with enough context to
// reproduce: suite name, time, slot (or item) index, expected vs actual.
struct validation_failure {
    std::string suite;
    logical_time time = 0;
    std::uint64_t site = 0;
    std::string expected;
    std::string actual;
};

struct validate_config {
    algorithm algo;
    surface_spec spec;
    logical_time horizon;  // checks run for every T <= horizon
    execution exec = execution::parallel;
    // Test fixture: deterministically corrupts the replayed selection at
    // this time so the round-trip suite must report a divergence.
    std::optional<logical_time> inject_fault_at{};
};

// Round-trip: lookup equals last-writer-wins replay, exactly, at every T.
std::optional<validation_failure> check_roundtrip(const validate_config& cfg);

// Retention: the algorithm's goal set is contained in the replayed retained
// set at every T.
std::optional<validation_failure> check_retention(const validate_config& cfg);

// Bounds: measured criterion cost stays within the theoretical lower/upper
// bounds at every T in the guarantee domain.
std::optional<validation_failure> check_bounds(const validate_config& cfg);

// Runs all three suites; returns the failure with the smallest time.
std::optional<validation_failure> validate(const validate_config& cfg);

// Criterion cost plus bounds at times 0, stride, 2*stride, ... <= horizon.
std::vector<quality::cost_report> quality_curve(algorithm algo,
                                                const surface_spec& spec,
                                                logical_time horizon,
                                                logical_time stride,
                                                execution exec);

// Retained ingest times at time T, decoded via lookup, ascending.
std::vector<logical_time> lookup_retained(algorithm algo,
                                          const surface_spec& spec,
                                          logical_time T);

// Goal-set enumeration shaped for sweeping, O(S) per call; must agree with
// the naive oracle constructions (pinned by the unit tests).
std::vector<logical_time> goal_set(algorithm algo, const surface_spec& spec,
                                   logical_time T);

}  // namespace dstream::sweep
