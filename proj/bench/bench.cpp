// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the per-ingest primitives plus a serial-vs-parallel
// comparison of the sweep kernels. Wall-clock numbers, single run each.

#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dstream/algorithm.hpp"
#include "dstream/sweep.hpp"

using namespace dstream;
using u64 = std::uint64_t;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void bench_site_select(algorithm a) {
    const surface_spec spec{64};
    const u64 iterations = 10'000'000;
    for (const u64 base : {u64{1000}, u64{1'000'000'000'000'000ull}}) {
        u64 sink = 0;
        const auto start = std::chrono::steady_clock::now();
        for (u64 i = 0; i < iterations; ++i) {
            const site_selection k = site_select(a, spec, base + i);
            sink += k.has_value() ? *k : 0;
        }
        const double ms = ms_since(start);
        asm volatile("" : : "r"(sink));
        std::printf("  %-9s site_select  T~%-7.0e  %6.2f ns/call\n",
                    to_string(a), static_cast<double>(base),
                    ms * 1e6 / static_cast<double>(iterations));
    }
}

void bench_lookup(algorithm a) {
    const surface_spec spec{64};
    const u64 iterations = 200'000;
    u64 sink = 0;
    const auto start = std::chrono::steady_clock::now();
    for (u64 i = 0; i < iterations; ++i) {
        const lookup_table t = lookup(a, spec, u64{1} << 40 | i);
        sink += t[0].value_or(0);
    }
    const double ms = ms_since(start);
    asm volatile("" : : "r"(sink));
    std::printf("  %-9s lookup (S=64 table)    %8.1f ns/decode\n", to_string(a),
                ms * 1e6 / static_cast<double>(iterations));
}

template <class Fn>
double timed_ms(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return ms_since(start);
}

void bench_sweeps(algorithm a) {
    const surface_spec spec{16};
    const u64 horizon = (u64{1} << 15) - 1;

    const double q_serial = timed_ms([&] {
        sweep::quality_curve(a, spec, horizon, 1, sweep::execution::serial);
    });
    const double q_parallel = timed_ms([&] {
        sweep::quality_curve(a, spec, horizon, 1, sweep::execution::parallel);
    });
    std::printf("  %-9s quality_curve   serial %8.1f ms   parallel %8.1f ms   x%.2f\n",
                to_string(a), q_serial, q_parallel, q_serial / q_parallel);

    const sweep::validate_config serial_cfg{a, spec, horizon,
                                            sweep::execution::serial, {}};
    const sweep::validate_config parallel_cfg{a, spec, horizon,
                                              sweep::execution::parallel, {}};
    const double r_serial =
        timed_ms([&] { (void)sweep::check_roundtrip(serial_cfg); });
    const double r_parallel =
        timed_ms([&] { (void)sweep::check_roundtrip(parallel_cfg); });
    std::printf("  %-9s check_roundtrip serial %8.1f ms   parallel %8.1f ms   x%.2f\n",
                to_string(a), r_serial, r_parallel, r_serial / r_parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel kernels run serially\n");
#endif

    std::printf("\nper-ingest site selection (S=64):\n");
    for (const algorithm a :
         {algorithm::steady, algorithm::stretched, algorithm::tilted}) {
        bench_site_select(a);
    }

    std::printf("\nfull-buffer ingest-time decode (S=64):\n");
    for (const algorithm a :
         {algorithm::steady, algorithm::stretched, algorithm::tilted}) {
        bench_lookup(a);
    }

    std::printf("\nsweep kernels, serial reference vs OpenMP (S=16, T<2^15):\n");
    for (const algorithm a :
         {algorithm::steady, algorithm::stretched, algorithm::tilted}) {
        bench_sweeps(a);
    }
    return 0;
}
