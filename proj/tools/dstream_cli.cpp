// Copyright 2026 dstream-cpp contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: emits site-selection traces, lookup tables, and
// criterion-cost curves as deterministic CSV or JSON, and runs the
// validation suites. Data goes to stdout, diagnostics to stderr.
// Exit codes: 0 ok, 1 validation failure, 2 usage error.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dstream/algorithm.hpp"
#include "dstream/sweep.hpp"

namespace {

using namespace dstream;
using u64 = std::uint64_t;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_validation_failure = 1;
constexpr int exit_usage = 2;

struct options {
    std::string algo_name;
    u64 surface_size = 0;
    u64 time = 0;
    std::string format = "csv";
    bool no_header = false;
    u64 stride = 1;
    bool serial = false;
    std::optional<u64> inject_fault;
};

algorithm parse_algo_or_throw(const std::string& name) {
    const auto a = parse_algorithm(name);
    if (!a.has_value()) {
        throw std::invalid_argument{"unknown algorithm '" + name + "'"};
    }
    return *a;
}

surface_spec make_spec(algorithm a, u64 size) {
    const surface_spec spec{size};
    if (size < min_surface_size(a)) {
        throw std::invalid_argument{std::string{to_string(a)} +
                                    " requires surface size >= " +
                                    std::to_string(min_surface_size(a))};
    }
    return spec;
}

void require_time(algorithm a, const surface_spec& spec, u64 T, const char* what) {
    if (T > max_lookup_time(a, spec)) {
        throw std::invalid_argument{std::string{what} +
                                    " exceeds the supported domain for " +
                                    to_string(a)};
    }
}

std::string decimal(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

int cmd_trace(const options& opt) {
    const algorithm a = parse_algo_or_throw(opt.algo_name);
    const surface_spec spec = make_spec(a, opt.surface_size);
    if (opt.time > 0) require_time(a, spec, opt.time - 1, "horizon");

    if (opt.format == "json") {
        json rows = json::array();
        for (u64 T = 0; T < opt.time; ++T) {
            const site_selection k = site_select(a, spec, T);
            rows.push_back({{"T", T},
                            {"k", k.has_value() ? json(*k) : json(nullptr)}});
        }
        const json out{{"command", "trace"},
                       {"algo", to_string(a)},
                       {"s", spec.size},
                       {"horizon", opt.time},
                       {"rows", std::move(rows)}};
        std::fputs((out.dump() + "\n").c_str(), stdout);
        return exit_ok;
    }

    std::string out;
    if (!opt.no_header) out += "T,k\n";
    for (u64 T = 0; T < opt.time; ++T) {
        const site_selection k = site_select(a, spec, T);
        out += std::to_string(T);
        out += ',';
        if (k.has_value()) out += std::to_string(*k);
        out += '\n';
    }
    std::fwrite(out.data(), 1, out.size(), stdout);
    return exit_ok;
}

int cmd_lookup(const options& opt) {
    const algorithm a = parse_algo_or_throw(opt.algo_name);
    const surface_spec spec = make_spec(a, opt.surface_size);
    require_time(a, spec, opt.time, "time");
    const lookup_table table = lookup(a, spec, opt.time);

    if (opt.format == "json") {
        json rows = json::array();
        for (site_index k = 0; k < spec.size; ++k) {
            rows.push_back(
                {{"k", k},
                 {"T", table[k].has_value() ? json(*table[k]) : json(nullptr)}});
        }
        const json out{{"command", "lookup"},
                       {"algo", to_string(a)},
                       {"s", spec.size},
                       {"time", opt.time},
                       {"rows", std::move(rows)}};
        std::fputs((out.dump() + "\n").c_str(), stdout);
        return exit_ok;
    }

    std::string out;
    if (!opt.no_header) out += "k,T\n";
    for (site_index k = 0; k < spec.size; ++k) {
        out += std::to_string(k);
        out += ',';
        if (table[k].has_value()) out += std::to_string(*table[k]);
        out += '\n';
    }
    std::fwrite(out.data(), 1, out.size(), stdout);
    return exit_ok;
}

int cmd_quality(const options& opt) {
    const algorithm a = parse_algo_or_throw(opt.algo_name);
    const surface_spec spec = make_spec(a, opt.surface_size);
    require_time(a, spec, opt.time, "horizon");
    if (opt.stride == 0) throw std::invalid_argument{"stride must be >= 1"};

    const auto rows = sweep::quality_curve(
        a, spec, opt.time, opt.stride,
        opt.serial ? sweep::execution::serial : sweep::execution::parallel);

    if (opt.format == "json") {
        json jrows = json::array();
        for (const auto& r : rows) {
            jrows.push_back({{"T", r.time},
                             {"cost", r.cost.str()},
                             {"lower", r.lower_bound.str()},
                             {"upper", r.upper_bound.str()},
                             {"cost_dec", r.cost.value()},
                             {"lower_dec", r.lower_bound.value()},
                             {"upper_dec", r.upper_bound.value()}});
        }
        const json out{{"command", "quality"}, {"algo", to_string(a)},
                       {"s", spec.size},      {"horizon", opt.time},
                       {"stride", opt.stride}, {"rows", std::move(jrows)}};
        std::fputs((out.dump() + "\n").c_str(), stdout);
        return exit_ok;
    }

    std::string out;
    if (!opt.no_header) out += "T,cost,lower,upper,cost_dec,lower_dec,upper_dec\n";
    for (const auto& r : rows) {
        out += std::to_string(r.time);
        out += ',' + r.cost.str();
        out += ',' + r.lower_bound.str();
        out += ',' + r.upper_bound.str();
        out += ',' + decimal(r.cost.value());
        out += ',' + decimal(r.lower_bound.value());
        out += ',' + decimal(r.upper_bound.value());
        out += '\n';
    }
    std::fwrite(out.data(), 1, out.size(), stdout);
    return exit_ok;
}

const char* styled(bool ok) {
    const char* color = std::getenv("DSTREAM_COLOR");
    if (color != nullptr && std::string{color} == "1") {
        return ok ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
    }
    return ok ? "PASS" : "FAIL";
}

int cmd_validate(const options& opt) {
    const algorithm a = parse_algo_or_throw(opt.algo_name);
    const surface_spec spec = make_spec(a, opt.surface_size);
    require_time(a, spec, opt.time, "horizon");

    const sweep::validate_config cfg{
        a, spec, opt.time,
        opt.serial ? sweep::execution::serial : sweep::execution::parallel,
        opt.inject_fault};

    struct suite_result {
        const char* name;
        std::optional<sweep::validation_failure> failure;
    };
    const suite_result suites[] = {
        {"roundtrip", sweep::check_roundtrip(cfg)},
        {"retention", sweep::check_retention(cfg)},
        {"bounds", sweep::check_bounds(cfg)},
    };

    bool ok = true;
    std::optional<sweep::validation_failure> first;
    for (const auto& s : suites) {
        if (s.failure.has_value()) {
            ok = false;
            if (!first.has_value() || s.failure->time < first->time) {
                first = s.failure;
            }
        }
    }

    if (opt.format == "json") {
        json out{{"command", "validate"}, {"algo", to_string(a)},
                 {"s", spec.size},        {"horizon", opt.time},
                 {"ok", ok}};
        if (first.has_value()) {
            out["failure"] = {{"suite", first->suite},
                              {"T", first->time},
                              {"site", first->site},
                              {"expected", first->expected},
                              {"actual", first->actual}};
        } else {
            out["failure"] = nullptr;
        }
        std::fputs((out.dump() + "\n").c_str(), stdout);
        return ok ? exit_ok : exit_validation_failure;
    }

    std::string out;
    for (const auto& s : suites) {
        out += std::string{s.name} + ": " + styled(!s.failure.has_value());
        if (s.failure.has_value()) {
            out += " at T=" + std::to_string(s.failure->time) +
                   " site=" + std::to_string(s.failure->site) +
                   " expected=" + s.failure->expected +
                   " actual=" + s.failure->actual;
        }
        out += '\n';
    }
    out += std::string{"validate: "} + styled(ok) + " (algo=" + to_string(a) +
           " S=" + std::to_string(spec.size) +
           " horizon=" + std::to_string(opt.time) + ")\n";
    std::fwrite(out.data(), 1, out.size(), stdout);
    return ok ? exit_ok : exit_validation_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DStream stream curation: O(1) site selection and O(S) "
                 "ingest-time lookup over fixed power-of-two buffers"};
    app.require_subcommand(1);

    options opt;
    u64 fault_at = 0;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--algo", opt.algo_name, "steady|stretched|tilted")
            ->required();
        cmd->add_option("-S,--surface-size", opt.surface_size,
                        "buffer size (power of two)")
            ->required();
        cmd->add_option("--format", opt.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->default_val("csv");
    };

    CLI::App* trace = app.add_subcommand(
        "trace", "site selection per ingest time, rows T,k");
    add_common(trace);
    trace->add_option("-T,--horizon", opt.time, "emit rows for T in [0..horizon)")
        ->required();
    trace->add_flag("--no-header", opt.no_header, "omit the CSV header row");

    CLI::App* lkp = app.add_subcommand(
        "lookup", "decoded ingest time per buffer site, rows k,T");
    add_common(lkp);
    lkp->add_option("-T,--time", opt.time, "logical time to decode at")
        ->required();
    lkp->add_flag("--no-header", opt.no_header, "omit the CSV header row");

    CLI::App* qual = app.add_subcommand(
        "quality", "criterion cost and bounds per time point");
    add_common(qual);
    qual->add_option("-T,--horizon", opt.time, "largest time point reported")
        ->required();
    qual->add_option("--stride", opt.stride, "sampling stride")->default_val(1);
    qual->add_flag("--no-header", opt.no_header, "omit the CSV header row");
    qual->add_flag("--serial", opt.serial, "disable the parallel sweep kernel");

    CLI::App* val = app.add_subcommand(
        "validate", "round-trip, retention, and bound suites up to a horizon");
    add_common(val);
    val->add_option("-T,--horizon", opt.time, "check every T <= horizon")
        ->required();
    val->add_flag("--serial", opt.serial, "disable the parallel sweep kernel");
    CLI::Option* fault =
        val->add_option("--inject-fault", fault_at,
                        "test fixture: corrupt the replayed selection at T");
    fault->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (fault->count() > 0) opt.inject_fault = fault_at;

    try {
        if (trace->parsed()) return cmd_trace(opt);
        if (lkp->parsed()) return cmd_lookup(opt);
        if (qual->parsed()) return cmd_quality(opt);
        if (val->parsed()) return cmd_validate(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
