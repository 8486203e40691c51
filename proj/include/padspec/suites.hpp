#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padspec/json_io.hpp"

namespace padspec {

struct SuiteParams {
    std::uint64_t seed = 42;
    std::uint64_t samples = 1000;
    std::int64_t p = 5;
    std::int32_t precision = 16;
    std::size_t dim_max = 8;  // cap on sampled dimensions
};

/// Outcome of one verification suite. Deterministic given (suite, seed,
/// samples); the counterexample, when present, carries the serialized inputs
/// of the first failing check.
struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    bool pass = true;
    std::optional<Json> counterexample;
    double millis = 0;
};

/// One-line JSON form; timing is opt-in so that default output is
/// byte-identical across runs.
Json suite_report_to_json(const SuiteReport& r, bool include_timing = false);

/// All registered suite ids, sorted.
std::vector<std::string> suite_ids();

bool has_suite(const std::string& id);

/// Runs one suite; throws InputError on an unknown id.
SuiteReport run_suite(const std::string& id, const SuiteParams& params);

/// Runs every suite, ordered by id.
std::vector<SuiteReport> run_all_suites(const SuiteParams& params);

}  // namespace padspec
