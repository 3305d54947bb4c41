#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypfq {

enum class Status { pass, fail, skip };

std::string to_string(Status s);

// One checked identity over one parameter tuple. Checks that sweep a
// variable (lambda, x, a, ...) aggregate it into a single record and list
// every failing instance in diagnostics.
struct CheckRecord {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::int64_t> key;  // sort key, parallel to params
    Status status = Status::pass;
    std::string branch;
    std::string lhs;
    std::string rhs;
    std::optional<std::int64_t> lhs_valuation;
    std::optional<std::int64_t> rhs_valuation;
    int precision = 0;
    std::int64_t instances = 0;
    std::string reason;
    std::vector<std::string> diagnostics;
    double seconds = 0;
};

struct SuiteConfig {
    std::vector<std::string> suites{"all"};
    std::uint32_t pmax = 13;
    int rmax = 2;
    int dmax = 6;
    // Explicit (p, r) list; when nonempty it replaces the pmax/rmax grid.
    std::vector<std::pair<std::uint32_t, int>> fields;
    int precision = -1;  // < 0: per-field default
    int threads = 1;
    std::uint32_t gk_pmax = 7;
    std::uint32_t sample_above = 13;  // larger fields sample x
    int samples = 10;
    std::uint32_t pair_qmax = 49;  // character-pair sweeps
    std::uint32_t shadow_qmax = 49;
    bool timing = false;
};

struct Report {
    SuiteConfig config;
    std::vector<CheckRecord> records;

    std::int64_t count(Status s) const;
    // id -> branch -> number of non-skipped records.
    std::map<std::string, std::map<std::string, std::int64_t>> branch_coverage() const;
    bool ok() const { return count(Status::fail) == 0; }
};

// Every check id, in report order.
const std::vector<std::string>& check_ids();

// Resolves suite names ("all", "gk", or check ids) to check ids. Throws
// std::invalid_argument on an unknown name.
std::vector<std::string> resolve_suites(const std::vector<std::string>& names);

// Runs the grid. Records are merged in a fixed order, so the report does not
// depend on the thread count.
Report run_suite(const SuiteConfig& config);

std::string to_json(const Report& report, int indent = 2);
std::string to_csv(const Report& report);
std::string to_plain(const Report& report);

}  // namespace hypfq
