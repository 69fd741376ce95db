#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "redei8/redei.hpp"

namespace redei8 {

// Machine-readable per-field record, serialized as one JSON object per
// line with a fixed key order: primes, delta, r2, r4, r8, rho,
// predicted, qb_diagonal, b_matrix, oracle, consistent. The oracle key
// is present only when the class-group oracle was run.

struct OracleSummary {
    std::uint64_t h = 0;
    int r2 = 0;
    int r4 = 0;
    int r8 = 0;
    std::vector<std::uint64_t> elementary_divisor_2part;

    bool operator==(const OracleSummary &other) const = default;
};

struct FieldReport {
    std::vector<std::uint64_t> primes;
    std::int64_t delta = 0;
    int r2 = 0;
    int r4 = 0;
    int r8 = 0;
    int rho = 0;
    std::vector<int> predicted;      // sorted
    std::vector<int> qb_diagonal;    // 0/1, length r4
    std::vector<int> b_matrix;       // 0/1, row-major, length r4*r4
    std::optional<OracleSummary> oracle;
    bool consistent = false;

    bool operator==(const FieldReport &other) const = default;
};

OracleSummary oracle_summary(std::int64_t delta);

FieldReport build_field_report(const FieldSpec &f, bool with_oracle);

std::string to_json_line(const FieldReport &r);
FieldReport field_report_from_json_line(const std::string &line);

// Squarefree |delta| <= max_abs_delta whose trial-division factorization
// matches the prime pattern; ascending |delta|, primes ordered with the
// 3 (mod 4) prime last.
std::vector<std::vector<std::uint64_t>> enumerate_field_primes(std::int64_t max_abs_delta,
                                                               std::optional<int> t_filter);

struct ScanSummary {
    std::size_t field_count = 0;
    std::map<std::pair<int, int>, std::size_t> r4_r8_cells;
    std::vector<std::int64_t> inconsistent_deltas;
};

// Emits one JSON line per field to `records` in ascending |delta|,
// independent of the number of jobs.
ScanSummary run_scan(std::int64_t max_abs_delta, std::optional<int> t_filter, bool with_oracle,
                     int jobs, std::ostream &records);

} // namespace redei8
