#pragma once

// Sweep orchestration: sieve a prime range, run the requested claims over
// primes x exponents in parallel, and emit deterministic reports. Work is
// partitioned by prime; the layers below are pure, so this is the only
// component that manages threads.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "checks.hpp"
#include "primes.hpp"

namespace supercong {

enum class ReportFormat { human, json_lines, csv };
std::optional<ReportFormat> format_from_name(const std::string &name);

struct ScanConfig {
    uint64_t p_min = 3;
    uint64_t p_max = 3;
    std::vector<uint32_t> a_values = {1};
    std::optional<ResidueClassFilter> residue_filter;
    std::vector<ClaimId> claims;
    uint32_t precision_override = 0; // 0 = per-claim default
    uint32_t identity_n_max = 40;
    ReportFormat output_format = ReportFormat::human;
    uint32_t parallelism = 0; // 0 = hardware concurrency
    std::function<void(uint64_t done, uint64_t total)> progress;
};

struct ReportRecord {
    Verdict verdict;
    uint64_t ms = 0;
};

struct ScanSummary {
    uint64_t pass = 0;
    uint64_t fail = 0;
    uint64_t inconclusive = 0;
    uint64_t evidence = 0;
    uint64_t skipped = 0; // hypothesis-filtered (claim, p, a) tuples
    uint64_t attempted() const { return pass + fail + inconclusive + evidence; }
};

struct ScanResult {
    std::vector<ReportRecord> records; // ordered by (p, a, claim)
    ScanSummary summary;
    // failing or minimal-valuation records, most alarming first
    std::vector<ReportRecord> worst;
};

// executes all requested claims over the sieved primes; deterministic
// record ordering regardless of parallelism
ScanResult run_scan(const ScanConfig &config);

void emit_report(const ScanResult &result, ReportFormat format,
                 std::ostream &os);

// 0 = all pass (evidence never fails a run), 1 = any fail or inconclusive
int scan_exit_code(const ScanSummary &summary);

} // namespace supercong
