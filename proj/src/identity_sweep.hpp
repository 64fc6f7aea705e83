#pragma once

// Exhaustive identity-lab sweeps: every identity operation over its full
// parameter grid up to a configurable n. One summary per operation; any
// failing tuple is reported, never silently excluded.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scan.hpp"

namespace supercong {

struct IdentityOpSummary {
    std::string op;
    uint64_t checked = 0;
    uint64_t failed = 0;
    std::string first_failure; // parameter tuple of the first failure
    uint64_t ms = 0;
};

struct IdentitySweepResult {
    std::vector<IdentityOpSummary> ops;
    uint64_t checked() const;
    uint64_t failed() const;
};

IdentitySweepResult run_identity_sweep(uint32_t n_max);

void emit_identity_report(const IdentitySweepResult &result,
                          ReportFormat format, std::ostream &os);

} // namespace supercong
