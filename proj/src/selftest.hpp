#pragma once

// Built-in spot-value suite: frozen small cases with independently derived
// expected values (hand arithmetic or exact-rational recomputation). Run
// via the `selftest` subcommand.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scan.hpp"

namespace supercong {

struct SelftestCase {
    std::string name;
    bool pass = false;
    std::string got;
    std::string expected;
};

struct SelftestResult {
    std::vector<SelftestCase> cases;
    uint64_t failed() const;
};

SelftestResult run_selftest();

void emit_selftest_report(const SelftestResult &result, ReportFormat format,
                          std::ostream &os);

} // namespace supercong
