#include <doctest.h>

#include <regex>
#include <sstream>

#include <json.hpp>

#include "identity_sweep.hpp"
#include "scan.hpp"

using namespace supercong;

namespace {

std::string emit_as(const ScanResult &r, ReportFormat f) {
    std::ostringstream os;
    emit_report(r, f, os);
    return os.str();
}

std::string strip_ms(std::string s) {
    static const std::regex ms_json("\"ms\":[0-9]+");
    static const std::regex ms_csv(",[0-9]+\n");
    s = std::regex_replace(s, ms_json, "\"ms\":0");
    s = std::regex_replace(s, ms_csv, ",0\n");
    return s;
}

std::vector<ClaimId> all_claims() {
    std::vector<ClaimId> v;
    for (int i = 0; i < kClaimCount; ++i) v.push_back(static_cast<ClaimId>(i));
    return v;
}

} // namespace

TEST_CASE("segmented sieve") {
    CHECK(sieve_primes(2, 20) ==
          std::vector<uint64_t>({2, 3, 5, 7, 11, 13, 17, 19}));
    CHECK(sieve_primes(2, 50, ResidueClassFilter{3, 1}) ==
          std::vector<uint64_t>({7, 13, 19, 31, 37, 43}));
    CHECK(sieve_primes(90, 100) == std::vector<uint64_t>({97}));
    CHECK(sieve_primes(2, 10000).size() == 1229);
    // segment boundary crossing
    auto seg = sieve_primes(65520, 65550);
    CHECK(seg == std::vector<uint64_t>({65521, 65537, 65539, 65543}));
    CHECK_THROWS_AS(sieve_primes(10, 5), std::invalid_argument);
}

TEST_CASE("run_scan single-prime configs") {
    ScanConfig cfg;
    cfg.p_min = 7;
    cfg.p_max = 7;
    cfg.claims = {ClaimId::main_theorem};
    ScanResult r = run_scan(cfg);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].verdict.passed());
    CHECK(r.summary.pass == 1);
    CHECK(r.summary.skipped == 0);

    // hypothesis filter: p = 5 is skipped for the main theorem
    cfg.p_min = cfg.p_max = 5;
    ScanResult r5 = run_scan(cfg);
    CHECK(r5.records.empty());
    CHECK(r5.summary.skipped == 1);
    CHECK(r5.summary.attempted() == 0);
}

TEST_CASE("run_scan validates configuration") {
    ScanConfig cfg;
    cfg.claims = {ClaimId::main_theorem};
    cfg.p_min = 10;
    cfg.p_max = 5;
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);
    cfg.p_min = 2;
    cfg.p_max = 5;
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);
    cfg.p_min = 3;
    cfg.a_values = {};
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);
    cfg.a_values = {1};
    cfg.claims = {};
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);
    cfg.claims = {ClaimId::main_theorem};
    cfg.identity_n_max = 1;
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);
}

TEST_CASE("summary conservation and record ordering") {
    ScanConfig cfg;
    cfg.p_min = 3;
    cfg.p_max = 60;
    cfg.a_values = {1, 2};
    cfg.claims = all_claims();
    ScanResult r = run_scan(cfg);
    CHECK(r.summary.attempted() == r.records.size());
    CHECK(r.summary.fail == 0);
    CHECK(r.summary.inconclusive == 0);
    CHECK(r.summary.skipped > 0);
    uint64_t tuples = sieve_primes(3, 60).size() * cfg.a_values.size() *
                      cfg.claims.size();
    CHECK(r.summary.attempted() + r.summary.skipped == tuples);

    // without the explorer, pass + fail + inconclusive alone accounts for
    // every attempted tuple
    ScanConfig verify_only = cfg;
    verify_only.claims.clear();
    for (int i = 0; i < kClaimCount; ++i) {
        ClaimId c = static_cast<ClaimId>(i);
        if (c != ClaimId::conjecture_explore) verify_only.claims.push_back(c);
    }
    ScanResult rv = run_scan(verify_only);
    CHECK(rv.summary.evidence == 0);
    CHECK(rv.summary.pass + rv.summary.fail + rv.summary.inconclusive ==
          rv.records.size());

    for (size_t i = 1; i < r.records.size(); ++i) {
        const Verdict &x = r.records[i - 1].verdict;
        const Verdict &y = r.records[i].verdict;
        bool ordered =
            x.p < y.p ||
            (x.p == y.p &&
             (x.a < y.a || (x.a == y.a && static_cast<int>(x.claim) <
                                              static_cast<int>(y.claim))));
        CHECK(ordered);
    }
}

TEST_CASE("identical records regardless of parallelism") {
    auto run_with = [](uint32_t jobs) {
        ScanConfig cfg;
        cfg.p_min = 3;
        cfg.p_max = 80;
        cfg.a_values = {1, 2};
        cfg.claims = all_claims();
        cfg.parallelism = jobs;
        return emit_as(run_scan(cfg), ReportFormat::json_lines);
    };
    std::string one = strip_ms(run_with(1));
    std::string four = strip_ms(run_with(4));
    std::string hw = strip_ms(run_with(0));
    CHECK(one == four);
    CHECK(one == hw);
}

TEST_CASE("json lines schema has the fixed keys in order") {
    ScanConfig cfg;
    cfg.p_min = 7;
    cfg.p_max = 7;
    cfg.claims = {ClaimId::main_theorem};
    std::string out = emit_as(run_scan(cfg), ReportFormat::json_lines);
    auto j = nlohmann::ordered_json::parse(out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>({"claim", "p", "a", "aux", "lhs",
                                            "rhs", "modulus",
                                            "diff_valuation", "status",
                                            "ms"}));
    CHECK(j["claim"] == "main_theorem");
    CHECK(j["p"] == 7);
    CHECK(j["lhs"] == "48");
    CHECK(j["status"] == "pass");
}

TEST_CASE("csv emission has a header even when empty") {
    ScanConfig cfg;
    cfg.p_min = 5;
    cfg.p_max = 5;
    cfg.claims = {ClaimId::main_theorem};
    std::string out = emit_as(run_scan(cfg), ReportFormat::csv);
    CHECK(out ==
          "claim,p,a,aux,lhs,rhs,modulus,diff_valuation,status,ms\n");
}

TEST_CASE("exit codes") {
    ScanConfig cfg;
    cfg.p_min = 7;
    cfg.p_max = 13;
    cfg.claims = {ClaimId::main_theorem};
    ScanResult ok = run_scan(cfg);
    CHECK(scan_exit_code(ok.summary) == 0);

    // starving the precision makes the verdict inconclusive, exit 1
    cfg.precision_override = 1;
    ScanResult starved = run_scan(cfg);
    CHECK(starved.summary.inconclusive == starved.records.size());
    CHECK(scan_exit_code(starved.summary) == 1);

    // evidence alone never fails a run
    ScanConfig ev;
    ev.p_min = 3;
    ev.p_max = 11;
    ev.claims = {ClaimId::conjecture_explore};
    ScanResult out = run_scan(ev);
    CHECK(out.summary.evidence == out.records.size());
    CHECK(scan_exit_code(out.summary) == 0);
}

TEST_CASE("per-record errors surface inside records, not as aborts") {
    // an absurd precision override overflows p^e; the scan keeps going and
    // marks the tuple inconclusive with the error text
    ScanConfig cfg;
    cfg.p_min = 101;
    cfg.p_max = 101;
    cfg.claims = {ClaimId::sun_half};
    cfg.precision_override = 10;
    ScanResult r = run_scan(cfg);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].verdict.status == VerdictStatus::inconclusive);
    CHECK(r.records[0].verdict.aux.find("error:") != std::string::npos);
    CHECK(scan_exit_code(r.summary) == 1);
}

TEST_CASE("worst records surface the lowest valuations first") {
    ScanConfig cfg;
    cfg.p_min = 3;
    cfg.p_max = 30;
    cfg.claims = {ClaimId::conjecture_explore};
    ScanResult r = run_scan(cfg);
    REQUIRE(!r.worst.empty());
    // the conjectural branch's valuation-1 tuples come first
    CHECK(r.worst[0].verdict.diff_valuation == 1);
    for (size_t i = 1; i < r.worst.size(); ++i)
        CHECK(r.worst[i - 1].verdict.diff_valuation <=
              r.worst[i].verdict.diff_valuation);
}

TEST_CASE("identity sweep summaries") {
    IdentitySweepResult r = run_identity_sweep(8);
    CHECK(r.failed() == 0);
    CHECK(r.checked() > 0);
    bool found = false;
    for (const auto &op : r.ops)
        if (op.op == "swz_decomposition") found = true;
    CHECK(found);
    std::ostringstream os;
    emit_identity_report(r, ReportFormat::json_lines, os);
    std::istringstream is(os.str());
    std::string line;
    size_t lines = 0;
    while (std::getline(is, line)) {
        auto j = nlohmann::ordered_json::parse(line);
        CHECK(j["status"] == "pass");
        ++lines;
    }
    CHECK(lines == r.ops.size());
    CHECK_THROWS_AS(run_identity_sweep(1), std::invalid_argument);
}
