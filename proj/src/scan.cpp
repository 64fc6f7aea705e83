#include "scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace supercong {

std::optional<ReportFormat> format_from_name(const std::string &name) {
    if (name == "human") return ReportFormat::human;
    if (name == "json_lines") return ReportFormat::json_lines;
    if (name == "csv") return ReportFormat::csv;
    return std::nullopt;
}

namespace {

void validate(const ScanConfig &c) {
    if (c.p_min < 3 || c.p_min > c.p_max)
        throw std::invalid_argument("scan: need 3 <= p_min <= p_max");
    if (c.a_values.empty())
        throw std::invalid_argument("scan: a_values must be nonempty");
    for (uint32_t a : c.a_values)
        if (a < 1) throw std::invalid_argument("scan: exponents must be >= 1");
    if (c.claims.empty())
        throw std::invalid_argument("scan: claim set must be nonempty");
    if (c.identity_n_max < 2)
        throw std::invalid_argument("scan: identity_n_max must be >= 2");
}

} // namespace

ScanResult run_scan(const ScanConfig &config) {
    validate(config);
    auto primes = sieve_primes(std::max<uint64_t>(3, config.p_min),
                               config.p_max, config.residue_filter);

    // skip even results of the unfiltered sieve (p = 2 is out of scope)
    primes.erase(std::remove_if(primes.begin(), primes.end(),
                                [](uint64_t p) { return p % 2 == 0; }),
                 primes.end());

    struct Slot {
        std::vector<ReportRecord> records;
        uint64_t skipped = 0;
    };
    std::vector<Slot> slots(primes.size());

    uint64_t total_tasks =
        primes.size() * config.a_values.size() * config.claims.size();
    std::atomic<uint64_t> done_tasks{0};
    std::atomic<size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= primes.size()) return;
            uint64_t p = primes[i];
            Slot &slot = slots[i];
            for (uint32_t a : config.a_values) {
                for (ClaimId claim : config.claims) {
                    if (!claim_applicable(claim, p, a)) {
                        ++slot.skipped;
                        ++done_tasks;
                        continue;
                    }
                    auto t0 = std::chrono::steady_clock::now();
                    ReportRecord rec;
                    try {
                        rec.verdict =
                            run_check(claim, p, a, config.precision_override);
                    } catch (const std::exception &ex) {
                        // per-record errors surface inside the record; only
                        // configuration errors abort a scan
                        rec.verdict.claim = claim;
                        rec.verdict.p = p;
                        rec.verdict.a = a;
                        rec.verdict.modulus = p;
                        rec.verdict.status = VerdictStatus::inconclusive;
                        rec.verdict.aux = std::string("error: ") + ex.what();
                    }
                    rec.ms = static_cast<uint64_t>(
                        std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count());
                    slot.records.push_back(std::move(rec));
                    uint64_t d = ++done_tasks;
                    if (config.progress) config.progress(d, total_tasks);
                }
            }
        }
    };

    unsigned jobs = config.parallelism
                        ? config.parallelism
                        : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(
        jobs, static_cast<unsigned>(std::max<size_t>(1, primes.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto &th : pool) th.join();
    }

    ScanResult result;
    for (auto &slot : slots) {
        result.summary.skipped += slot.skipped;
        for (auto &rec : slot.records)
            result.records.push_back(std::move(rec));
    }
    // canonical order: (p, a, claim); primes were ascending already, but
    // the claim axis must not depend on iteration quirks
    std::stable_sort(result.records.begin(), result.records.end(),
                     [](const ReportRecord &x, const ReportRecord &y) {
                         const Verdict &u = x.verdict, &v = y.verdict;
                         if (u.p != v.p) return u.p < v.p;
                         if (u.a != v.a) return u.a < v.a;
                         return static_cast<int>(u.claim) <
                                static_cast<int>(v.claim);
                     });

    for (const auto &rec : result.records) {
        switch (rec.verdict.status) {
        case VerdictStatus::pass: ++result.summary.pass; break;
        case VerdictStatus::fail: ++result.summary.fail; break;
        case VerdictStatus::inconclusive:
            ++result.summary.inconclusive;
            break;
        case VerdictStatus::evidence: ++result.summary.evidence; break;
        }
    }

    // worst records: every non-pass first, then lowest diff valuations
    std::vector<ReportRecord> ranked = result.records;
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const ReportRecord &x, const ReportRecord &y) {
                         bool xbad = x.verdict.status == VerdictStatus::fail ||
                                     x.verdict.status ==
                                         VerdictStatus::inconclusive;
                         bool ybad = y.verdict.status == VerdictStatus::fail ||
                                     y.verdict.status ==
                                         VerdictStatus::inconclusive;
                         if (xbad != ybad) return xbad;
                         return x.verdict.diff_valuation <
                                y.verdict.diff_valuation;
                     });
    size_t keep = std::min<size_t>(ranked.size(), 10);
    result.worst.assign(ranked.begin(), ranked.begin() + keep);
    return result;
}

namespace {

nlohmann::ordered_json record_json(const ReportRecord &rec) {
    const Verdict &v = rec.verdict;
    nlohmann::ordered_json j;
    j["claim"] = claim_name(v.claim);
    j["p"] = v.p;
    j["a"] = v.a;
    j["aux"] = v.aux;
    j["lhs"] = std::to_string(v.lhs);
    j["rhs"] = std::to_string(v.rhs);
    j["modulus"] = std::to_string(v.modulus);
    j["diff_valuation"] = v.diff_valuation;
    j["status"] = status_name(v.status);
    j["ms"] = rec.ms;
    return j;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void emit_human(const ScanResult &result, std::ostream &os) {
    os << std::left << std::setw(19) << "claim" << std::setw(8) << "p"
       << std::setw(4) << "a" << std::setw(14) << "lhs" << std::setw(14)
       << "rhs" << std::setw(14) << "modulus" << std::setw(6) << "vord"
       << std::setw(6) << "prec" << std::setw(14) << "status"
       << "aux\n";
    for (const auto &rec : result.records) {
        const Verdict &v = rec.verdict;
        os << std::left << std::setw(19) << claim_name(v.claim)
           << std::setw(8) << v.p << std::setw(4) << v.a << std::setw(14)
           << v.lhs << std::setw(14) << v.rhs << std::setw(14) << v.modulus
           << std::setw(6) << v.diff_valuation << std::setw(6) << v.precision
           << std::setw(14) << status_name(v.status) << v.aux << "\n";
    }
    const ScanSummary &s = result.summary;
    os << "summary: pass=" << s.pass << " fail=" << s.fail
       << " inconclusive=" << s.inconclusive << " evidence=" << s.evidence
       << " skipped=" << s.skipped << "\n";
}

} // namespace

void emit_report(const ScanResult &result, ReportFormat format,
                 std::ostream &os) {
    switch (format) {
    case ReportFormat::human:
        emit_human(result, os);
        return;
    case ReportFormat::json_lines:
        for (const auto &rec : result.records) os << record_json(rec) << "\n";
        return;
    case ReportFormat::csv:
        os << "claim,p,a,aux,lhs,rhs,modulus,diff_valuation,status,ms\n";
        for (const auto &rec : result.records) {
            const Verdict &v = rec.verdict;
            os << claim_name(v.claim) << "," << v.p << "," << v.a << ","
               << csv_field(v.aux) << "," << v.lhs << "," << v.rhs << ","
               << v.modulus << "," << v.diff_valuation << ","
               << status_name(v.status) << "," << rec.ms << "\n";
        }
        return;
    }
}

int scan_exit_code(const ScanSummary &summary) {
    return (summary.fail > 0 || summary.inconclusive > 0) ? 1 : 0;
}

} // namespace supercong
