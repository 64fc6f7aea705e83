// supercong CLI: batch verification sweeps over prime ranges, exact
// identity sweeps, valuation exploration and the built-in selftest.
// Reports go to stdout, progress to stderr.
//
// Exit codes: 0 = all checks pass, 1 = any fail or inconclusive,
// 2 = configuration or usage error.

#include <cinttypes>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "supercong.h"

namespace {

constexpr const char *kVerifyClaims =
    "main_theorem,sun_half,tail_vanishing,wilson_complement,ratio_unity,"
    "harmonic_lemma,key_zero_sum";
constexpr const char *kRelatedClaims = "adamchuk,sun2011,pan_sun,mao_sun";
constexpr const char *kExploreClaims = "conjecture_explore";

struct SweepOptions {
    uint64_t pmin = 3;
    uint64_t pmax = 100;
    std::vector<uint32_t> a_values;
    std::string claims;
    std::string format = "human";
    uint32_t jobs = 0;
    uint32_t precision = 0;
};

void add_sweep_flags(CLI::App *cmd, SweepOptions &o) {
    cmd->add_option("--pmin", o.pmin, "lower end of the prime range");
    cmd->add_option("--pmax", o.pmax, "upper end of the prime range");
    cmd->add_option("--a", o.a_values,
                    "prime-power exponent, repeatable (default 1)");
    cmd->add_option("--claims", o.claims, "comma-separated claim subset");
    cmd->add_option("--format", o.format, "human, json_lines or csv");
    cmd->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
    cmd->add_option("--precision", o.precision,
                    "override working precision e (0 = per-claim default)");
}

extern "C" void print_progress(uint64_t done, uint64_t total, void *) {
    if (total < 64) return;
    uint64_t step = total / 20 ? total / 20 : 1;
    if (done % step == 0 || done == total)
        std::fprintf(stderr, "progress: %" PRIu64 "/%" PRIu64 " checks\n",
                     done, total);
}

int fail_status(const char *what, sc_status st) {
    std::fprintf(stderr, "error: %s: %s\n", what, sc_status_name(st));
    return 2;
}

bool known_format(const std::string &f) {
    return f == "human" || f == "json_lines" || f == "csv";
}

int run_sweep(const SweepOptions &o, const char *default_claims) {
    if (!known_format(o.format)) return fail_status("--format", SC_ERR_ARG);
    sc_scan *scan = sc_scan_new();
    if (!scan) return fail_status("scan", SC_ERR_NOMEM);
    struct Guard {
        sc_scan *s;
        ~Guard() { sc_scan_free(s); }
    } guard{scan};

    sc_status st = sc_scan_set_prime_range(scan, o.pmin, o.pmax);
    if (st != SC_OK) return fail_status("--pmin/--pmax", st);
    std::vector<uint32_t> a = o.a_values.empty()
                                  ? std::vector<uint32_t>{1}
                                  : o.a_values;
    st = sc_scan_set_exponents(scan, a.data(), a.size());
    if (st != SC_OK) return fail_status("--a", st);
    const std::string claims = o.claims.empty() ? default_claims : o.claims;
    st = sc_scan_set_claims(scan, claims.c_str());
    if (st != SC_OK) return fail_status("--claims", st);
    st = sc_scan_set_jobs(scan, o.jobs);
    if (st != SC_OK) return fail_status("--jobs", st);
    st = sc_scan_set_precision(scan, o.precision);
    if (st != SC_OK) return fail_status("--precision", st);
    sc_scan_set_progress(scan, print_progress, nullptr);

    st = sc_scan_run(scan);
    if (st != SC_OK) return fail_status("scan", st);

    char *report = nullptr;
    st = sc_scan_emit(scan, o.format.c_str(), &report);
    if (st != SC_OK) return fail_status("--format", st);
    std::fputs(report, stdout);
    sc_string_free(report);

    return sc_scan_exit_code(scan);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"supercong: exact verification of central-binomial "
                 "supercongruences over prime sweeps"};
    app.require_subcommand(1);

    SweepOptions verify_opts;
    CLI::App *verify = app.add_subcommand(
        "verify", "the main supercongruence and its proof-chain steps");
    add_sweep_flags(verify, verify_opts);

    SweepOptions related_opts;
    CLI::App *related = app.add_subcommand(
        "related", "the four related binomial-sum results");
    add_sweep_flags(related, related_opts);

    SweepOptions explore_opts;
    CLI::App *explore = app.add_subcommand(
        "explore",
        "observed valuations of the conjectural branch, never pass/fail");
    add_sweep_flags(explore, explore_opts);

    uint32_t nmax = 40;
    std::string id_format = "human";
    CLI::App *identities = app.add_subcommand(
        "identities", "exhaustive exact-rational identity sweep");
    identities->add_option("--nmax", nmax, "sweep bound (default 40)");
    identities->add_option("--format", id_format, "human, json_lines or csv");

    std::string st_format = "human";
    CLI::App *selftest =
        app.add_subcommand("selftest", "built-in spot-value suite");
    selftest->add_option("--format", st_format, "human, json_lines or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    if (verify->parsed()) return run_sweep(verify_opts, kVerifyClaims);
    if (related->parsed()) return run_sweep(related_opts, kRelatedClaims);
    if (explore->parsed()) return run_sweep(explore_opts, kExploreClaims);

    if (identities->parsed()) {
        char *report = nullptr;
        uint64_t checked = 0, failed = 0;
        sc_status st = sc_identities_run(nmax, id_format.c_str(), &report,
                                         &checked, &failed);
        if (st != SC_OK) return fail_status("identities", st);
        std::fputs(report, stdout);
        sc_string_free(report);
        return failed ? 1 : 0;
    }

    if (selftest->parsed()) {
        char *report = nullptr;
        uint64_t total = 0, failed = 0;
        sc_status st =
            sc_selftest_run(st_format.c_str(), &report, &total, &failed);
        if (st != SC_OK) return fail_status("selftest", st);
        std::fputs(report, stdout);
        sc_string_free(report);
        return failed ? 1 : 0;
    }

    return 2;
}
