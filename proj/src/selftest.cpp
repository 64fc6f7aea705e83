#include "selftest.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bigrat.hpp"
#include "identity.hpp"
#include "padic.hpp"

namespace supercong {

uint64_t SelftestResult::failed() const {
    uint64_t f = 0;
    for (const auto &c : cases)
        if (!c.pass) ++f;
    return f;
}

namespace {

struct Runner {
    std::vector<SelftestCase> cases;

    void eq_u64(const std::string &name, uint64_t got, uint64_t expected) {
        cases.push_back({name, got == expected, std::to_string(got),
                         std::to_string(expected)});
    }
    void eq_i(const std::string &name, int64_t got, int64_t expected) {
        cases.push_back({name, got == expected, std::to_string(got),
                         std::to_string(expected)});
    }
    void padic(const std::string &name, const PAdicApprox &got, int64_t v,
               uint64_t unit) {
        std::ostringstream g;
        g << got;
        std::ostringstream e;
        e << unit << "*" << got.prime() << "^" << v;
        cases.push_back({name, !got.is_zero() && got.valuation() == v &&
                                   got.unit() == unit,
                         g.str(), e.str()});
    }
    void rat(const std::string &name, const BigRational &got,
             const BigRational &expected) {
        cases.push_back(
            {name, got == expected, rat_str(got), rat_str(expected)});
    }
    void verdict(const std::string &name, const Verdict &v,
                 uint64_t expect_lhs, uint64_t expect_rhs) {
        bool ok = v.passed() && v.lhs == expect_lhs && v.rhs == expect_rhs;
        cases.push_back({name, ok,
                         std::string(status_name(v.status)) + " lhs=" +
                             std::to_string(v.lhs) + " rhs=" +
                             std::to_string(v.rhs),
                         "pass lhs=" + std::to_string(expect_lhs) +
                             " rhs=" + std::to_string(expect_rhs)});
    }
    void passes(const std::string &name, const Verdict &v) {
        cases.push_back({name, v.passed(), status_name(v.status), "pass"});
    }
    void truth(const std::string &name, bool got) {
        cases.push_back({name, got, got ? "true" : "false", "true"});
    }
};

// exact-rational recomputations backing several expectations below
BigRational central_weighted_exact(uint64_t kmin, uint64_t kmax) {
    BigRational s = 0;
    for (uint64_t k = kmin; k <= kmax; ++k)
        s += BigRational(big_binomial(2 * static_cast<int64_t>(k),
                                      static_cast<int64_t>(k))) /
             BigRational(big_pow(16, k));
    return s;
}

} // namespace

SelftestResult run_selftest() {
    Runner r;

    // --- arith core ---
    r.eq_u64("mod_pow(3,3,7)", mod_pow(3, 3, 7).value(), 6);
    r.eq_u64("mod_pow(2,4,25)", mod_pow(2, 4, 25).value(), 16);
    r.eq_u64("mod_inv(2,25)", mod_inv(2, 25).value(), 13);
    r.eq_u64("mod_inv(16,49)", mod_inv(16, 49).value(), 46);
    r.eq_i("jacobi(3,7)", jacobi_symbol(3, 7), -1);
    r.eq_i("jacobi(2,5)", jacobi_symbol(2, 5), -1);
    r.eq_i("jacobi(3,25)", jacobi_symbol(3, 25), 1);
    r.eq_u64("fermat_quotient(3,2)", fermat_quotient(3, 2).value(), 1);
    r.eq_u64("fermat_quotient(5,2)", fermat_quotient(5, 2).value(), 3);
    r.padic("split_valuation(252,7,2)", split_valuation(252, 7, 2), 1, 36);
    r.padic("split_valuation(-1,5,2)", split_valuation(-1, 5, 2), 0, 24);
    {
        // 25 + 24 = 49: the representative splits as 1 * 7^2 and every
        // certain digit has cancelled
        PAdicApprox s = split_valuation(25, 7, 2) + split_valuation(24, 7, 2);
        r.padic("padic_add(25,24 | p=7,e=2) representative", s, 2, 1);
        r.truth("padic_add(25,24) vanishes at working precision",
                s.is_effectively_zero());
        PAdicApprox z = split_valuation(1, 7, 2) + split_valuation(48, 7, 2);
        r.truth("padic_add(x, -x) vanishes", z.is_effectively_zero());
    }

    // --- binom engine ---
    r.eq_u64("factorial_p_removed(6,5,1)", factorial_p_removed(6, 5, 1), 4);
    r.eq_u64("factorial_p_removed(10,3,2)", factorial_p_removed(10, 3, 2), 8);
    r.eq_u64("binom_lucas(12,5,5)", binom_lucas(12, 5, 5).value(), 2);
    r.eq_u64("binom_lucas(3,1,7)", binom_lucas(3, 1, 7).value(), 3);
    r.padic("binom_prime_power(10,5,7,2)", binom_prime_power(10, 5, 7, 2), 1,
            36);
    r.padic("binom_prime_power(4,2,5,1)", binom_prime_power(4, 2, 5, 1), 0,
            1);
    {
        CentralBinomStream s(7, 2);
        for (int i = 0; i < 5; ++i) s.advance();
        r.padic("central_binom_stream(7,2) at k=5", s.current(), 1, 36);
    }
    {
        // C(8,4) = 70 = 14 * 5, i.e. 20 (mod 25)
        CentralBinomStream s(5, 2);
        for (int i = 0; i < 4; ++i) s.advance();
        r.padic("central_binom_stream(5,2) at k=4 canonical", s.current(), 1,
                14);
        r.eq_u64("central_binom_stream(5,2) at k=4 mod 25",
                 s.current().to_residue(2).value(), 20);
    }
    r.eq_u64("harmonic_mod(2,5)", harmonic_mod(2, 5), 4);
    r.eq_u64("harmonic_mod(3,7)", harmonic_mod(3, 7), 3);
    r.eq_u64("scaled_harmonic(12,5,2)", scaled_harmonic(12, 5, 2), 4);
    r.eq_u64("scaled_harmonic(4,5,2)", scaled_harmonic(4, 5, 2), 0);
    {
        PrimePowerCtx c71(7, 1, 2);
        r.eq_u64("weighted_central_sum(7,1;5/6;1/16)",
                 weighted_central_sum(c71, 5, 6, 1, 16, 1).value(), 48);
        r.rat("main sum (7,1) exact", central_weighted_exact(0, 5),
              BigRational(302679, 262144));
        PrimePowerCtx c51(5, 1, 2);
        r.eq_u64("weighted_central_sum(5,1;1/2;1/16)",
                 weighted_central_sum_range(c51, 0, c51.n, 1, 16, 1).value(),
                 24);
        r.rat("half sum (5,1) exact", central_weighted_exact(0, 2),
              BigRational(147, 128));
        PrimePowerCtx c513(5, 1, 3);
        r.eq_u64("weighted_central_sum(5,1;3/4;1/16;sq) mod 125",
                 weighted_central_sum(c513, 3, 4, 1, 16, 2).value(), 1);
    }

    // --- identity lab ---
    {
        auto s = swz_decomposition(2, 1, BigRational(2));
        r.rat("swz(2,1,2) lhs", s.lhs, 2);
        r.rat("swz(2,1,2) rhs", s.rhs, 2);
        r.truth("swz(6,2,-4)", swz_decomposition(6, 2, BigRational(-4)).equal);
        r.truth("swz(1,0,5) single term",
                swz_decomposition(1, 0, BigRational(5)).lhs == 1);
    }
    r.rat("beta_sum(3,0,0)", beta_sum_closed_form(3, 0, 0).lhs,
          BigRational(1, 3));
    r.truth("beta_sum(3,0,0) closed form", beta_sum_closed_form(3, 0, 0).equal);
    r.rat("beta_sum(4,1,1)", beta_sum_closed_form(4, 1, 1).lhs,
          BigRational(1, 6));
    r.truth("beta_sum(4,1,1) closed form", beta_sum_closed_form(4, 1, 1).equal);
    r.eq_i("hockey_stick(2,1)", hockey_stick(2, 1).lhs.convert_to<int64_t>(),
           3);
    r.eq_i("hockey_stick(4,3)", hockey_stick(4, 3).lhs.convert_to<int64_t>(),
           35);
    r.truth("hockey_stick(4,3) == C(7,4)", hockey_stick(4, 3).equal);
    r.rat("sigma_inverse(2,2)", sigma_inverse_binom(2, 2).lhs,
          BigRational(3, 2));
    r.truth("sigma_inverse(2,2) closed form", sigma_inverse_binom(2, 2).equal);
    r.truth("sigma_inverse(3,3)", sigma_inverse_binom(3, 3).equal);
    {
        auto g = alt_geometric_identity(2);
        r.rat("alt_geometric(2) sum", g.neg3_sum, BigRational(3, 2));
        r.rat("alt_geometric(2) -H_2", g.alt_binom_sum, BigRational(-3, 2));
        r.truth("alt_geometric(2) flags", g.all());
        r.truth("alt_geometric(5) flags", alt_geometric_identity(5).all());
    }
    {
        auto t = tail_identity(3, 1);
        r.rat("tail_identity(3,1) lhs", t.lhs, BigRational(-9, 2));
        r.truth("tail_identity(3,1)", t.equal);
        r.truth("tail_identity(1,0)", tail_identity(1, 0).lhs == -3 &&
                                          tail_identity(1, 0).equal);
        r.truth("tail_identity(6,2)", tail_identity(6, 2).equal);
    }
    {
        auto b = bc_decomposition(3, 1);
        r.rat("bc(3,1) lhs", b.lhs, BigRational(-45, 32));
        r.truth("bc(3,1)", b.all());
        auto b10 = bc_decomposition(1, 0);
        r.rat("bc(1,0) lhs", b10.lhs, BigRational(3, 4));
        r.truth("bc(1,0)", b10.all());
        r.truth("bc(7,2) with sub-flags", bc_decomposition(7, 2).all());
    }
    {
        auto t1 = ratio_transform_checks(3, 2, 0);
        r.truth("ratio_transform(3,2,0) upper", t1.upper_applicable &&
                                                    t1.upper_ok);
        auto t2 = ratio_transform_checks(5, 1, 2);
        r.truth("ratio_transform(5,1,2) lower", t2.lower_applicable &&
                                                    t2.lower_ok);
    }

    // --- congruence suite ---
    r.verdict("check_main_theorem(7,1)", check_main_theorem(7, 1), 48, 48);
    r.passes("check_main_theorem(13,1)", check_main_theorem(13, 1));
    {
        Verdict v = check_main_theorem(7, 2);
        r.verdict("check_main_theorem(7,2)", v, v.lhs, 1);
    }
    r.verdict("check_sun_half(5,1)", check_sun_half(5, 1), 24, 24);
    r.verdict("check_sun_half(3,1)", check_sun_half(3, 1), 0, 0);
    r.passes("check_sun_half(7,1)", check_sun_half(7, 1));
    {
        Verdict v = check_tail_vanishing(7, 1);
        r.verdict("check_tail_vanishing(7,1)", v, 0, 0);
        // tail numerator is exactly 1372 = 4 * 7^3
        BigRational t = central_weighted_exact(4, 5);
        r.rat("tail (7,1) exact", t, BigRational(1372, big_pow(16, 5)));
        r.eq_i("v_7(1372)", rat_valuation(t, 7), 3);
    }
    r.passes("check_tail_vanishing(13,1)", check_tail_vanishing(13, 1));
    r.passes("check_tail_vanishing(7,2)", check_tail_vanishing(7, 2));
    r.verdict("check_wilson_complement(5,1,2)",
              check_wilson_complement(5, 1, 2), 20, 20);
    r.verdict("check_wilson_complement(7,1,1)",
              check_wilson_complement(7, 1, 1), 42, 42);
    r.passes("check_wilson_complement(5,2,3)",
             check_wilson_complement(5, 2, 3));
    r.passes("check_ratio_unity(5,1,1)", check_ratio_unity(5, 1, 1));
    r.passes("check_ratio_unity(7,1,3)", check_ratio_unity(7, 1, 3));
    r.passes("check_ratio_unity(5,2,12)", check_ratio_unity(5, 2, 12));
    r.passes("check_harmonic_lemma(5)", check_harmonic_lemma(5));
    r.passes("check_harmonic_lemma(7)", check_harmonic_lemma(7));
    r.passes("check_harmonic_lemma(11)", check_harmonic_lemma(11));
    {
        r.eq_u64("H_3 == -2 q_7(2) mod 7", harmonic_mod(3, 7),
                 (2 * (7 - fermat_quotient(7, 2).value())) % 7);
        // key zero sum at (7,1) is exactly -105/128 with v_7 = 1
        BigRational s = 0;
        for (int64_t j = 0; j <= 3; ++j) {
            if (j == 1) continue;
            s += BigRational(big_binomial(3, j)) /
                 (BigRational(j - 1) * rat_pow(BigRational(-4), j));
        }
        r.rat("key zero sum (7,1) exact", s, BigRational(-105, 128));
        r.eq_i("v_7(-105/128)", rat_valuation(s, 7), 1);
    }
    r.passes("check_key_zero_sum(7,1)", check_key_zero_sum(7, 1));
    r.passes("check_key_zero_sum(13,1)", check_key_zero_sum(13, 1));
    r.passes("check_key_zero_sum(7,2)", check_key_zero_sum(7, 2));
    r.verdict("check_related(7,1,adamchuk)",
              check_related(7, 1, ClaimId::adamchuk), 0, 0);
    {
        Verdict v = check_related(5, 1, ClaimId::sun2011);
        r.verdict("check_related(5,1,sun2011)", v, 24, 24); // 99 == -1 (25)
    }
    {
        Verdict v = check_related(5, 1, ClaimId::pan_sun);
        r.verdict("check_related(5,1,pan_sun)", v, 24, 24);
    }
    {
        Verdict v = check_related(5, 1, ClaimId::mao_sun);
        r.verdict("check_related(5,1,mao_sun)", v, 1, 1);
    }
    {
        Verdict v = explore_valuation(7, 1);
        r.truth("explore_valuation(7,1) >= 2", v.diff_valuation >= 2);
    }

    // --- sieving ---
    {
        auto ps = sieve_primes(2, 50, ResidueClassFilter{3, 1});
        r.truth("sieve 2..50 filter 1 mod 3",
                ps == std::vector<uint64_t>({7, 13, 19, 31, 37, 43}));
        auto all = sieve_primes(2, 20);
        r.truth("sieve 2..20",
                all == std::vector<uint64_t>({2, 3, 5, 7, 11, 13, 17, 19}));
        r.truth("sieve 90..100",
                sieve_primes(90, 100) == std::vector<uint64_t>({97}));
    }

    return {std::move(r.cases)};
}

void emit_selftest_report(const SelftestResult &result, ReportFormat format,
                          std::ostream &os) {
    switch (format) {
    case ReportFormat::human:
        for (const auto &c : result.cases) {
            os << (c.pass ? "ok   " : "FAIL ") << c.name;
            if (!c.pass)
                os << "  (got " << c.got << ", expected " << c.expected
                   << ")";
            os << "\n";
        }
        os << "summary: total=" << result.cases.size()
           << " failed=" << result.failed() << "\n";
        return;
    case ReportFormat::json_lines:
        for (const auto &c : result.cases) {
            nlohmann::ordered_json j;
            j["claim"] = "selftest:" + c.name;
            j["p"] = 0;
            j["a"] = 0;
            j["aux"] = "";
            j["lhs"] = c.got;
            j["rhs"] = c.expected;
            j["modulus"] = "0";
            j["diff_valuation"] = 0;
            j["status"] = c.pass ? "pass" : "fail";
            j["ms"] = 0;
            os << j << "\n";
        }
        return;
    case ReportFormat::csv:
        os << "claim,p,a,aux,lhs,rhs,modulus,diff_valuation,status,ms\n";
        for (const auto &c : result.cases)
            os << "selftest:" << c.name << ",0,0,," << c.got << ","
               << c.expected << ",0,0," << (c.pass ? "pass" : "fail")
               << ",0\n";
        return;
    }
}

} // namespace supercong
