#include "identity_sweep.hpp"

#include <chrono>
#include <functional>
#include <ostream>

#include <json.hpp>

#include "identity.hpp"

namespace supercong {

uint64_t IdentitySweepResult::checked() const {
    uint64_t c = 0;
    for (const auto &op : ops) c += op.checked;
    return c;
}

uint64_t IdentitySweepResult::failed() const {
    uint64_t f = 0;
    for (const auto &op : ops) f += op.failed;
    return f;
}

namespace {

using Tuple = std::string;

IdentityOpSummary sweep_op(
    const std::string &name,
    const std::function<void(std::function<void(bool, const Tuple &)>)>
        &driver) {
    IdentityOpSummary s;
    s.op = name;
    auto t0 = std::chrono::steady_clock::now();
    driver([&](bool ok, const Tuple &tuple) {
        ++s.checked;
        if (!ok) {
            ++s.failed;
            if (s.first_failure.empty()) s.first_failure = tuple;
        }
    });
    s.ms = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
    return s;
}

std::string nm(int64_t n, int64_t m) {
    return "n=" + std::to_string(n) + ";m=" + std::to_string(m);
}

} // namespace

IdentitySweepResult run_identity_sweep(uint32_t n_max) {
    if (n_max < 2)
        throw std::invalid_argument("identity sweep: n_max must be >= 2");
    int64_t N = static_cast<int64_t>(n_max);
    const std::vector<BigRational> lambdas = {
        BigRational(-4), BigRational(2), BigRational(1, 2),
        BigRational(-3, 2), BigRational(7)};

    IdentitySweepResult result;

    result.ops.push_back(sweep_op("swz_decomposition", [&](auto report) {
        for (int64_t n = 1; n <= N; ++n)
            for (int64_t m = 0; m < n; ++m)
                for (const auto &lam : lambdas)
                    report(swz_decomposition(n, m, lam).equal,
                           nm(n, m) + ";lambda=" + rat_str(lam));
    }));

    result.ops.push_back(sweep_op("beta_sum_closed_form", [&](auto report) {
        for (int64_t n = 1; n <= N; ++n)
            for (int64_t m = 0; m < n; ++m)
                for (int64_t k = 0; k <= n - 1 - m; ++k)
                    report(beta_sum_closed_form(n, m, k).equal,
                           nm(n, m) + ";k=" + std::to_string(k));
    }));

    result.ops.push_back(sweep_op("hockey_stick", [&](auto report) {
        for (int64_t s = 1; s <= 20; ++s)
            for (int64_t K = 0; K <= 60; ++K)
                report(hockey_stick(s, K).equal,
                       "s=" + std::to_string(s) + ";K=" + std::to_string(K));
    }));

    result.ops.push_back(sweep_op("sigma_inverse_binom", [&](auto report) {
        for (int64_t i = 2; i <= 25; ++i)
            for (int64_t n = 0; n <= 60; ++n)
                report(sigma_inverse_binom(i, n).equal,
                       "i=" + std::to_string(i) + ";N=" + std::to_string(n));
    }));

    result.ops.push_back(sweep_op("alt_geometric_identity", [&](auto report) {
        for (int64_t n = 1; n <= N; ++n)
            report(alt_geometric_identity(n).all(), "n=" + std::to_string(n));
    }));

    result.ops.push_back(sweep_op("tail_identity", [&](auto report) {
        for (int64_t n = 1; n <= N; ++n)
            for (int64_t m = 0; m < n; ++m)
                report(tail_identity(n, m).equal, nm(n, m));
    }));

    result.ops.push_back(sweep_op("bc_decomposition", [&](auto report) {
        for (int64_t n = 1; n <= N; ++n)
            for (int64_t m = 0; m < n; ++m)
                report(bc_decomposition(n, m).all(), nm(n, m));
    }));

    result.ops.push_back(sweep_op("ratio_transform_checks", [&](auto report) {
        for (int64_t k = 1; k <= N; ++k)
            for (int64_t m = 0; m < k; ++m)
                for (int64_t j = 0; j <= k; ++j)
                    report(ratio_transform_checks(k, j, m).all(),
                           "k=" + std::to_string(k) + ";j=" +
                               std::to_string(j) + ";m=" + std::to_string(m));
    }));

    result.ops.push_back(sweep_op("swz_chain_consistency", [&](auto report) {
        int64_t top = std::min<int64_t>(N, 30);
        for (int64_t n = 1; n <= top; ++n)
            for (int64_t m = 0; m < n; ++m)
                report(swz_chain_consistency(n, m), nm(n, m));
    }));

    return result;
}

void emit_identity_report(const IdentitySweepResult &result,
                          ReportFormat format, std::ostream &os) {
    switch (format) {
    case ReportFormat::human:
        for (const auto &op : result.ops) {
            os << (op.failed ? "FAIL " : "ok   ") << op.op << ": checked "
               << op.checked << " tuples";
            if (op.failed)
                os << ", " << op.failed
                   << " failures (first: " << op.first_failure << ")";
            os << " [" << op.ms << " ms]\n";
        }
        os << "summary: checked=" << result.checked()
           << " failed=" << result.failed() << "\n";
        return;
    case ReportFormat::json_lines:
        for (const auto &op : result.ops) {
            nlohmann::ordered_json j;
            j["claim"] = op.op;
            j["p"] = 0;
            j["a"] = 0;
            j["aux"] = "checked=" + std::to_string(op.checked) +
                       (op.failed ? ";first_failure=" + op.first_failure
                                  : std::string());
            j["lhs"] = std::to_string(op.checked - op.failed);
            j["rhs"] = std::to_string(op.checked);
            j["modulus"] = "0";
            j["diff_valuation"] = 0;
            j["status"] = op.failed ? "fail" : "pass";
            j["ms"] = op.ms;
            os << j << "\n";
        }
        return;
    case ReportFormat::csv:
        os << "claim,p,a,aux,lhs,rhs,modulus,diff_valuation,status,ms\n";
        for (const auto &op : result.ops)
            os << op.op << ",0,0,checked=" << op.checked << ";failed="
               << op.failed << "," << (op.checked - op.failed) << ","
               << op.checked << ",0,0," << (op.failed ? "fail" : "pass")
               << "," << op.ms << "\n";
        return;
    }
}

} // namespace supercong
