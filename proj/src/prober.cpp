/*
   Copyright 2026 The slowseq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <slowseq/prober.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace slowseq::probe {

namespace {

    std::string at_index(Value n) { return "n=" + std::to_string(n); }

    std::string label(Value k, Value n_init) {
        return "k=" + std::to_string(k) + " N=" + std::to_string(n_init);
    }

    void require_k(Value k, Value min) {
        if (k < min) {
            throw std::invalid_argument("k must be >= " + std::to_string(min));
        }
    }

    SequenceTrace jump_trace(Value k) { return bk_trace({k, jump_init_length(k)}, jump_index(k)); }

}  // namespace

void validate(const ProbeConfig& config) {
    if (config.k < 1) {
        throw std::invalid_argument("k must be >= 1");
    }
    if (config.n_init < config.k) {
        throw std::invalid_argument("N must be >= k");
    }
}

Value step_value(Value k) { return (k * k + k) / 2; }

Value jump_init_length(Value k) { return step_value(k) - 1; }

Value jump_index(Value k) { return (k * k * k + k * k) / 2 + 2 * k + 1; }

SequenceTrace bk_trace(const ProbeConfig& config, Value count) {
    validate(config);
    const Value params[] = {config.k, config.n_init};
    return generate(make_preset("bk", params), count);
}

VerificationReport verify_step_value(Value k) {
    require_k(k, 2);
    const Value n_init = jump_init_length(k);
    const auto trace = bk_trace({k, n_init}, n_init + 1);

    VerificationReport report;
    report.range_lo = n_init + 1;
    report.range_hi = n_init + 1;
    if (!trace.alive()) {
        report.violations.push_back({label(k, n_init) + " died", n_init + 1, trace.death()->at_index});
        return report;
    }
    report.expect_eq(label(k, n_init) + " B_k(N+1)", step_value(k), trace.at(n_init + 1));
    report.expect_eq(label(k, n_init) + " B_k(N+1)-B_k(N)", 1, trace.at(n_init + 1) - trace.at(n_init));
    return report;
}

VerificationReport verify_plateau(Value k) {
    require_k(k, 4);
    const Value p = step_value(k);
    const Value a = (p - k + 1) * (k + 1);
    const auto trace = jump_trace(k);

    VerificationReport report;
    report.range_lo = p - k;
    report.range_hi = jump_index(k);
    if (!trace.alive()) {
        report.violations.push_back({label(k, jump_init_length(k)) + " died", report.range_hi,
                                     trace.death()->at_index});
        return report;
    }

    for (Value q = -1; q <= p - k; ++q) {
        for (Value r = 1; r <= k + 1; ++r) {
            const Value x = q * (k + 1) + r;
            if (x < -k || x >= a) {
                continue;
            }
            const Value n = p + x;
            report.expect_eq(at_index(n) + " (q=" + std::to_string(q) + ",r=" + std::to_string(r) + ")",
                             p + q * k + r - 1, trace.at(n));
        }
    }
    const Value base = p + (p - k + 1) * k;
    for (Value r = 0; r <= k - 2; ++r) {
        report.expect_eq(at_index(p + a + r) + " (run r=" + std::to_string(r) + ")", base + r - 1,
                         trace.at(p + a + r));
    }
    report.expect_eq(at_index(p + a + k - 1) + " (before jump)", base + k - 3, trace.at(p + a + k - 1));
    report.expect_eq(at_index(p + a + k) + " (jump)", base + k - 1, trace.at(p + a + k));
    return report;
}

JumpReport verify_jump(Value k) {
    require_k(k, 4);
    JumpReport out;
    out.k = k;
    out.n_init = jump_init_length(k);
    out.jump_index = jump_index(k);
    out.report.range_lo = out.jump_index - 1;
    out.report.range_hi = out.jump_index;

    const auto trace = jump_trace(k);
    if (!trace.alive()) {
        throw std::runtime_error(label(k, out.n_init) + " died at index " +
                                 std::to_string(trace.death()->at_index) + " before the jump");
    }
    out.value_before = trace.at(out.jump_index - 1);
    out.value_at = trace.at(out.jump_index);
    out.difference = out.value_at - out.value_before;
    out.report.expect_eq(at_index(out.jump_index) + " difference", 2, out.difference);

    const auto slow = check_slow(trace);
    out.first_violation_index = slow.first_violation_index;
    if (slow.is_slow) {
        out.report.violations.push_back({"no slowness violation through jump index", out.jump_index, 0});
    } else if (*slow.first_violation_index < out.jump_index) {
        out.report.findings.push_back("k=" + std::to_string(k) + ": earlier violation at index " +
                                      std::to_string(*slow.first_violation_index) + " (difference " +
                                      std::to_string(*slow.violating_difference) + ")");
    } else {
        out.report.findings.push_back("k=" + std::to_string(k) + ": first violation is the jump at index " +
                                      std::to_string(out.jump_index));
    }
    return out;
}

VerificationReport scan_only_slow(Value k_max, Value horizon) {
    require_k(k_max, 4);
    if (horizon < jump_index(k_max)) {
        throw std::invalid_argument("horizon must reach jump_index(k_max) = " + std::to_string(jump_index(k_max)));
    }
    VerificationReport report;
    report.range_lo = 1;
    report.range_hi = horizon;

    std::vector<Value> slow_k;
    const auto full_run_slow = [&](const SequenceTrace& trace, const std::string& what) {
        if (!trace.alive()) {
            report.findings.push_back(what + ": died at index " + std::to_string(trace.death()->at_index));
            return false;
        }
        const auto slow = check_slow(trace);
        if (!slow.is_slow) {
            report.findings.push_back(what + ": first violation at index " +
                                      std::to_string(*slow.first_violation_index) + " (difference " +
                                      std::to_string(*slow.violating_difference) + ")");
        }
        return slow.is_slow;
    };

    for (Value k = 1; k <= k_max; ++k) {
        const Value p = step_value(k);
        // One-step criterion: B_k(N+1) = (k^2+k)/2 regardless of N, so only
        // N = p-1 and N = p can continue slowly. Sample N = k .. p+k.
        for (Value n_init = k; n_init <= p + k; ++n_init) {
            const auto trace = bk_trace({k, n_init}, n_init + 1);
            const Value diff = trace.at(n_init + 1) - n_init;
            const bool admissible = n_init == p - 1 || n_init == p;
            report.expect_eq(label(k, n_init) + " one-step admissible", admissible, diff == 0 || diff == 1);
        }

        // Full traces for the admissible N (p-1 may fall below k for k = 1).
        std::vector<SequenceTrace> traces;
        for (Value n_init = std::max(k, p - 1); n_init <= p; ++n_init) {
            traces.push_back(bk_trace({k, n_init}, horizon));
        }
        if (traces.size() == 2) {
            report.expect_eq("k=" + std::to_string(k) + " admissible N give identical traces", 1,
                             std::ranges::equal(traces[0].values(), traces[1].values()));
        }
        const bool slow = full_run_slow(traces.front(), label(k, traces.front().spec().initial_length()));
        if (slow) {
            slow_k.push_back(k);
        }
        const Value expected_slow = (k == 1 || k == 3) ? 1 : 0;
        report.expect_eq("k=" + std::to_string(k) + " slow through horizon", expected_slow, slow);
    }

    // The Q-sequence proper starts from [1,1]; B_2 with N = 2 is the same
    // sequence shifted one index left.
    const auto q_trace = generate(make_preset("Q"), horizon);
    const auto q_slow = check_slow(q_trace);
    report.expect_eq("k=2 Q init first violation", 12, q_slow.first_violation_index.value_or(0));

    std::string summary = "slow through horizon " + std::to_string(horizon) + ":";
    for (Value k : slow_k) {
        summary += " k=" + std::to_string(k) + (k == 1 ? " (all ones, trivial)" : "");
    }
    report.findings.push_back(summary);
    return report;
}

}  // namespace slowseq::probe
