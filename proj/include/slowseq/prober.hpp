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

#ifndef SLOWSEQ_PROBER_HPP_
#define SLOWSEQ_PROBER_HPP_

// Probes of the k-term generalization
//
//   B_k(n) = sum_{i=1..k} B_k(n - B_k(n - i)),   B_k(i) = i for i <= N.
//
// With N = (k^2+k)/2 - 1 and k >= 4, write P = (k^2+k)/2 and
// A = (P-k+1)(k+1). Then
//
//   B_k(P + q(k+1) + r) = P + qk + r - 1     1 <= r <= k+1, -k <= q(k+1)+r < A
//   B_k(P + A + r)      = P + (P-k+1)k + r - 1     0 <= r <= k-2
//   B_k(P + A + k - 1)  = P + (P-k+1)k + k - 3
//   B_k(P + A + k)      = P + (P-k+1)k + k - 1
//
// so the sequence jumps by 2 at index P + A + k = k^3/2 + k^2/2 + 2k + 1.

#include <optional>

#include <slowseq/report.hpp>

namespace slowseq::probe {

struct ProbeConfig {
    Value k{1};
    Value n_init{1};
};

// Throws std::invalid_argument unless k >= 1 and n_init >= k.
void validate(const ProbeConfig& config);

// (k^2+k)/2, the forced value of B_k(N+1).
Value step_value(Value k);

// Initial-condition length used by the jump construction: step_value(k) - 1.
Value jump_init_length(Value k);

// k^3/2 + k^2/2 + 2k + 1.
Value jump_index(Value k);

struct JumpReport {
    Value k{0};
    Value n_init{0};
    Value jump_index{0};
    Value value_before{0};
    Value value_at{0};
    Value difference{0};
    // First slowness violation of the generated prefix, if any.
    std::optional<Value> first_violation_index;
    VerificationReport report;
};

SequenceTrace bk_trace(const ProbeConfig& config, Value count);

// B_k(N+1) == (k^2+k)/2 with N = jump_init_length(k). Requires k >= 2.
VerificationReport verify_step_value(Value k);

// Every closed-form value listed above through index jump_index(k). Requires k >= 4.
VerificationReport verify_plateau(Value k);

// Requires k >= 4. Throws std::runtime_error if the trace dies before the jump.
JumpReport verify_jump(Value k);

// Checks that among identity-initialized B_k, 1 <= k <= k_max, only k = 3
// stays slow through `horizon`; k = 1 (all ones) is reported as trivial.
// Requires k_max >= 4 and horizon >= jump_index(k_max).
VerificationReport scan_only_slow(Value k_max, Value horizon);

}  // namespace slowseq::probe

#endif  // SLOWSEQ_PROBER_HPP_
