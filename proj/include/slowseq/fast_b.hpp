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

#ifndef SLOWSEQ_FAST_B_HPP_
#define SLOWSEQ_FAST_B_HPP_

// Closed-form machinery for B(n) = B(n-B(n-1)) + B(n-B(n-2)) + B(n-B(n-3)),
// B(1..5) = 1..5.
//
// Value m occurs twice in B iff m = k*3^i + a_i for some k, i >= 1, where
// a_1 = 3 and a_i = 3*a_{i-1} - 1. R(m) counts such repeated values below m,
// so the first occurrence of m sits at index m + R(m). That map is strictly
// increasing in m, and B(n) is the largest m whose first index is <= n.

#include <cstdint>
#include <optional>

#include <slowseq/recurrence.hpp>

namespace slowseq::fastb {

// Largest n accepted by fast_b().
inline constexpr Value kMaxIndex = Value{1} << 62;

// a_i = (5 * 3^(i-1) + 1) / 2. Throws OverflowError once 5*3^(i-1) leaves int64.
Value aux_a(Value i);

// 3^i, throwing OverflowError when unrepresentable.
Value pow3(Value i);

struct WitnessPair {
    Value k{0};
    Value i{0};

    friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

// The unique (k, i) with k, i >= 1 and m = k*3^i + a_i, if any.
std::optional<WitnessPair> find_witness(Value m);

// max(0, floor((m - a_i - 1) / 3^i)).
Value r_partial(Value m, Value i);

// Sum of r_partial(m, i) over i with a_i + 1 < m.
Value r_total(Value m);

// m + R(m): index of the first occurrence of m.
Value first_index(Value m);

struct OccurrenceInfo {
    Value value{0};
    Value first_index{0};
    int multiplicity{1};
    std::optional<WitnessPair> witness;
};

OccurrenceInfo occurrence_info(Value m);

// B(n) for 1 <= n <= kMaxIndex in O(log^2 n).
Value fast_b(Value n);

}  // namespace slowseq::fastb

#endif  // SLOWSEQ_FAST_B_HPP_
