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

#ifndef SLOWSEQ_VERIFIER_HPP_
#define SLOWSEQ_VERIFIER_HPP_

// Confronts the closed-form B machinery with the naive recurrence engine.

#include <span>
#include <vector>

#include <slowseq/report.hpp>

namespace slowseq::verify {

// Exact non-negative rational; comparisons cross-multiply in 128 bits.
struct Rational {
    Value num{0};
    Value den{1};

    [[nodiscard]] double approx() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
};

Rational reduced(Value num, Value den);

struct DensityPoint {
    Value n{0};
    Value b_of_n{0};
    Rational ratio;      // B(n) / n
    Rational deviation;  // |B(n)/n - 2/3|
};

// Every value m < limit_value is complete in the naive trace; checks that m
// occurs twice iff it has a witness, and that the trace never decreases.
// Throws std::invalid_argument for limit_value < 6 and std::runtime_error if
// the oracle dies.
VerificationReport verify_structure(Value limit_value);

// Exhaustive (m, i) scan: at most one i with a_i + 3^i <= m and
// m = a_i (mod 3^i), for every m <= limit_value.
VerificationReport verify_lemma_uniqueness(Value limit_value);

// For each multiple of 3, 6 <= m <= limit_value:
//   R(m,i) = R(m/3,i-1) + [i witnesses m-1]     for i >= 2
//   m/3 + R(m/3) = R(m) + (m-1 has a witness ? 1 : 2)
//   m-1 has a witness  <=>  m/3 has a witness  (same k, index shifted by one)
VerificationReport verify_r_identities(Value limit_value);

std::vector<DensityPoint> density_profile(std::span<const Value> points);

// True when deviations never increase along the given points.
bool deviation_nonincreasing(std::span<const DensityPoint> points);

}  // namespace slowseq::verify

#endif  // SLOWSEQ_VERIFIER_HPP_
