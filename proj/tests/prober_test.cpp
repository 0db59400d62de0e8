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

#include <doctest.h>

#include <algorithm>
#include <vector>

#include <slowseq/prober.hpp>
#include <slowseq/recurrence.hpp>

using namespace slowseq;
using namespace slowseq::probe;

TEST_CASE("jump index arithmetic") {
    CHECK(jump_index(4) == 49);
    CHECK(jump_index(5) == 86);
    CHECK(jump_index(8) == 305);
    for (Value k = 1; k <= 200; ++k) {
        // With P = (k^2+k)/2: P + (P-k+1)(k+1) + k.
        const Value p = step_value(k);
        CHECK(jump_index(k) == p + (p - k + 1) * (k + 1) + k);
        CHECK(jump_init_length(k) == p - 1);
    }
}

TEST_CASE("bk_trace reproduces known sequences") {
    const auto b3 = bk_trace({3, 5}, 28);
    CHECK(std::ranges::equal(b3.values(), generate(make_preset("B"), 28).values()));

    // Identity init [1,2] is the Q-sequence shifted one place left.
    const auto b2 = bk_trace({2, 2}, 11);
    const auto q = generate(make_preset("Q"), 12);
    CHECK(std::ranges::equal(b2.values(), q.values().subspan(1)));

    const auto b1 = bk_trace({1, 1}, 500);
    CHECK(std::ranges::all_of(b1.values(), [](Value v) { return v == 1; }));

    CHECK_THROWS_AS((void)bk_trace({4, 3}, 10), std::invalid_argument);
    CHECK_THROWS_AS((void)bk_trace({0, 3}, 10), std::invalid_argument);
}

TEST_CASE("verify_step_value") {
    CHECK(verify_step_value(3).passed());
    CHECK(bk_trace({3, 5}, 6).at(6) == 6);

    CHECK(verify_step_value(4).passed());
    const auto b4 = bk_trace({4, 9}, 11);
    CHECK(b4.at(10) == 10);
    CHECK(b4.at(11) == 10);

    CHECK(verify_step_value(5).passed());
    CHECK(bk_trace({5, 14}, 15).at(15) == 15);

    CHECK_THROWS_AS((void)verify_step_value(1), std::invalid_argument);
}

TEST_CASE("verify_plateau") {
    for (Value k = 4; k <= 10; ++k) {
        const auto r = verify_plateau(k);
        CHECK_MESSAGE(r.passed(), "k=" << k);
    }
    const auto b4 = bk_trace({4, 9}, 49);
    CHECK(b4.at(11) == 10);  // q=0, r=1
    CHECK(b4.at(9) == 9);    // q=-1, r=4
    // Off-by-one run at N+A+r (P=10, A=35): 45, 46, 47.
    CHECK(b4.at(45) == 10 + 28 + 0 - 1);
    CHECK(b4.at(47) == 10 + 28 + 2 - 1);
    CHECK_THROWS_AS((void)verify_plateau(3), std::invalid_argument);
}

TEST_CASE("verify_jump") {
    const auto j4 = verify_jump(4);
    CHECK(j4.report.passed());
    CHECK(j4.jump_index == 49);
    CHECK(j4.value_before == 39);
    CHECK(j4.value_at == 41);
    CHECK(j4.difference == 2);
    CHECK(j4.first_violation_index == 49);

    const auto j5 = verify_jump(5);
    CHECK(j5.report.passed());
    CHECK(j5.jump_index == 86);
    CHECK(j5.difference == 2);

    for (Value k = 6; k <= 12; ++k) {
        const auto j = verify_jump(k);
        CHECK_MESSAGE(j.report.passed(), "k=" << k);
        CHECK(j.n_init == (k * k + k) / 2 - 1);
        CHECK_FALSE(j.report.findings.empty());
    }
    CHECK_THROWS_AS((void)verify_jump(3), std::invalid_argument);
}

TEST_CASE("scan_only_slow") {
    const auto r = scan_only_slow(6, 10000);
    CHECK(r.passed());
    CHECK_FALSE(r.findings.empty());
    CHECK(r.findings.back().find("k=3") != std::string::npos);
    CHECK(r.findings.back().find("k=4") == std::string::npos);

    // The two admissible N give the same sequence.
    const auto n9 = bk_trace({4, 9}, 400);
    const auto n10 = bk_trace({4, 10}, 400);
    CHECK(std::ranges::equal(n9.values(), n10.values()));

    CHECK_THROWS_AS((void)scan_only_slow(3, 10000), std::invalid_argument);
    CHECK_THROWS_AS((void)scan_only_slow(6, 100), std::invalid_argument);
}
