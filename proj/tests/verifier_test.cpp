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

#include <slowseq/fast_b.hpp>
#include <slowseq/recurrence.hpp>
#include <slowseq/verifier.hpp>

#include "oracles.hpp"

using namespace slowseq;
using namespace slowseq::verify;

TEST_CASE("verify_structure small limits") {
    SUBCASE("limit 22: repeats are exactly {6,9,12,15,17,18,21}") {
        const auto r = verify_structure(22);
        CHECK(r.passed());
        CHECK(r.range_hi == 21);
        std::vector<Value> repeated;
        for (Value m = 1; m < 22; ++m) {
            if (fastb::find_witness(m)) {
                repeated.push_back(m);
            }
        }
        CHECK(repeated == std::vector<Value>{6, 9, 12, 15, 17, 18, 21});
        const auto profile = repeat_profile(generate(make_preset("B"), 40));
        for (Value m = 1; m < 22; ++m) {
            CHECK(profile.count(m) == (std::ranges::find(repeated, m) != repeated.end() ? 2 : 1));
        }
    }
    SUBCASE("limit 6") {
        const auto r = verify_structure(6);
        CHECK(r.passed());
        const auto profile = repeat_profile(generate(make_preset("B"), 7));
        CHECK(profile.count(6) == 2);
        for (Value m = 1; m <= 5; ++m) {
            CHECK(profile.count(m) == 1);
        }
    }
    SUBCASE("limit below 6 is rejected") { CHECK_THROWS_AS((void)verify_structure(5), std::invalid_argument); }
}

TEST_CASE("verify_structure 1e5") {
    const auto r = verify_structure(100000);
    CHECK(r.passed());
    CHECK(r.violations.empty());
}

TEST_CASE("lemma uniqueness") {
    CHECK(verify_lemma_uniqueness(23).passed());
    CHECK(verify_lemma_uniqueness(50).passed());
    CHECK(verify_lemma_uniqueness(10000).passed());
}

TEST_CASE("R identities: worked values") {
    // m = 18: 17 has a witness, so 18/3 + R(6) = R(18) + 1, giving R(18) = 5.
    CHECK(fastb::find_witness(17).has_value());
    CHECK(6 + fastb::r_total(6) == fastb::r_total(18) + 1);
    CHECK(fastb::r_total(18) == 5);
    const auto counts = oracle::counts(oracle::naive_b(40));
    Value below18 = 0;
    for (Value m = 1; m < 18; ++m) {
        below18 += counts.at(m) == 2 ? 1 : 0;
    }
    CHECK(below18 == 5);

    // m = 6: 5 has no witness, so 2 + R(2) = R(6) + 2.
    CHECK_FALSE(fastb::find_witness(5).has_value());
    CHECK(2 + fastb::r_total(2) == fastb::r_total(6) + 2);

    // m = 54, i = 2: 53 = 5*9 + 8.
    CHECK(fastb::find_witness(53) == fastb::WitnessPair{5, 2});
    CHECK(fastb::r_partial(54, 2) == fastb::r_partial(18, 1) + 1);
}

TEST_CASE("R identities over a range") {
    const auto r = verify_r_identities(30000);
    CHECK(r.passed());
    CHECK_THROWS_AS((void)verify_r_identities(5), std::invalid_argument);
}

TEST_CASE("density profile") {
    const Value points[] = {1, 28, 1000, 10000, 100000, 1000000};
    const auto profile = density_profile(points);
    REQUIRE(profile.size() == 6);
    CHECK(profile[0].ratio == Rational{1, 1});
    CHECK(profile[1].b_of_n == 21);
    CHECK(profile[1].ratio == Rational{3, 4});
    CHECK(profile[1].ratio.approx() == doctest::Approx(0.75));
    CHECK(profile[5].deviation < Rational{1, 1000});
    CHECK(deviation_nonincreasing(std::span(profile).subspan(2)));
    for (const auto& p : profile) {
        CHECK(Rational{0, 1} < p.ratio);
        CHECK(p.ratio <= Rational{1, 1});
    }
}

TEST_CASE("Rational comparisons are exact") {
    CHECK(reduced(6, 8) == Rational{3, 4});
    CHECK(reduced(0, 5) == Rational{0, 1});
    CHECK(Rational{1, 3} < Rational{1, 2});
    CHECK_FALSE(Rational{2, 4} < Rational{1, 2});
    CHECK_THROWS_AS((void)reduced(1, 0), std::invalid_argument);
}
