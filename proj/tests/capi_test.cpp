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
#include <cstring>
#include <string>
#include <vector>

#include <slowseq/slowseq.h>

TEST_CASE("C API: preset, generate, trace accessors") {
    slowseq_spec* spec = nullptr;
    REQUIRE(slowseq_spec_preset("B", nullptr, 0, &spec) == SLOWSEQ_OK);
    CHECK(slowseq_spec_term_count(spec) == 3);
    CHECK(slowseq_spec_init_length(spec) == 5);
    int64_t shift = -1;
    int64_t offset = -1;
    CHECK(slowseq_spec_term(spec, 2, &shift, &offset) == SLOWSEQ_OK);
    CHECK(shift == 0);
    CHECK(offset == 3);
    CHECK(slowseq_spec_term(spec, 3, &shift, &offset) == SLOWSEQ_ERR_OUT_OF_RANGE);

    slowseq_trace* trace = nullptr;
    REQUIRE(slowseq_generate(spec, 28, &trace) == SLOWSEQ_OK);
    CHECK(slowseq_trace_length(trace) == 28);
    CHECK(slowseq_trace_terms(trace)[27] == 21);
    int64_t v = 0;
    CHECK(slowseq_trace_at(trace, 7, &v) == SLOWSEQ_OK);
    CHECK(v == 6);
    CHECK(slowseq_trace_at(trace, 29, &v) == SLOWSEQ_ERR_OUT_OF_RANGE);
    CHECK(std::strlen(slowseq_last_error()) > 0);
    CHECK(slowseq_trace_died(trace, nullptr, nullptr) == 0);

    int is_slow = 0;
    CHECK(slowseq_check_slow(trace, &is_slow, nullptr, nullptr) == SLOWSEQ_OK);
    CHECK(is_slow == 1);
    int64_t count = 0;
    CHECK(slowseq_trace_count(trace, 17, &count) == SLOWSEQ_OK);
    CHECK(count == 2);
    CHECK(slowseq_max_complete_multiplicity(trace, &count) == SLOWSEQ_OK);
    CHECK(count == 2);

    slowseq_trace_free(trace);
    slowseq_spec_free(spec);
}

TEST_CASE("C API: error codes") {
    slowseq_spec* spec = nullptr;
    CHECK(slowseq_spec_preset("nope", nullptr, 0, &spec) == SLOWSEQ_ERR_UNKNOWN_PRESET);
    CHECK(spec == nullptr);
    CHECK(std::string(slowseq_last_error()).find("nope") != std::string::npos);

    const int64_t bad[] = {4, 2};
    CHECK(slowseq_spec_preset("bk", bad, 2, &spec) == SLOWSEQ_ERR_INVALID_ARGUMENT);
    CHECK(slowseq_spec_preset(nullptr, nullptr, 0, &spec) == SLOWSEQ_ERR_INVALID_ARGUMENT);
    CHECK(slowseq_spec_preset("B", nullptr, 0, nullptr) == SLOWSEQ_ERR_INVALID_ARGUMENT);

    int64_t out = 0;
    CHECK(slowseq_fast_b(0, &out) == SLOWSEQ_ERR_INVALID_ARGUMENT);
    CHECK(slowseq_aux_a(80, &out) == SLOWSEQ_ERR_OVERFLOW);
    CHECK(slowseq_fast_b((int64_t{1} << 62) + 1, &out) == SLOWSEQ_ERR_OUT_OF_RANGE);

    const int64_t big = int64_t{1} << 62;
    const int64_t offsets[] = {2, 2};
    const int64_t init[] = {1, big};
    REQUIRE(slowseq_spec_custom(nullptr, offsets, 2, init, 2, &spec) == SLOWSEQ_OK);
    slowseq_trace* trace = nullptr;
    CHECK(slowseq_generate(spec, 3, &trace) == SLOWSEQ_ERR_OVERFLOW);
    CHECK(trace == nullptr);
    slowseq_spec_free(spec);

    CHECK(std::string(slowseq_status_name(SLOWSEQ_ERR_OVERFLOW)) == "overflow");
    slowseq_report* report = nullptr;
    CHECK(slowseq_verify_structure(5, &report) == SLOWSEQ_ERR_INVALID_ARGUMENT);
    CHECK(report == nullptr);
}

TEST_CASE("C API: custom spec and death") {
    const int64_t shifts[] = {0, 0};
    const int64_t offsets[] = {1, 3};
    const int64_t init[] = {1, 1, 1};
    slowseq_spec* spec = nullptr;
    REQUIRE(slowseq_spec_custom(shifts, offsets, 2, init, 3, &spec) == SLOWSEQ_OK);
    slowseq_trace* trace = nullptr;
    REQUIRE(slowseq_generate(spec, 1000, &trace) == SLOWSEQ_OK);
    int64_t at = 0;
    int64_t arg = 0;
    CHECK(slowseq_trace_died(trace, &at, &arg) == 1);
    CHECK(at == 165);
    CHECK(arg == -37);
    CHECK(slowseq_trace_length(trace) == 164);
    slowseq_trace_free(trace);
    slowseq_spec_free(spec);

    const int64_t short_init[] = {1};
    CHECK(slowseq_spec_custom(shifts, offsets, 2, short_init, 1, &spec) == SLOWSEQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("C API: closed-form B") {
    int64_t out = 0;
    CHECK(slowseq_aux_a(5, &out) == SLOWSEQ_OK);
    CHECK(out == 203);
    int found = 0;
    int64_t k = 0;
    int64_t i = 0;
    CHECK(slowseq_find_witness(17, &found, &k, &i) == SLOWSEQ_OK);
    CHECK(found == 1);
    CHECK(k == 1);
    CHECK(i == 2);
    CHECK(slowseq_find_witness(7, &found, &k, &i) == SLOWSEQ_OK);
    CHECK(found == 0);
    CHECK(slowseq_r_partial(21, 2, &out) == SLOWSEQ_OK);
    CHECK(out == 1);
    CHECK(slowseq_r_total(21, &out) == SLOWSEQ_OK);
    CHECK(out == 6);
    CHECK(slowseq_first_index(21, &out) == SLOWSEQ_OK);
    CHECK(out == 27);
    CHECK(slowseq_fast_b(24, &out) == SLOWSEQ_OK);
    CHECK(out == 18);
}

TEST_CASE("C API: reports") {
    slowseq_report* report = nullptr;
    REQUIRE(slowseq_verify_structure(1000, &report) == SLOWSEQ_OK);
    CHECK(slowseq_report_passed(report) == 1);
    int64_t lo = 0;
    int64_t hi = 0;
    slowseq_report_range(report, &lo, &hi);
    CHECK(lo == 1);
    CHECK(hi == 999);
    CHECK(slowseq_report_violation_count(report) == 0);
    CHECK(slowseq_report_violation(report, 0, nullptr, nullptr, nullptr) == SLOWSEQ_ERR_OUT_OF_RANGE);
    slowseq_report_free(report);

    slowseq_jump jump{};
    REQUIRE(slowseq_verify_jump(4, &jump, &report) == SLOWSEQ_OK);
    CHECK(slowseq_report_passed(report) == 1);
    CHECK(jump.jump_index == 49);
    CHECK(jump.value_before == 39);
    CHECK(jump.value_at == 41);
    CHECK(jump.first_violation_index == 49);
    REQUIRE(slowseq_report_finding_count(report) == 1);
    CHECK(std::string(slowseq_report_finding(report, 0)).find("49") != std::string::npos);
    CHECK(slowseq_report_finding(report, 1) == nullptr);
    slowseq_report_free(report);

    REQUIRE(slowseq_scan_only_slow(5, 2000, &report) == SLOWSEQ_OK);
    CHECK(slowseq_report_passed(report) == 1);
    slowseq_report_free(report);

    for (auto* fn : {slowseq_verify_step_value, slowseq_verify_plateau}) {
        REQUIRE(fn(6, &report) == SLOWSEQ_OK);
        CHECK(slowseq_report_passed(report) == 1);
        slowseq_report_free(report);
    }
    REQUIRE(slowseq_verify_lemma_uniqueness(5000, &report) == SLOWSEQ_OK);
    CHECK(slowseq_report_passed(report) == 1);
    slowseq_report_free(report);
    REQUIRE(slowseq_verify_r_identities(5000, &report) == SLOWSEQ_OK);
    CHECK(slowseq_report_passed(report) == 1);
    slowseq_report_free(report);

    const int64_t points[] = {28, 1000};
    slowseq_density_point dens[2];
    REQUIRE(slowseq_density_profile(points, 2, dens) == SLOWSEQ_OK);
    CHECK(dens[0].ratio_num == 3);
    CHECK(dens[0].ratio_den == 4);
    CHECK(dens[1].deviation_num == 2);
    CHECK(dens[1].deviation_den == 375);
    CHECK(slowseq_jump_index(5) == 86);

    slowseq_report_free(nullptr);
    slowseq_trace_free(nullptr);
    slowseq_spec_free(nullptr);
}
