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

#include <slowseq/slowseq.h>

#include <exception>
#include <mutex>
#include <string>

#include <slowseq/fast_b.hpp>
#include <slowseq/prober.hpp>
#include <slowseq/recurrence.hpp>
#include <slowseq/verifier.hpp>

struct slowseq_spec {
    slowseq::RecurrenceSpec spec;
};

struct slowseq_trace {
    explicit slowseq_trace(slowseq::SequenceTrace t) : trace(std::move(t)) {}

    slowseq::SequenceTrace trace;
    // Built on first query; the trace itself never changes.
    mutable std::once_flag profile_once;
    mutable slowseq::RepeatProfile profile;
};

struct slowseq_report {
    slowseq::VerificationReport report;
};

namespace {

thread_local std::string g_last_error;

slowseq_status fail(slowseq_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
slowseq_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return SLOWSEQ_OK;
    } catch (const slowseq::UnknownPresetError& e) {
        return fail(SLOWSEQ_ERR_UNKNOWN_PRESET, e.what());
    } catch (const slowseq::OverflowError& e) {
        return fail(SLOWSEQ_ERR_OVERFLOW, e.what());
    } catch (const std::out_of_range& e) {
        return fail(SLOWSEQ_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SLOWSEQ_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::runtime_error& e) {
        return fail(SLOWSEQ_ERR_ORACLE_DIED, e.what());
    } catch (const std::exception& e) {
        return fail(SLOWSEQ_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SLOWSEQ_ERR_INTERNAL, "unknown exception");
    }
}

bool null_arg(const void* p, const char* what, slowseq_status& status) {
    if (p == nullptr) {
        status = fail(SLOWSEQ_ERR_INVALID_ARGUMENT, std::string(what) + " is NULL");
        return true;
    }
    return false;
}

#define SLOWSEQ_REQUIRE(ptr)                       \
    do {                                           \
        slowseq_status status_ = SLOWSEQ_OK;       \
        if (null_arg((ptr), #ptr, status_)) {      \
            return status_;                        \
        }                                          \
    } while (0)

template <class F>
slowseq_status make_report(slowseq_report** out, F&& produce) {
    SLOWSEQ_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new slowseq_report{produce()}; });
}

const slowseq::RepeatProfile& profile_of(const slowseq_trace* t) {
    std::call_once(t->profile_once, [t] { t->profile = slowseq::repeat_profile(t->trace.values()); });
    return t->profile;
}

}  // namespace

extern "C" {

const char* slowseq_last_error(void) { return g_last_error.c_str(); }

const char* slowseq_status_name(slowseq_status status) {
    switch (status) {
        case SLOWSEQ_OK: return "ok";
        case SLOWSEQ_ERR_INVALID_ARGUMENT: return "invalid argument";
        case SLOWSEQ_ERR_UNKNOWN_PRESET: return "unknown preset";
        case SLOWSEQ_ERR_OVERFLOW: return "overflow";
        case SLOWSEQ_ERR_OUT_OF_RANGE: return "out of range";
        case SLOWSEQ_ERR_ORACLE_DIED: return "oracle died";
        case SLOWSEQ_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

slowseq_status slowseq_spec_preset(const char* name, const int64_t* params, size_t n_params, slowseq_spec** out) {
    SLOWSEQ_REQUIRE(name);
    SLOWSEQ_REQUIRE(out);
    if (n_params > 0) {
        SLOWSEQ_REQUIRE(params);
    }
    *out = nullptr;
    return guarded([&] {
        *out = new slowseq_spec{slowseq::make_preset(name, std::span<const int64_t>(params, n_params))};
    });
}

slowseq_status slowseq_spec_custom(const int64_t* outer_shifts, const int64_t* inner_offsets, size_t n_terms,
                                   const int64_t* init, size_t n_init, slowseq_spec** out) {
    SLOWSEQ_REQUIRE(out);
    *out = nullptr;
    if (n_terms > 0) {
        SLOWSEQ_REQUIRE(inner_offsets);
    }
    if (n_init > 0) {
        SLOWSEQ_REQUIRE(init);
    }
    return guarded([&] {
        std::vector<slowseq::RecurrenceTerm> terms;
        for (size_t j = 0; j < n_terms; ++j) {
            terms.push_back({outer_shifts ? outer_shifts[j] : 0, inner_offsets[j]});
        }
        *out = new slowseq_spec{slowseq::RecurrenceSpec(std::move(terms), std::vector<int64_t>(init, init + n_init))};
    });
}

void slowseq_spec_free(slowseq_spec* spec) { delete spec; }

size_t slowseq_spec_term_count(const slowseq_spec* spec) { return spec ? spec->spec.terms().size() : 0; }

slowseq_status slowseq_spec_term(const slowseq_spec* spec, size_t j, int64_t* outer_shift, int64_t* inner_offset) {
    SLOWSEQ_REQUIRE(spec);
    if (j >= spec->spec.terms().size()) {
        return fail(SLOWSEQ_ERR_OUT_OF_RANGE, "term index out of range");
    }
    const auto& t = spec->spec.terms()[j];
    if (outer_shift) *outer_shift = t.outer_shift;
    if (inner_offset) *inner_offset = t.inner_offset;
    return SLOWSEQ_OK;
}

size_t slowseq_spec_init_length(const slowseq_spec* spec) { return spec ? spec->spec.initial_length() : 0; }

const int64_t* slowseq_spec_init(const slowseq_spec* spec) {
    return spec ? spec->spec.initial_condition().data() : nullptr;
}

slowseq_status slowseq_generate(const slowseq_spec* spec, int64_t count, slowseq_trace** out) {
    SLOWSEQ_REQUIRE(spec);
    SLOWSEQ_REQUIRE(out);
    *out = nullptr;
    return guarded([&] { *out = new slowseq_trace(slowseq::generate(spec->spec, count)); });
}

void slowseq_trace_free(slowseq_trace* trace) { delete trace; }

size_t slowseq_trace_length(const slowseq_trace* trace) { return trace ? trace->trace.size() : 0; }

const int64_t* slowseq_trace_terms(const slowseq_trace* trace) {
    return trace ? trace->trace.values().data() : nullptr;
}

slowseq_status slowseq_trace_at(const slowseq_trace* trace, int64_t n, int64_t* value) {
    SLOWSEQ_REQUIRE(trace);
    SLOWSEQ_REQUIRE(value);
    return guarded([&] { *value = trace->trace.at(n); });
}

int slowseq_trace_died(const slowseq_trace* trace, int64_t* at_index, int64_t* offending_argument) {
    if (trace == nullptr || trace->trace.alive()) {
        return 0;
    }
    if (at_index) *at_index = trace->trace.death()->at_index;
    if (offending_argument) *offending_argument = trace->trace.death()->offending_argument;
    return 1;
}

slowseq_status slowseq_check_slow(const slowseq_trace* trace, int* is_slow, int64_t* first_violation_index,
                                  int64_t* violating_difference) {
    SLOWSEQ_REQUIRE(trace);
    SLOWSEQ_REQUIRE(is_slow);
    return guarded([&] {
        const auto r = slowseq::check_slow(trace->trace);
        *is_slow = r.is_slow ? 1 : 0;
        if (first_violation_index) *first_violation_index = r.first_violation_index.value_or(0);
        if (violating_difference) *violating_difference = r.violating_difference.value_or(0);
    });
}

slowseq_status slowseq_trace_count(const slowseq_trace* trace, int64_t value, int64_t* count) {
    SLOWSEQ_REQUIRE(trace);
    SLOWSEQ_REQUIRE(count);
    return guarded([&] { *count = profile_of(trace).count(value); });
}

slowseq_status slowseq_max_complete_multiplicity(const slowseq_trace* trace, int64_t* out) {
    SLOWSEQ_REQUIRE(trace);
    SLOWSEQ_REQUIRE(out);
    return guarded([&] { *out = profile_of(trace).max_complete_multiplicity; });
}

slowseq_status slowseq_aux_a(int64_t i, int64_t* out) {
    SLOWSEQ_REQUIRE(out);
    return guarded([&] { *out = slowseq::fastb::aux_a(i); });
}

slowseq_status slowseq_find_witness(int64_t m, int* found, int64_t* k, int64_t* i) {
    SLOWSEQ_REQUIRE(found);
    return guarded([&] {
        const auto w = slowseq::fastb::find_witness(m);
        *found = w ? 1 : 0;
        if (k) *k = w ? w->k : 0;
        if (i) *i = w ? w->i : 0;
    });
}

slowseq_status slowseq_r_partial(int64_t m, int64_t i, int64_t* out) {
    SLOWSEQ_REQUIRE(out);
    return guarded([&] { *out = slowseq::fastb::r_partial(m, i); });
}

slowseq_status slowseq_r_total(int64_t m, int64_t* out) {
    SLOWSEQ_REQUIRE(out);
    return guarded([&] { *out = slowseq::fastb::r_total(m); });
}

slowseq_status slowseq_first_index(int64_t m, int64_t* out) {
    SLOWSEQ_REQUIRE(out);
    return guarded([&] { *out = slowseq::fastb::first_index(m); });
}

slowseq_status slowseq_fast_b(int64_t n, int64_t* out) {
    SLOWSEQ_REQUIRE(out);
    return guarded([&] { *out = slowseq::fastb::fast_b(n); });
}

slowseq_status slowseq_verify_structure(int64_t limit_value, slowseq_report** out) {
    return make_report(out, [&] { return slowseq::verify::verify_structure(limit_value); });
}

slowseq_status slowseq_verify_lemma_uniqueness(int64_t limit_value, slowseq_report** out) {
    return make_report(out, [&] { return slowseq::verify::verify_lemma_uniqueness(limit_value); });
}

slowseq_status slowseq_verify_r_identities(int64_t limit_value, slowseq_report** out) {
    return make_report(out, [&] { return slowseq::verify::verify_r_identities(limit_value); });
}

slowseq_status slowseq_density_profile(const int64_t* points, size_t n_points, slowseq_density_point* out) {
    if (n_points == 0) {
        return SLOWSEQ_OK;
    }
    SLOWSEQ_REQUIRE(points);
    SLOWSEQ_REQUIRE(out);
    return guarded([&] {
        const auto profile = slowseq::verify::density_profile(std::span<const int64_t>(points, n_points));
        for (size_t j = 0; j < profile.size(); ++j) {
            const auto& p = profile[j];
            out[j] = {p.n, p.b_of_n, p.ratio.num, p.ratio.den, p.deviation.num, p.deviation.den};
        }
    });
}

slowseq_status slowseq_verify_step_value(int64_t k, slowseq_report** out) {
    return make_report(out, [&] { return slowseq::probe::verify_step_value(k); });
}

slowseq_status slowseq_verify_plateau(int64_t k, slowseq_report** out) {
    return make_report(out, [&] { return slowseq::probe::verify_plateau(k); });
}

slowseq_status slowseq_verify_jump(int64_t k, slowseq_jump* jump, slowseq_report** out) {
    return make_report(out, [&] {
        auto r = slowseq::probe::verify_jump(k);
        if (jump) {
            *jump = {r.k,        r.n_init,     r.jump_index, r.value_before,
                     r.value_at, r.difference, r.first_violation_index.value_or(0)};
        }
        return std::move(r.report);
    });
}

slowseq_status slowseq_scan_only_slow(int64_t k_max, int64_t horizon, slowseq_report** out) {
    return make_report(out, [&] { return slowseq::probe::scan_only_slow(k_max, horizon); });
}

int64_t slowseq_jump_index(int64_t k) { return slowseq::probe::jump_index(k); }

void slowseq_report_free(slowseq_report* report) { delete report; }

int slowseq_report_passed(const slowseq_report* report) { return report && report->report.passed() ? 1 : 0; }

void slowseq_report_range(const slowseq_report* report, int64_t* lo, int64_t* hi) {
    if (report == nullptr) {
        return;
    }
    if (lo) *lo = report->report.range_lo;
    if (hi) *hi = report->report.range_hi;
}

size_t slowseq_report_violation_count(const slowseq_report* report) {
    return report ? report->report.violations.size() : 0;
}

slowseq_status slowseq_report_violation(const slowseq_report* report, size_t idx, const char** location,
                                        int64_t* expected, int64_t* actual) {
    SLOWSEQ_REQUIRE(report);
    if (idx >= report->report.violations.size()) {
        return fail(SLOWSEQ_ERR_OUT_OF_RANGE, "violation index out of range");
    }
    const auto& v = report->report.violations[idx];
    if (location) *location = v.location.c_str();
    if (expected) *expected = v.expected;
    if (actual) *actual = v.actual;
    return SLOWSEQ_OK;
}

size_t slowseq_report_finding_count(const slowseq_report* report) {
    return report ? report->report.findings.size() : 0;
}

const char* slowseq_report_finding(const slowseq_report* report, size_t idx) {
    if (report == nullptr || idx >= report->report.findings.size()) {
        return nullptr;
    }
    return report->report.findings[idx].c_str();
}

}  // extern "C"
