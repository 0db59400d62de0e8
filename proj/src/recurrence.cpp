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

#include <slowseq/recurrence.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

namespace slowseq {

RecurrenceSpec::RecurrenceSpec(std::vector<RecurrenceTerm> terms, std::vector<Value> initial_condition)
    : terms_(std::move(terms)), init_(std::move(initial_condition)) {
    if (terms_.empty()) {
        throw std::invalid_argument("recurrence needs at least one term");
    }
    Value max_offset = 0;
    for (const auto& t : terms_) {
        if (t.inner_offset < 1) {
            throw std::invalid_argument("inner offset must be >= 1");
        }
        if (t.outer_shift < 0) {
            throw std::invalid_argument("outer shift must be >= 0");
        }
        max_offset = std::max(max_offset, t.inner_offset);
    }
    if (static_cast<Value>(init_.size()) < max_offset) {
        throw std::invalid_argument("initial condition length " + std::to_string(init_.size()) +
                                    " is shorter than the largest inner offset " + std::to_string(max_offset));
    }
    for (Value v : init_) {
        if (v < 1) {
            throw std::invalid_argument("initial values must be positive");
        }
    }
}

SequenceTrace::SequenceTrace(RecurrenceSpec spec, std::vector<Value> terms, std::optional<Death> death)
    : spec_(std::move(spec)), terms_(std::move(terms)), death_(death) {}

Value SequenceTrace::at(Value n) const {
    if (n < 1 || n > static_cast<Value>(terms_.size())) {
        throw std::out_of_range("index " + std::to_string(n) + " outside trace of length " +
                                std::to_string(terms_.size()));
    }
    return terms_[static_cast<std::size_t>(n - 1)];
}

TraceBuilder::TraceBuilder(RecurrenceSpec spec) : spec_(std::move(spec)) {}

void TraceBuilder::extend(std::size_t count) {
    if (death_ || count <= terms_.size()) {
        return;
    }
    terms_.reserve(count);
    const auto& init = spec_.initial_condition();
    while (terms_.size() < count && terms_.size() < init.size()) {
        terms_.push_back(init[terms_.size()]);
    }
    const auto& recurrence = spec_.terms();
    while (terms_.size() < count) {
        const auto n = static_cast<Value>(terms_.size()) + 1;
        Value sum = 0;
        for (const auto& t : recurrence) {
            // n - inner_offset >= 1 because the initial condition covers every offset.
            const Value inner = terms_[static_cast<std::size_t>(n - t.inner_offset - 1)];
            const Value arg = n - t.outer_shift - inner;
            if (arg < 1 || arg > n - 1) {
                death_ = Death{n, arg};
                return;
            }
            if (__builtin_add_overflow(sum, terms_[static_cast<std::size_t>(arg - 1)], &sum)) {
                throw OverflowError("term sum overflows int64 at index " + std::to_string(n));
            }
        }
        terms_.push_back(sum);
    }
}

SequenceTrace TraceBuilder::snapshot() const { return SequenceTrace(spec_, terms_, death_); }

SequenceTrace TraceBuilder::finish() && {
    return SequenceTrace(std::move(spec_), std::move(terms_), death_);
}

SequenceTrace generate(const RecurrenceSpec& spec, Value count) {
    if (count < 1) {
        throw std::invalid_argument("count must be >= 1");
    }
    TraceBuilder builder(spec);
    builder.extend(static_cast<std::size_t>(count));
    return std::move(builder).finish();
}

SlownessReport check_slow(std::span<const Value> terms) {
    if (terms.size() < 2) {
        throw std::invalid_argument("slowness needs at least two terms");
    }
    for (std::size_t i = 1; i < terms.size(); ++i) {
        const Value diff = terms[i] - terms[i - 1];
        if (diff != 0 && diff != 1) {
            return {false, static_cast<Value>(i + 1), diff};
        }
    }
    return {};
}

Value RepeatProfile::count(Value v) const {
    auto it = counts.find(v);
    return it == counts.end() ? 0 : it->second;
}

RepeatProfile repeat_profile(std::span<const Value> terms) {
    RepeatProfile profile;
    if (terms.empty()) {
        return profile;
    }
    for (Value v : terms) {
        ++profile.counts[v];
    }
    profile.complete_below = terms.back();
    for (const auto& [value, count] : profile.counts) {
        if (value >= profile.complete_below) {
            break;
        }
        profile.max_complete_multiplicity = std::max(profile.max_complete_multiplicity, count);
    }
    return profile;
}

RepeatProfile repeat_profile(const SequenceTrace& trace) {
    if (!trace.alive()) {
        throw std::invalid_argument("repeat profile needs an alive trace");
    }
    return repeat_profile(trace.values());
}

RecurrenceSpec identity_init_spec(std::span<const Value> offsets, Value length) {
    if (length < 1) {
        throw std::invalid_argument("initial condition length must be >= 1");
    }
    std::vector<RecurrenceTerm> terms;
    terms.reserve(offsets.size());
    for (Value o : offsets) {
        terms.push_back({0, o});
    }
    std::vector<Value> init(static_cast<std::size_t>(length));
    std::iota(init.begin(), init.end(), Value{1});
    return RecurrenceSpec(std::move(terms), std::move(init));
}

namespace {

    std::string lowercase(std::string_view s) {
        std::string out(s);
        std::transform(out.begin(), out.end(), out.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return out;
    }

    void expect_params(std::string_view name, std::span<const Value> params, std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi) {
            throw std::invalid_argument("preset " + std::string(name) + " takes " + std::to_string(lo) +
                                        (lo == hi ? "" : ".." + std::to_string(hi)) + " parameter(s), got " +
                                        std::to_string(params.size()));
        }
    }

    RecurrenceSpec all_ones_pair(Value r, Value s) {
        if (!(0 < r && r < s)) {
            throw std::invalid_argument("Qrs needs 0 < r < s");
        }
        return RecurrenceSpec({{0, r}, {0, s}}, std::vector<Value>(static_cast<std::size_t>(s), 1));
    }

}  // namespace

RecurrenceSpec make_preset(std::string_view name, std::span<const Value> params) {
    const std::string key = lowercase(name);
    if (key == "q") {
        expect_params(name, params, 0, 0);
        return RecurrenceSpec({{0, 1}, {0, 2}}, {1, 1});
    }
    if (key == "qrs") {
        expect_params(name, params, 2, 2);
        return all_ones_pair(params[0], params[1]);
    }
    if (key == "v") {
        expect_params(name, params, 0, 0);
        return all_ones_pair(1, 4);
    }
    if (key == "w") {
        expect_params(name, params, 0, 0);
        return all_ones_pair(2, 4);
    }
    if (key == "qrst") {
        expect_params(name, params, 3, 4);
        const Value r = params[0], s = params[1], t = params[2];
        if (!(0 < r && r < s && s < t)) {
            throw std::invalid_argument("Qrst needs 0 < r < s < t");
        }
        const Value n_init = params.size() == 4 ? params[3] : t;
        if (n_init < t) {
            throw std::invalid_argument("Qrst needs N >= t");
        }
        const Value offsets[] = {r, s, t};
        return identity_init_spec(offsets, n_init);
    }
    if (key == "conolly") {
        expect_params(name, params, 0, 0);
        return RecurrenceSpec({{0, 1}, {1, 2}}, {1, 1});
    }
    if (key == "b") {
        expect_params(name, params, 0, 0);
        const Value offsets[] = {1, 2, 3};
        return identity_init_spec(offsets, 5);
    }
    if (key == "bk") {
        expect_params(name, params, 2, 2);
        const Value k = params[0], n_init = params[1];
        if (k < 1) {
            throw std::invalid_argument("bk needs k >= 1");
        }
        if (n_init < k) {
            throw std::invalid_argument("bk needs N >= k");
        }
        std::vector<Value> offsets(static_cast<std::size_t>(k));
        std::iota(offsets.begin(), offsets.end(), Value{1});
        return identity_init_spec(offsets, n_init);
    }
    if (key == "bprime") {
        expect_params(name, params, 0, 0);
        const Value offsets[] = {2, 4, 6};
        return identity_init_spec(offsets, 11);
    }
    throw UnknownPresetError("unknown preset '" + std::string(name) + "'");
}

}  // namespace slowseq
