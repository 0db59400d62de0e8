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

#ifndef SLOWSEQ_RECURRENCE_HPP_
#define SLOWSEQ_RECURRENCE_HPP_

// Generic evaluator for nested recurrences of the Hofstadter family:
//
//   S(n) = sum_j S(n - e_j - S(n - o_j))
//
// with an explicit initial condition S(1..L). Indices are 1-based throughout
// the public surface.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slowseq {

using Value = std::int64_t;

// Thrown when a term sum leaves the int64 range.
class OverflowError : public std::overflow_error {
  public:
    using std::overflow_error::overflow_error;
};

// Thrown for unknown preset names.
class UnknownPresetError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// One summand S(n - outer_shift - S(n - inner_offset)).
struct RecurrenceTerm {
    Value outer_shift{0};
    Value inner_offset{1};

    friend bool operator==(const RecurrenceTerm&, const RecurrenceTerm&) = default;
};

class RecurrenceSpec {
  public:
    // Throws std::invalid_argument unless terms is nonempty, every term has
    // inner_offset >= 1 and outer_shift >= 0, every initial value is
    // positive, and the initial condition covers the largest inner offset.
    RecurrenceSpec(std::vector<RecurrenceTerm> terms, std::vector<Value> initial_condition);

    [[nodiscard]] const std::vector<RecurrenceTerm>& terms() const noexcept { return terms_; }
    [[nodiscard]] const std::vector<Value>& initial_condition() const noexcept { return init_; }
    [[nodiscard]] std::size_t initial_length() const noexcept { return init_.size(); }

    friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;

  private:
    std::vector<RecurrenceTerm> terms_;
    std::vector<Value> init_;
};

struct Death {
    Value at_index{0};
    Value offending_argument{0};

    friend bool operator==(const Death&, const Death&) = default;
};

class SequenceTrace {
  public:
    SequenceTrace(RecurrenceSpec spec, std::vector<Value> terms, std::optional<Death> death);

    [[nodiscard]] const RecurrenceSpec& spec() const noexcept { return spec_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool alive() const noexcept { return !death_.has_value(); }
    [[nodiscard]] const std::optional<Death>& death() const noexcept { return death_; }

    // 1-based; throws std::out_of_range outside [1, size()].
    [[nodiscard]] Value at(Value n) const;
    [[nodiscard]] Value back() const { return terms_.back(); }

    // Terms in index order; element 0 is S(1).
    [[nodiscard]] std::span<const Value> values() const noexcept { return terms_; }

  private:
    RecurrenceSpec spec_;
    std::vector<Value> terms_;
    std::optional<Death> death_;
};

// Incremental form of generate(): keeps the full history and extends it on
// demand. Once dead, extend() is a no-op.
class TraceBuilder {
  public:
    explicit TraceBuilder(RecurrenceSpec spec);

    // Extends to `count` terms (or until death). Throws OverflowError.
    void extend(std::size_t count);

    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool alive() const noexcept { return !death_.has_value(); }
    [[nodiscard]] const std::optional<Death>& death() const noexcept { return death_; }
    [[nodiscard]] std::span<const Value> values() const noexcept { return terms_; }

    [[nodiscard]] SequenceTrace snapshot() const;
    [[nodiscard]] SequenceTrace finish() &&;

  private:
    RecurrenceSpec spec_;
    std::vector<Value> terms_;
    std::optional<Death> death_;
};

// Throws std::invalid_argument if count < 1, OverflowError on overflow.
SequenceTrace generate(const RecurrenceSpec& spec, Value count);

struct SlownessReport {
    bool is_slow{true};
    std::optional<Value> first_violation_index;
    std::optional<Value> violating_difference;
};

// Scans consecutive differences from index 2. Requires at least 2 terms.
SlownessReport check_slow(std::span<const Value> terms);
inline SlownessReport check_slow(const SequenceTrace& trace) { return check_slow(trace.values()); }

struct RepeatProfile {
    std::map<Value, Value> counts;
    // Values strictly below the final term; their counts cannot grow.
    Value complete_below{0};
    Value max_complete_multiplicity{0};

    [[nodiscard]] Value count(Value v) const;
};

RepeatProfile repeat_profile(std::span<const Value> terms);
// Requires an alive trace.
RepeatProfile repeat_profile(const SequenceTrace& trace);

// Preset names (case-insensitive):
//   Q                  offsets (1,2), init [1,1]
//   Qrs   r s          offsets (r,s), all-ones init of length s
//   V                  Qrs with (1,4)
//   W                  Qrs with (2,4)
//   Qrst  r s t [N]    offsets (r,s,t), identity init of length N (default t)
//   conolly            C(n)=C(n-C(n-1))+C(n-1-C(n-2)), init [1,1]
//   B                  offsets (1,2,3), init [1..5]
//   bk    k N          offsets (1..k), identity init of length N
//   bprime             offsets (2,4,6), init [1..11]
RecurrenceSpec make_preset(std::string_view name, std::span<const Value> params = {});

RecurrenceSpec identity_init_spec(std::span<const Value> offsets, Value length);

}  // namespace slowseq

#endif  // SLOWSEQ_RECURRENCE_HPP_
