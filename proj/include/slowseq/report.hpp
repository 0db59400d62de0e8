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

#ifndef SLOWSEQ_REPORT_HPP_
#define SLOWSEQ_REPORT_HPP_

#include <string>
#include <vector>

#include <slowseq/recurrence.hpp>

namespace slowseq {

struct Violation {
    std::string location;
    Value expected{0};
    Value actual{0};
};

struct VerificationReport {
    // Inclusive range of values or indices the check covered.
    Value range_lo{0};
    Value range_hi{0};
    std::vector<Violation> violations;
    // Observations that are reported but never fail the check.
    std::vector<std::string> findings;

    [[nodiscard]] bool passed() const noexcept { return violations.empty(); }

    void expect_eq(std::string location, Value expected, Value actual) {
        if (expected != actual) {
            violations.push_back({std::move(location), expected, actual});
        }
    }
};

}  // namespace slowseq

#endif  // SLOWSEQ_REPORT_HPP_
