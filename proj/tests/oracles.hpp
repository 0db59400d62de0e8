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

#ifndef SLOWSEQ_TESTS_ORACLES_HPP_
#define SLOWSEQ_TESTS_ORACLES_HPP_

// Test-only brute-force references. Nothing here calls into the library.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace slowseq::oracle {

// Plain three-term B recurrence, 1-based: result[0] is unused.
inline std::vector<std::int64_t> naive_b(std::int64_t count) {
    std::vector<std::int64_t> b(static_cast<std::size_t>(count) + 1, 0);
    for (std::int64_t n = 1; n <= count; ++n) {
        if (n <= 5) {
            b[n] = n;
        } else {
            b[n] = b[n - b[n - 1]] + b[n - b[n - 2]] + b[n - b[n - 3]];
        }
    }
    return b;
}

// a_1 = 3, a_i = 3a_{i-1} - 1, by iteration.
inline std::int64_t iterate_a(std::int64_t i) {
    std::int64_t a = 3;
    for (std::int64_t j = 1; j < i; ++j) {
        a = 3 * a - 1;
    }
    return a;
}

// Every (k, i) with k, i >= 1 and k*3^i + a_i == m, found by scanning both.
inline std::vector<std::pair<std::int64_t, std::int64_t>> scan_witness_pairs(std::int64_t m) {
    std::vector<std::pair<std::int64_t, std::int64_t>> found;
    std::int64_t p = 3;
    for (std::int64_t i = 1; iterate_a(i) < m; ++i, p *= 3) {
        for (std::int64_t k = 1; k * p + iterate_a(i) <= m; ++k) {
            if (k * p + iterate_a(i) == m) {
                found.emplace_back(k, i);
            }
        }
    }
    return found;
}

// Occurrence counts of each value in b[1..count].
inline std::map<std::int64_t, std::int64_t> counts(const std::vector<std::int64_t>& b) {
    std::map<std::int64_t, std::int64_t> c;
    for (std::size_t n = 1; n < b.size(); ++n) {
        ++c[b[n]];
    }
    return c;
}

}  // namespace slowseq::oracle

#endif  // SLOWSEQ_TESTS_ORACLES_HPP_
