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

#ifndef SLOWSEQ_TOOLS_BFILE_HPP_
#define SLOWSEQ_TOOLS_BFILE_HPP_

// OEIS b-file reading/writing plus the integer/range syntax the CLI accepts.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slowseq::cli {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct BFileRecord {
    std::int64_t index{0};
    std::int64_t value{0};

    friend bool operator==(const BFileRecord&, const BFileRecord&) = default;
};

enum class Format { bfile, csv };

// Lines "<n> <value>" with any run of spaces/tabs between the fields; blank
// lines and lines starting with '#' are skipped. Indices must strictly
// increase. Throws ParseError with the offending line number.
std::vector<BFileRecord> read_bfile(std::istream& in);
std::vector<BFileRecord> read_bfile_path(const std::string& path);

// Terms start at index 1.
void write_terms(std::ostream& out, std::span<const std::int64_t> terms, Format format);

// Plain decimal, or scientific notation that denotes an exact integer
// ("1e12", "2.5e3"). Throws ParseError.
std::int64_t parse_integer(std::string_view text);

// "a..b" (inclusive) or a single integer; appends to `out`.
void parse_range(std::string_view text, std::vector<std::int64_t>& out);

}  // namespace slowseq::cli

#endif  // SLOWSEQ_TOOLS_BFILE_HPP_
