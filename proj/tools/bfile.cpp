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

#include "bfile.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

namespace slowseq::cli {

namespace {

    bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

    std::string_view trim(std::string_view s) {
        while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
        while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
        return s;
    }

    bool parse_plain(std::string_view s, std::int64_t& out) {
        if (s.empty()) {
            return false;
        }
        const char* first = s.data();
        if (*first == '+') {
            ++first;
        }
        const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
        return ec == std::errc{} && ptr == s.data() + s.size();
    }

}  // namespace

std::int64_t parse_integer(std::string_view text) {
    const std::string_view s = trim(text);
    std::int64_t value = 0;
    if (parse_plain(s, value)) {
        return value;
    }

    const auto e_pos = s.find_first_of("eE");
    if (e_pos == std::string_view::npos) {
        throw ParseError("not an integer: '" + std::string(text) + "'");
    }
    std::string_view mantissa = s.substr(0, e_pos);
    std::int64_t exponent = 0;
    if (!parse_plain(s.substr(e_pos + 1), exponent) || mantissa.empty() || mantissa.front() == '-') {
        throw ParseError("not an integer: '" + std::string(text) + "'");
    }

    // Collect mantissa digits, tracking how many follow the decimal point.
    std::string digits;
    std::int64_t fraction_digits = 0;
    bool seen_point = false;
    for (char c : mantissa) {
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            fraction_digits += seen_point ? 1 : 0;
        } else if (!(c == '+' && digits.empty() && !seen_point)) {
            throw ParseError("not an integer: '" + std::string(text) + "'");
        }
    }
    if (digits.empty()) {
        throw ParseError("not an integer: '" + std::string(text) + "'");
    }
    const bool zero = digits.find_first_not_of('0') == std::string::npos;
    const std::int64_t shift = exponent - fraction_digits;
    if (shift < 0) {
        const auto drop = static_cast<std::size_t>(-shift);
        if (drop >= digits.size()) {
            if (!zero) {
                throw ParseError("not an exact integer: '" + std::string(text) + "'");
            }
            return 0;
        }
        if (digits.find_first_not_of('0', digits.size() - drop) != std::string::npos) {
            throw ParseError("not an exact integer: '" + std::string(text) + "'");
        }
        digits.resize(digits.size() - drop);
    } else if (!zero) {
        if (shift > 19) {
            throw ParseError("integer out of range: '" + std::string(text) + "'");
        }
        digits.append(static_cast<std::size_t>(shift), '0');
    }
    if (!parse_plain(digits, value)) {
        throw ParseError("integer out of range: '" + std::string(text) + "'");
    }
    return value;
}

void parse_range(std::string_view text, std::vector<std::int64_t>& out) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        out.push_back(parse_integer(text));
        return;
    }
    const std::int64_t lo = parse_integer(text.substr(0, dots));
    const std::int64_t hi = parse_integer(text.substr(dots + 2));
    if (lo > hi) {
        throw ParseError("empty range '" + std::string(text) + "'");
    }
    for (std::int64_t n = lo;; ++n) {
        out.push_back(n);
        if (n == hi) {
            break;
        }
    }
}

std::vector<BFileRecord> read_bfile(std::istream& in) {
    std::vector<BFileRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') {
            continue;
        }
        const auto sep = body.find_first_of(" \t");
        const auto where = "line " + std::to_string(line_no) + ": ";
        if (sep == std::string_view::npos) {
            throw ParseError(where + "expected '<n> <value>'");
        }
        BFileRecord rec;
        if (!parse_plain(body.substr(0, sep), rec.index) || !parse_plain(trim(body.substr(sep)), rec.value)) {
            throw ParseError(where + "malformed record '" + std::string(body) + "'");
        }
        if (!records.empty() && rec.index <= records.back().index) {
            throw ParseError(where + "index " + std::to_string(rec.index) + " does not increase");
        }
        records.push_back(rec);
    }
    return records;
}

std::vector<BFileRecord> read_bfile_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return read_bfile(in);
}

void write_terms(std::ostream& out, std::span<const std::int64_t> terms, Format format) {
    const char sep = format == Format::csv ? ',' : '\t';
    if (format == Format::csv) {
        out << "n,value\n";
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        out << (i + 1) << sep << terms[i] << '\n';
    }
}

}  // namespace slowseq::cli
