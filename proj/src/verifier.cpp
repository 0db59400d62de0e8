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

#include <slowseq/verifier.hpp>

#include <limits>
#include <numeric>
#include <string>

#include <slowseq/fast_b.hpp>

namespace slowseq::verify {

namespace {

    std::string at_value(Value m) { return "m=" + std::to_string(m); }

}  // namespace

Rational reduced(Value num, Value den) {
    if (den <= 0) {
        throw std::invalid_argument("denominator must be positive");
    }
    const Value g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

VerificationReport verify_structure(Value limit_value) {
    if (limit_value < 6) {
        throw std::invalid_argument("structure check needs limit >= 6");
    }
    VerificationReport report;
    report.range_lo = 1;
    report.range_hi = limit_value - 1;

    // Value limit-1 is complete once some term reaches limit.
    TraceBuilder builder(make_preset("B"));
    auto target = static_cast<std::size_t>(limit_value) * 3 / 2 + 16;
    for (;;) {
        builder.extend(target);
        if (!builder.alive()) {
            const auto& d = *builder.death();
            throw std::runtime_error("B oracle died at index " + std::to_string(d.at_index));
        }
        if (builder.values().back() >= limit_value) {
            break;
        }
        target *= 2;
    }

    const auto terms = builder.values();
    std::vector<Value> counts(static_cast<std::size_t>(limit_value), 0);
    for (std::size_t idx = 0; idx < terms.size(); ++idx) {
        if (idx > 0 && terms[idx] < terms[idx - 1]) {
            report.violations.push_back(
                {"decrease at n=" + std::to_string(idx + 1), terms[idx - 1], terms[idx]});
        }
        if (terms[idx] < limit_value) {
            ++counts[static_cast<std::size_t>(terms[idx])];
        }
    }
    for (Value m = 1; m < limit_value; ++m) {
        const Value expected = fastb::find_witness(m) ? 2 : 1;
        report.expect_eq(at_value(m) + " multiplicity", expected, counts[static_cast<std::size_t>(m)]);
    }
    return report;
}

VerificationReport verify_lemma_uniqueness(Value limit_value) {
    if (limit_value < 1) {
        throw std::invalid_argument("limit must be >= 1");
    }
    VerificationReport report;
    report.range_lo = 1;
    report.range_hi = limit_value;

    struct Aux {
        Value a;
        Value power;
    };
    std::vector<Aux> aux;
    for (Value a = 3, p = 3; a <= limit_value; a = 3 * a - 1, p *= 3) {
        aux.push_back({a, p});
    }
    for (Value m = 1; m <= limit_value; ++m) {
        Value hits = 0;
        for (const auto& [a, p] : aux) {
            if (a + p <= m && (m - a) % p == 0) {
                ++hits;
            }
        }
        if (hits > 1) {
            report.violations.push_back({at_value(m) + " witnesses", 1, hits});
        }
    }
    return report;
}

VerificationReport verify_r_identities(Value limit_value) {
    if (limit_value < 6) {
        throw std::invalid_argument("identity check needs limit >= 6");
    }
    VerificationReport report;
    report.range_lo = 6;
    report.range_hi = limit_value;

    for (Value m = 6; m <= limit_value; m += 3) {
        const Value third = m / 3;
        const auto below = fastb::find_witness(m - 1);
        const auto of_third = fastb::find_witness(third);

        report.expect_eq(at_value(m) + " witness(m-1) <=> witness(m/3)", below.has_value(),
                         of_third.has_value());
        if (below && of_third) {
            report.expect_eq(at_value(m) + " witness k", below->k, of_third->k);
            report.expect_eq(at_value(m) + " witness i", below->i, of_third->i + 1);
        }

        for (Value i = 2; fastb::aux_a(i - 1) + 1 < m; ++i) {
            const Value bump = (below && below->i == i) ? 1 : 0;
            report.expect_eq(at_value(m) + " R(m," + std::to_string(i) + ")",
                             fastb::r_partial(third, i - 1) + bump, fastb::r_partial(m, i));
        }

        report.expect_eq(at_value(m) + " m/3+R(m/3)", fastb::r_total(m) + (below ? 1 : 2),
                         third + fastb::r_total(third));
    }
    return report;
}

std::vector<DensityPoint> density_profile(std::span<const Value> points) {
    std::vector<DensityPoint> out;
    out.reserve(points.size());
    for (Value n : points) {
        if (n > std::numeric_limits<Value>::max() / 3) {
            throw std::out_of_range("density point " + std::to_string(n) + " too large for exact ratios");
        }
        const Value b = fastb::fast_b(n);
        DensityPoint p;
        p.n = n;
        p.b_of_n = b;
        p.ratio = reduced(b, n);
        const Value diff = 3 * b - 2 * n;
        p.deviation = reduced(diff < 0 ? -diff : diff, 3 * n);
        out.push_back(p);
    }
    return out;
}

bool deviation_nonincreasing(std::span<const DensityPoint> points) {
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i - 1].deviation < points[i].deviation) {
            return false;
        }
    }
    return true;
}

}  // namespace slowseq::verify
