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

#include <slowseq/fast_b.hpp>

#include <limits>
#include <string>

namespace slowseq::fastb {

namespace {

    constexpr Value kMax = std::numeric_limits<Value>::max();

    void require_positive(Value x, const char* what) {
        if (x < 1) {
            throw std::invalid_argument(std::string(what) + " must be >= 1");
        }
    }

    // Walks (i, 3^i, a_i) upward from i = 1, stopping before either quantity
    // would overflow.
    class AuxWalk {
      public:
        [[nodiscard]] Value i() const { return i_; }
        [[nodiscard]] Value power() const { return power_; }
        [[nodiscard]] Value a() const { return a_; }

        // False when the next step is not representable.
        bool advance() {
            if (power_ > kMax / 3 || a_ > kMax / 3) {
                return false;
            }
            ++i_;
            power_ *= 3;
            a_ = 3 * a_ - 1;
            return true;
        }

      private:
        Value i_{1};
        Value power_{3};
        Value a_{3};
    };

}  // namespace

Value pow3(Value i) {
    if (i < 0) {
        throw std::invalid_argument("exponent must be >= 0");
    }
    Value p = 1;
    for (Value j = 0; j < i; ++j) {
        if (p > kMax / 3) {
            throw OverflowError("3^" + std::to_string(i) + " overflows int64");
        }
        p *= 3;
    }
    return p;
}

Value aux_a(Value i) {
    require_positive(i, "i");
    const Value p = pow3(i - 1);
    if (p > (kMax - 1) / 5) {
        throw OverflowError("a_" + std::to_string(i) + " overflows int64");
    }
    return (5 * p + 1) / 2;
}

std::optional<WitnessPair> find_witness(Value m) {
    require_positive(m, "m");
    AuxWalk w;
    // k >= 1 requires a_i + 3^i <= m.
    while (w.a() <= m - w.power()) {
        if ((m - w.a()) % w.power() == 0) {
            return WitnessPair{(m - w.a()) / w.power(), w.i()};
        }
        if (!w.advance()) {
            break;
        }
    }
    return std::nullopt;
}

Value r_partial(Value m, Value i) {
    require_positive(m, "m");
    require_positive(i, "i");
    Value a = 0;
    Value p = 0;
    try {
        a = aux_a(i);
        p = pow3(i);
    } catch (const OverflowError&) {
        // a_i or 3^i beyond int64 is far above any representable m.
        return 0;
    }
    const Value num = m - a - 1;
    return num <= 0 ? 0 : num / p;
}

Value r_total(Value m) {
    require_positive(m, "m");
    Value total = 0;
    AuxWalk w;
    while (w.a() + 1 < m) {
        total += (m - w.a() - 1) / w.power();
        if (!w.advance()) {
            break;
        }
    }
    return total;
}

Value first_index(Value m) { return m + r_total(m); }

OccurrenceInfo occurrence_info(Value m) {
    OccurrenceInfo info;
    info.value = m;
    info.first_index = first_index(m);
    info.witness = find_witness(m);
    info.multiplicity = info.witness ? 2 : 1;
    return info;
}

Value fast_b(Value n) {
    require_positive(n, "n");
    if (n > kMaxIndex) {
        throw std::out_of_range("n exceeds 2^62");
    }
    if (n <= 5) {
        return n;
    }
    // Greatest m in [1, n] with m + R(m) <= n; f(1) = 1 <= n always holds.
    Value lo = 1;
    Value hi = n;
    while (lo < hi) {
        const Value mid = lo + (hi - lo + 1) / 2;
        if (first_index(mid) <= n) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

}  // namespace slowseq::fastb
