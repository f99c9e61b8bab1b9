// Copyright 2026 The agq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef _AGQ_FIELD_H
#define _AGQ_FIELD_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace agq {

/// A nonzero element is stored as its discrete log e, meaning theta^e.
using Elem = uint32_t;
constexpr Elem ZERO = UINT32_MAX;
constexpr Elem ONE = 0;

struct FieldOptions {
    /// Largest allowed p^(2m). Zero means "read AGQ_FIELD_CAP or use 2^22".
    uint64_t max_size = 0;
    /// Fail with NoConwayEntry instead of searching for a primitive modulus.
    bool strict_conway = false;
};

enum class AdditiveMap {
    SquarePlusId,  // y -> y^2 + y
    FrobPlusId,    // y -> y^q + y
    FrobMinusId,   // y -> y^q - y
};

/// The tower GF(p) < GF(q) < GF(q^2), q = p^m, with log tables for GF(q^2).
///
/// Immutable after construction. All arithmetic goes through the tables:
/// multiplication adds exponents, addition uses Zech logarithms.
class Field {
   public:
    static Field build(uint32_t p, uint32_t m, const FieldOptions &options = {});

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }
    uint32_t size() const { return size_; }
    uint32_t order() const { return size_ - 1; }
    bool is_conway() const { return conway_; }
    /// Modulus coefficients over GF(p), lowest degree first, degree 2m.
    const std::vector<uint32_t> &modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const {
        if (a == ZERO) {
            return b;
        }
        if (b == ZERO) {
            return a;
        }
        uint32_t d = b >= a ? b - a : b + order() - a;
        Elem z = zech_[d];
        if (z == ZERO) {
            return ZERO;
        }
        uint32_t r = a + z;
        return r >= order() ? r - order() : r;
    }
    Elem neg(Elem a) const {
        if (a == ZERO) {
            return ZERO;
        }
        uint32_t r = a + minus_one_;
        return r >= order() ? r - order() : r;
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == ZERO || b == ZERO) {
            return ZERO;
        }
        uint32_t r = a + b;
        return r >= order() ? r - order() : r;
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// a^e for any integer e; 0^0 is 1 so monomials evaluate at x = 0.
    Elem pow(Elem a, int64_t e) const;
    Elem theta() const { return 1; }
    Elem theta_pow(int64_t e) const { return pow(theta(), e); }
    Elem minus_one() const { return minus_one_; }

    Elem frobenius(Elem a) const { return pow(a, q_); }
    Elem norm(Elem a) const { return pow(a, (int64_t)q_ + 1); }
    Elem trace(Elem a) const { return add(a, frobenius(a)); }
    /// Trace down to the prime field, sum of a^(p^i) for i < 2m.
    Elem absolute_trace(Elem a) const;
    bool in_base_field(Elem a) const { return a == ZERO || a % (q_ + 1) == 0; }
    bool in_prime_field(Elem a) const { return a == ZERO || a % (order() / (p_ - 1)) == 0; }
    /// The v = theta^(log(c)/(q+1)) with v^(q+1) = c, for c in GF(q)*.
    Elem norm_preimage(Elem c) const;

    /// The image of an integer under Z -> GF(p) -> GF(q^2).
    Elem from_int(int64_t v) const;
    /// Coordinates over GF(p) in the polynomial basis 1, x, ..., x^(2m-1).
    std::vector<uint32_t> to_coords(Elem a) const;
    Elem from_coords(const std::vector<uint32_t> &coords) const;
    /// Integer encoding sum c_i p^i of the coordinates.
    uint32_t to_index(Elem a) const { return a == ZERO ? 0 : exp_[a]; }
    Elem from_index(uint32_t index) const { return index == 0 ? ZERO : log_[index]; }

    std::vector<Elem> solve_additive(AdditiveMap map, Elem a) const;
    Elem apply_additive(AdditiveMap map, Elem y) const;

    /// `0`, `1` or `t^e`.
    std::string format(Elem a) const;
    /// Accepts the formatter output, a bare `t`, and prime-field integers.
    Elem parse(std::string_view token) const;

    /// All elements: nonzero ones by exponent, then zero.
    std::vector<Elem> elements() const;

   private:
    uint32_t p_ = 0;
    uint32_t m_ = 0;
    uint32_t q_ = 0;
    uint32_t size_ = 0;
    Elem minus_one_ = 0;
    bool conway_ = false;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_;  // exponent -> index
    std::vector<Elem> log_;      // index -> exponent
    std::vector<Elem> zech_;     // e -> log(1 + theta^e)
};

/// Conway polynomial of GF(p^n) from the built-in table, lowest degree first.
/// Returns an empty vector when the table has no entry.
std::vector<uint32_t> conway_polynomial(uint32_t p, uint32_t n);

bool is_prime(uint64_t n);

}  // namespace agq

#endif
