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

#include "agq/field.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "agq/error.h"

using namespace agq;

namespace {

constexpr uint64_t DEFAULT_FIELD_CAP = uint64_t{1} << 22;

uint64_t field_cap(const FieldOptions &options) {
    if (options.max_size != 0) {
        return options.max_size;
    }
    if (const char *env = std::getenv("AGQ_FIELD_CAP")) {
        uint64_t v = std::strtoull(env, nullptr, 10);
        if (v != 0) {
            return v;
        }
    }
    return DEFAULT_FIELD_CAP;
}

uint32_t inverse_mod_p(uint32_t a, uint32_t p) {
    uint32_t r = 1;
    uint64_t base = a % p;
    uint32_t e = p - 2;
    while (e) {
        if (e & 1) {
            r = (uint32_t)(r * base % p);
        }
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

}  // namespace

bool agq::is_prime(uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (uint64_t d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

namespace {

// Fills exp/log from the powers of x modulo f. Fails unless x is primitive.
bool fill_tables(
    uint32_t p,
    const std::vector<uint32_t> &f,
    uint32_t size,
    std::vector<uint32_t> &exp,
    std::vector<Elem> &log) {
    size_t n = f.size() - 1;
    uint32_t order = size - 1;
    exp.assign(order, 0);
    log.assign(size, ZERO);
    std::vector<uint32_t> c(n, 0);
    c[0] = 1;
    for (uint32_t e = 0; e < order; e++) {
        uint32_t index = 0;
        for (size_t i = n; i-- > 0;) {
            index = index * p + c[i];
        }
        if (index == 0 || log[index] != ZERO) {
            return false;
        }
        exp[e] = index;
        log[index] = e;
        uint32_t top = c[n - 1];
        for (size_t i = n - 1; i > 0; i--) {
            c[i] = c[i - 1];
        }
        c[0] = 0;
        if (top) {
            for (size_t i = 0; i < n; i++) {
                c[i] = (c[i] + (p - top) * f[i]) % p;
            }
        }
    }
    return c[0] == 1 && std::all_of(c.begin() + 1, c.end(), [](uint32_t v) { return v == 0; });
}

}  // namespace

Field Field::build(uint32_t p, uint32_t m, const FieldOptions &options) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    }
    if (m == 0) {
        throw Error(ErrorKind::InvalidArgument, "extension degree m must be positive");
    }
    uint64_t cap = field_cap(options);
    uint64_t size = 1;
    for (uint32_t i = 0; i < 2 * m; i++) {
        size *= p;
        if (size > cap) {
            throw Error(
                ErrorKind::FieldTooLarge,
                std::to_string(p) + "^" + std::to_string(2 * m) + " exceeds the field cap " + std::to_string(cap));
        }
    }

    Field f;
    f.p_ = p;
    f.m_ = m;
    f.q_ = 1;
    for (uint32_t i = 0; i < m; i++) {
        f.q_ *= p;
    }
    f.size_ = (uint32_t)size;
    f.minus_one_ = p == 2 ? 0 : f.order() / 2;

    uint32_t n = 2 * m;
    std::vector<uint32_t> modulus = conway_polynomial(p, n);
    if (!modulus.empty()) {
        f.conway_ = true;
        if (!fill_tables(p, modulus, f.size_, f.exp_, f.log_)) {
            throw Error(ErrorKind::NoConwayEntry, "built-in table entry is not primitive");
        }
    } else if (options.strict_conway) {
        throw Error(ErrorKind::NoConwayEntry, "no Conway polynomial for " + std::to_string(p) + "^" + std::to_string(n));
    } else {
        // Least primitive polynomial, coefficients (a_{n-1}, ..., a_0) read as a base-p number.
        bool found = false;
        for (uint64_t idx = 0; idx < size && !found; idx++) {
            modulus.assign(n + 1, 0);
            modulus[n] = 1;
            uint64_t v = idx;
            for (uint32_t i = 0; i < n; i++) {
                modulus[i] = (uint32_t)(v % p);
                v /= p;
            }
            if (modulus[0] == 0) {
                continue;
            }
            found = fill_tables(p, modulus, f.size_, f.exp_, f.log_);
        }
        if (!found) {
            throw Error(ErrorKind::NoConwayEntry, "no primitive polynomial found");
        }
    }
    f.modulus_ = modulus;

    f.zech_.assign(f.order(), ZERO);
    for (uint32_t e = 0; e < f.order(); e++) {
        uint32_t index = f.exp_[e];
        uint32_t low = index % p;
        uint32_t next = low == p - 1 ? index - (p - 1) : index + 1;
        f.zech_[e] = next == 0 ? ZERO : f.log_[next];
    }
    return f;
}

Elem Field::inv(Elem a) const {
    if (a == ZERO) {
        throw Error(ErrorKind::ZeroInput, "inverse of zero");
    }
    return a == 0 ? 0 : order() - a;
}

Elem Field::pow(Elem a, int64_t e) const {
    if (a == ZERO) {
        if (e < 0) {
            throw Error(ErrorKind::ZeroInput, "negative power of zero");
        }
        return e == 0 ? ONE : ZERO;
    }
    int64_t r = e % (int64_t)order();
    if (r < 0) {
        r += order();
    }
    return (Elem)((uint64_t)a * (uint64_t)r % order());
}

Elem Field::absolute_trace(Elem a) const {
    Elem acc = ZERO;
    Elem x = a;
    for (uint32_t i = 0; i < 2 * m_; i++) {
        acc = add(acc, x);
        x = pow(x, p_);
    }
    return acc;
}

Elem Field::norm_preimage(Elem c) const {
    if (c == ZERO) {
        throw Error(ErrorKind::ZeroInput, "norm preimage of zero");
    }
    if (c % (q_ + 1) != 0) {
        throw Error(ErrorKind::NotInBaseField, format(c) + " is not in GF(" + std::to_string(q_) + ")");
    }
    return c / (q_ + 1);
}

Elem Field::from_int(int64_t v) const {
    int64_t r = v % (int64_t)p_;
    if (r < 0) {
        r += p_;
    }
    return r == 0 ? ZERO : log_[r];
}

std::vector<uint32_t> Field::to_coords(Elem a) const {
    std::vector<uint32_t> out(2 * m_, 0);
    uint32_t index = to_index(a);
    for (auto &c : out) {
        c = index % p_;
        index /= p_;
    }
    return out;
}

Elem Field::from_coords(const std::vector<uint32_t> &coords) const {
    uint32_t index = 0;
    for (size_t i = coords.size(); i-- > 0;) {
        index = index * p_ + coords[i] % p_;
    }
    return from_index(index);
}

Elem Field::apply_additive(AdditiveMap map, Elem y) const {
    switch (map) {
        case AdditiveMap::SquarePlusId:
            return add(mul(y, y), y);
        case AdditiveMap::FrobPlusId:
            return add(frobenius(y), y);
        case AdditiveMap::FrobMinusId:
            return sub(frobenius(y), y);
    }
    return ZERO;
}

std::vector<Elem> Field::solve_additive(AdditiveMap map, Elem a) const {
    // The map is GF(p)-linear; solve it as a 2m x 2m system over GF(p).
    size_t n = 2 * m_;
    std::vector<std::vector<uint32_t>> rows(n, std::vector<uint32_t>(n + 1, 0));
    uint32_t unit = 1;
    for (size_t j = 0; j < n; j++) {
        auto image = to_coords(apply_additive(map, from_index(unit)));
        for (size_t i = 0; i < n; i++) {
            rows[i][j] = image[i];
        }
        unit *= p_;
    }
    auto rhs = to_coords(a);
    for (size_t i = 0; i < n; i++) {
        rows[i][n] = rhs[i];
    }

    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t c = 0; c < n && r < n; c++) {
        size_t piv = r;
        while (piv < n && rows[piv][c] == 0) {
            piv++;
        }
        if (piv == n) {
            continue;
        }
        std::swap(rows[piv], rows[r]);
        uint32_t s = inverse_mod_p(rows[r][c], p_);
        for (auto &v : rows[r]) {
            v = (uint32_t)((uint64_t)v * s % p_);
        }
        for (size_t i = 0; i < n; i++) {
            if (i != r && rows[i][c]) {
                uint32_t factor = rows[i][c];
                for (size_t j = 0; j <= n; j++) {
                    rows[i][j] = (uint32_t)((rows[i][j] + (uint64_t)(p_ - factor) * rows[r][j]) % p_);
                }
            }
        }
        pivot_cols.push_back(c);
        r++;
    }
    for (size_t i = r; i < n; i++) {
        if (rows[i][n] != 0) {
            return {};
        }
    }

    std::vector<size_t> free_cols;
    for (size_t c = 0, k = 0; c < n; c++) {
        if (k < pivot_cols.size() && pivot_cols[k] == c) {
            k++;
        } else {
            free_cols.push_back(c);
        }
    }
    std::vector<Elem> out;
    std::vector<uint32_t> assign(free_cols.size(), 0);
    while (true) {
        std::vector<uint32_t> x(n, 0);
        for (size_t k = 0; k < free_cols.size(); k++) {
            x[free_cols[k]] = assign[k];
        }
        for (size_t i = 0; i < pivot_cols.size(); i++) {
            uint64_t v = rows[i][n];
            for (size_t k = 0; k < free_cols.size(); k++) {
                v += (uint64_t)(p_ - rows[i][free_cols[k]]) * assign[k];
            }
            x[pivot_cols[i]] = (uint32_t)(v % p_);
        }
        out.push_back(from_coords(x));
        size_t k = 0;
        while (k < assign.size() && ++assign[k] == p_) {
            assign[k++] = 0;
        }
        if (k == assign.size()) {
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string Field::format(Elem a) const {
    if (a == ZERO) {
        return "0";
    }
    if (a == 0) {
        return "1";
    }
    return "t^" + std::to_string(a);
}

Elem Field::parse(std::string_view token) const {
    auto fail = [&](const char *why) {
        return Error(ErrorKind::ParseError, "bad element token '" + std::string(token) + "': " + why);
    };
    auto digits = [&](std::string_view s) {
        if (s.empty() || s.size() > 18 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw fail("expected digits");
        }
        return std::stoll(std::string(s));
    };
    if (token == "t") {
        return theta();
    }
    if (token.size() >= 2 && token[0] == 't' && token[1] == '^') {
        return theta_pow(digits(token.substr(2)));
    }
    int64_t v = digits(token);
    if (v >= (int64_t)p_) {
        throw fail("integer outside the prime field");
    }
    return from_int(v);
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(size_);
    for (uint32_t e = 0; e < order(); e++) {
        out[e] = e;
    }
    out[order()] = ZERO;
    return out;
}
