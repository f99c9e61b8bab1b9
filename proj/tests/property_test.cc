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

// Randomized property suites. Each runs at least 1000 cases with a fixed seed
// over towers with q^2 <= 2^12.

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "agq/codes.h"
#include "agq/error.h"
#include "agq/point_sets.h"
#include "oracles.h"

using namespace agq;

namespace {

constexpr size_t CASES = 1000;

struct Tower {
    uint32_t p;
    uint32_t m;
};

const std::vector<Tower> &towers() {
    static const std::vector<Tower> all = [] {
        std::vector<Tower> out;
        for (uint32_t p = 2; p <= 64; p++) {
            if (!is_prime(p)) {
                continue;
            }
            uint64_t size = (uint64_t)p * p;
            for (uint32_t m = 1; size <= 4096; m++, size *= (uint64_t)p * p) {
                out.push_back({p, m});
            }
        }
        return out;
    }();
    return all;
}

const Field &field(uint32_t p, uint32_t m) {
    static std::map<std::pair<uint32_t, uint32_t>, Field> cache;
    auto key = std::make_pair(p, m);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, Field::build(p, m)).first;
    }
    return it->second;
}

const Field &random_field(std::mt19937_64 &rng, uint32_t max_size = 4096) {
    while (true) {
        const Tower &t = towers()[rng() % towers().size()];
        const Field &f = field(t.p, t.m);
        if (f.size() <= max_size) {
            return f;
        }
    }
}

Elem random_elem(const Field &f, std::mt19937_64 &rng) {
    return f.from_index((uint32_t)(rng() % f.size()));
}

Matrix random_matrix(const Field &f, size_t rows, size_t cols, std::mt19937_64 &rng) {
    Matrix m(rows, cols);
    for (auto &v : m.data) {
        v = random_elem(f, rng);
    }
    return m;
}

std::vector<uint32_t> divisors(uint64_t v) {
    std::vector<uint32_t> out;
    for (uint64_t d = 1; d <= v; d++) {
        if (v % d == 0) {
            out.push_back((uint32_t)d);
        }
    }
    return out;
}

/// One of the three families with at most `max_n` points, or nothing.
std::optional<EvaluationSet> random_point_set(const Field &f, std::mt19937_64 &rng, size_t max_n) {
    try {
        switch (rng() % 3) {
            case 0: {
                auto ds = divisors(f.order());
                uint32_t d = ds[rng() % ds.size()];
                if (d + 1 > max_n) {
                    return std::nullopt;
                }
                return roots_of_unity_set(f, d + 1);
            }
            case 1: {
                auto ds = divisors(f.order());
                uint32_t n = ds[rng() % ds.size()];
                uint32_t t = 1 + (uint32_t)(rng() % 3);
                if ((size_t)(t + 1) * n + 1 > max_n) {
                    return std::nullopt;
                }
                auto policy = rng() % 2 ? LeaderPolicy::VnCosets : LeaderPolicy::SubfieldLeaders;
                return coset_union_set(f, n, t, {}, policy);
            }
            default: {
                uint32_t t = 1 + (uint32_t)(rng() % f.q());
                if ((size_t)t * f.q() > max_n) {
                    return std::nullopt;
                }
                return affine_grid_set(f, t);
            }
        }
    } catch (const Error &) {
        return std::nullopt;
    }
}

size_t weight(const std::vector<Elem> &w) {
    size_t out = 0;
    for (Elem e : w) {
        out += e != ZERO;
    }
    return out;
}

}  // namespace

TEST(property, residue_identity) {
    std::mt19937_64 rng(0x5eed0001);
    size_t done = 0;
    std::map<PointFamily, size_t> per_family;
    while (done < CASES) {
        const Field &f = random_field(rng);
        auto set = random_point_set(f, rng, 80);
        if (!set || set->size() < 2) {
            continue;
        }
        oracle::PolyField F(f);
        std::vector<uint32_t> a;
        for (Elem x : set->points) {
            a.push_back(f.to_index(x));
        }
        std::vector<uint32_t> h_inv(a.size());
        for (size_t i = 0; i < a.size(); i++) {
            uint32_t h = 1;
            for (size_t j = 0; j < a.size(); j++) {
                if (i != j) {
                    h = F.mul(h, F.sub(a[i], a[j]));
                }
            }
            ASSERT_NE(h, 0u);
            h_inv[i] = F.inv(h);
        }
        uint64_t e = rng() % (a.size() - 1);
        uint32_t s = 0;
        for (size_t i = 0; i < a.size(); i++) {
            s = F.add(s, F.mul(F.pow(a[i], e), h_inv[i]));
        }
        ASSERT_EQ(s, 0u) << point_family_name(set->family) << " q2=" << f.size() << " n=" << a.size() << " e=" << e;
        per_family[set->family]++;
        done++;
    }
    ASSERT_EQ(per_family.size(), 3u);
}

TEST(property, norm_preimage) {
    std::mt19937_64 rng(0x5eed0002);
    for (size_t i = 0; i < CASES; i++) {
        const Field &f = random_field(rng);
        oracle::PolyField F(f);
        Elem c = (Elem)((rng() % (f.q() - 1)) * (f.q() + 1));
        Elem v = f.norm_preimage(c);
        ASSERT_EQ(F.pow(f.to_index(v), f.q() + 1), f.to_index(c));
    }
}

TEST(property, frobenius_weight_invariance) {
    std::mt19937_64 rng(0x5eed0003);
    for (size_t i = 0; i < CASES; i++) {
        const Field &f = random_field(rng, 64);
        size_t n = 2 + rng() % 7;
        size_t k = 1 + rng() % 2;
        Matrix G = random_matrix(f, k, n, rng);
        Matrix Gq = frobenius(f, G);
        for (size_t r = 0; r < k; r++) {
            std::vector<Elem> a(G.row(r), G.row(r) + n);
            std::vector<Elem> b(Gq.row(r), Gq.row(r) + n);
            ASSERT_EQ(weight(a), weight(b));
        }
        if (rank(f, G) < k) {
            continue;
        }
        auto d1 = exhaustive_distance(f, make_code(f, G));
        auto d2 = exhaustive_distance(f, make_code(f, Gq));
        ASSERT_EQ(d1.d, d2.d);
    }
}

TEST(property, dual_involution) {
    std::mt19937_64 rng(0x5eed0004);
    size_t done = 0;
    while (done < CASES) {
        const Field &f = random_field(rng);
        size_t n = 2 + rng() % 11;
        size_t k = 1 + rng() % (n - 1);
        Matrix G = random_matrix(f, k, n, rng);
        if (rank(f, G) < k) {
            continue;
        }
        LinearCode c = make_code(f, G);
        DualKind kind = rng() % 2 ? DualKind::Hermitian : DualKind::Euclidean;
        LinearCode d = dual(f, c, kind);
        ASSERT_EQ(d.k(), n - k);
        LinearCode dd = dual(f, d, kind);
        ASSERT_TRUE(same_row_space(f, dd.G, c.G));
        done++;
    }
}

TEST(property, dual_by_columns_matches_exhaustive) {
    std::mt19937_64 rng(0x5eed0005);
    size_t done = 0;
    while (done < CASES) {
        const Field &f = random_field(rng, 16);
        size_t k = 1 + rng() % 3;
        size_t n = k + 1 + rng() % (12 - k);
        double dual_words = std::pow((double)f.size(), (double)(n - k));
        if (dual_words > double(1 << 18)) {
            continue;
        }
        Matrix G = random_matrix(f, k, n, rng);
        if (rank(f, G) < k) {
            continue;
        }
        LinearCode c = make_code(f, G);
        DistanceResult cols = dual_distance_by_columns(f, c, k + 1);
        DistanceResult full = exhaustive_distance(f, dual(f, c, DualKind::Euclidean));
        ASSERT_TRUE(cols.exact);
        ASSERT_EQ(cols.d, full.d) << "q2=" << f.size() << " n=" << n << " k=" << k;
        done++;
    }
}
