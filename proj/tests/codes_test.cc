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

#include "agq/codes.h"

#include <gtest/gtest.h>

#include <random>

#include "agq/error.h"
#include "agq/point_sets.h"
#include "oracles.h"

using namespace agq;

namespace {

Matrix random_matrix(const Field &f, size_t rows, size_t cols, std::mt19937_64 &rng) {
    Matrix m(rows, cols);
    std::uniform_int_distribution<uint32_t> pick(0, f.size() - 1);
    for (auto &v : m.data) {
        v = f.from_index(pick(rng));
    }
    return m;
}

/// GRS code with points a_l and column multipliers v_l.
LinearCode grs(const Field &f, const std::vector<Elem> &a, const std::vector<Elem> &v, size_t k) {
    Matrix G(k, a.size());
    for (size_t r = 0; r < k; r++) {
        for (size_t l = 0; l < a.size(); l++) {
            G.at(r, l) = f.mul(v[l], f.pow(a[l], (int64_t)r));
        }
    }
    return make_code(f, G);
}

}  // namespace

TEST(codes, matrix_helpers) {
    Field f = Field::build(5, 1);
    Matrix I = identity_matrix(3);
    ASSERT_EQ(I.at(1, 1), ONE);
    ASSERT_EQ(I.at(0, 1), ZERO);
    Matrix H = hstack(I, I);
    ASSERT_EQ(H.cols, 6u);
    ASSERT_EQ(column_subset(H, {3, 4, 5}), I);
    Matrix F = frobenius(f, Matrix(1, 1, f.theta()));
    ASSERT_EQ(F.at(0, 0), f.frobenius(f.theta()));
}

TEST(codes, rank_matches_oracle) {
    std::mt19937_64 rng(7);
    Field f = Field::build(3, 1);
    oracle::PolyField F(f);
    for (int trial = 0; trial < 200; trial++) {
        size_t rows = 1 + rng() % 5;
        size_t cols = 1 + rng() % 6;
        Matrix m = random_matrix(f, rows, cols, rng);
        if (trial % 3 == 0 && rows > 1) {
            std::copy(m.row(0), m.row(0) + cols, m.row(rows - 1));
        }
        ASSERT_EQ(rank(f, m), oracle::rank(F, oracle::to_rows(f, m)));
    }
}

TEST(codes, rref_shape) {
    std::mt19937_64 rng(3);
    Field f = Field::build(2, 2);
    Matrix m = random_matrix(f, 3, 7, rng);
    Matrix r = m;
    auto piv = rref(f, r);
    for (size_t i = 0; i < piv.size(); i++) {
        ASSERT_EQ(r.at(i, piv[i]), ONE);
        for (size_t j = 0; j < r.rows; j++) {
            if (j != i) {
                ASSERT_EQ(r.at(j, piv[i]), ZERO);
            }
        }
    }
    ASSERT_TRUE(same_row_space(f, m, r));
}

TEST(codes, make_code_rank_defect) {
    Field f = Field::build(5, 1);
    Matrix G(2, 3, ONE);
    try {
        make_code(f, G);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind, ErrorKind::RankDefect);
    }
}

TEST(codes, gram_is_frobenius_symmetric) {
    std::mt19937_64 rng(11);
    Field f = Field::build(7, 1);
    for (int trial = 0; trial < 20; trial++) {
        LinearCode c{random_matrix(f, 3, 8, rng)};
        GramCertificate g = hermitian_gram(f, c);
        for (size_t i = 0; i < 3; i++) {
            for (size_t j = 0; j < 3; j++) {
                ASSERT_EQ(g.M.at(j, i), f.frobenius(g.M.at(i, j)));
                ASSERT_EQ(g.M.at(i, j), hermitian_product(f, c.G.row(i), c.G.row(j), 8));
            }
        }
    }
}

TEST(codes, gram_certificate_reports_first_entry) {
    Field f = Field::build(3, 1);
    LinearCode c = make_code(f, identity_matrix(2));
    GramCertificate g = hermitian_gram(f, c);
    ASSERT_FALSE(g.all_zero);
    ASSERT_EQ(g.bad_row, 0u);
    ASSERT_EQ(g.bad_col, 0u);
    ASSERT_EQ(g.bad_value, ONE);
    ASSERT_EQ(g.describe(f), "entry (0,0) = 1");
    ASSERT_EQ(g.digest_hex().size(), 16u);
}

TEST(codes, gram_of_twisted_grs_vanishes) {
    Field f = Field::build(13, 1);
    EvaluationSet set = roots_of_unity_set(f, 25);
    TwistVector tw = twist_vector(f, set);
    LinearCode c = grs(f, set.points, tw.v, 2);
    ASSERT_TRUE(hermitian_gram(f, c).all_zero);
}

TEST(codes, duals) {
    std::mt19937_64 rng(5);
    Field f = Field::build(2, 2);
    oracle::PolyField F(f);
    for (int trial = 0; trial < 50; trial++) {
        size_t k = 1 + rng() % 4;
        size_t n = k + 1 + rng() % 5;
        Matrix G = random_matrix(f, k, n, rng);
        if (rank(f, G) != k) {
            continue;
        }
        LinearCode c = make_code(f, G);
        LinearCode e = dual(f, c, DualKind::Euclidean);
        LinearCode h = dual(f, c, DualKind::Hermitian);
        ASSERT_EQ(e.k(), n - k);
        ASSERT_EQ(h.k(), n - k);
        auto rg = oracle::to_rows(f, c.G);
        auto re = oracle::to_rows(f, e.G);
        for (auto &a : rg) {
            for (auto &b : re) {
                uint32_t s = 0;
                for (size_t l = 0; l < n; l++) {
                    s = F.add(s, F.mul(a[l], b[l]));
                }
                ASSERT_EQ(s, 0u);
            }
        }
        for (size_t i = 0; i < c.k(); i++) {
            for (size_t j = 0; j < h.k(); j++) {
                ASSERT_EQ(hermitian_product(f, c.G.row(i), h.G.row(j), n), ZERO);
            }
        }
        ASSERT_TRUE(same_row_space(f, dual(f, e, DualKind::Euclidean).G, c.G));
    }
}

TEST(codes, exhaustive_distance_matches_oracle) {
    std::mt19937_64 rng(9);
    Field f = Field::build(3, 1);
    oracle::PolyField F(f);
    for (int trial = 0; trial < 60; trial++) {
        size_t k = 1 + rng() % 3;
        size_t n = k + rng() % 6;
        Matrix G = random_matrix(f, k, n, rng);
        if (rank(f, G) != k) {
            continue;
        }
        LinearCode c = make_code(f, G);
        DistanceResult r = exhaustive_distance(f, c);
        ASSERT_TRUE(r.exact);
        ASSERT_EQ(r.d, oracle::min_weight(F, oracle::to_rows(f, G)));
        size_t w = 0;
        for (Elem x : r.codeword) {
            w += x != ZERO;
        }
        ASSERT_EQ(w, r.d);
        ASSERT_EQ(r.columns.size(), r.d);
    }
}

TEST(codes, dual_distance_matches_oracle) {
    std::mt19937_64 rng(13);
    Field f = Field::build(2, 1);
    oracle::PolyField F(f);
    for (int trial = 0; trial < 80; trial++) {
        size_t k = 1 + rng() % 3;
        size_t n = k + 1 + rng() % 5;
        Matrix G = random_matrix(f, k, n, rng);
        if (rank(f, G) != k) {
            continue;
        }
        LinearCode c = make_code(f, G);
        DistanceResult r = dual_distance_by_columns(f, c, k + 1);
        ASSERT_TRUE(r.exact);
        ASSERT_EQ(r.d, oracle::dual_min_weight(F, oracle::to_rows(f, G), n));
        ASSERT_LT(rank(f, column_subset(G, r.columns)), r.columns.size());
    }
}

TEST(codes, dual_distance_bounds) {
    Field f = Field::build(5, 1);
    LinearCode c = make_code(f, identity_matrix(3));
    DistanceResult r = dual_distance_by_columns(f, c, 3);
    ASSERT_TRUE(r.degenerate);
    ASSERT_EQ(r.d, 4u);
    Budget tiny;
    tiny.max_ops = 10;
    EvaluationSet set = roots_of_unity_set(f, 25);
    LinearCode big = grs(f, set.points, std::vector<Elem>(25, ONE), 5);
    ASSERT_THROW(dual_distance_by_columns(f, big, 6, tiny), Error);
    DistanceResult partial = dual_distance_by_columns(f, big, 6, tiny, true);
    ASSERT_FALSE(partial.exact);
    ASSERT_GE(partial.d, 1u);
}

TEST(codes, exhaustive_cap) {
    Field f = Field::build(13, 1);
    EvaluationSet set = roots_of_unity_set(f, 25);
    LinearCode c = grs(f, set.points, std::vector<Elem>(25, ONE), 7);
    try {
        exhaustive_distance(f, c);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind, ErrorKind::CapExceeded);
    }
}

TEST(codes, mds_methods_agree_on_grs) {
    std::mt19937_64 rng(17);
    Field f = Field::build(3, 2);
    for (int trial = 0; trial < 30; trial++) {
        std::vector<Elem> pts = f.elements();
        std::shuffle(pts.begin(), pts.end(), rng);
        size_t n = 4 + rng() % 10;
        size_t k = 1 + rng() % (n - 1);
        pts.resize(n);
        std::vector<Elem> v(n);
        for (auto &x : v) {
            x = (Elem)(rng() % f.order());
        }
        LinearCode c = grs(f, pts, v, k);
        MdsResult minors = is_mds_by_minors(f, c);
        ASSERT_TRUE(minors.mds);
        ASSERT_EQ(minors.checks, binomial(n, k));
        auto cauchy = mds_by_cauchy_form(f, c);
        ASSERT_TRUE(cauchy.has_value());
        ASSERT_TRUE(cauchy->mds);
    }
}

TEST(codes, mds_detects_singular_minor) {
    Field f = Field::build(5, 1);
    Matrix G(2, 4);
    Elem row0[] = {ONE, ONE, ONE, ONE};
    Elem row1[] = {ZERO, ONE, ONE, f.theta()};
    std::copy(row0, row0 + 4, G.row(0));
    std::copy(row1, row1 + 4, G.row(1));
    LinearCode c = make_code(f, G);
    MdsResult r = is_mds(f, c);
    ASSERT_FALSE(r.mds);
    ASSERT_EQ(r.witness, (std::vector<size_t>{1, 2}));
    auto cauchy = mds_by_cauchy_form(f, c);
    ASSERT_TRUE(!cauchy || !cauchy->mds);
}

TEST(codes, mds_large_uses_cauchy) {
    Field f = Field::build(13, 1);
    EvaluationSet set = roots_of_unity_set(f, 169);
    LinearCode c = grs(f, set.points, std::vector<Elem>(169, ONE), 40);
    MdsResult r = is_mds(f, c);
    ASSERT_TRUE(r.mds);
    ASSERT_EQ(r.method, "cauchy");
}

TEST(codes, binomial) {
    ASSERT_EQ(binomial(25, 7), 480700u);
    ASSERT_EQ(binomial(5, 0), 1u);
    ASSERT_EQ(binomial(3, 5), 0u);
    ASSERT_EQ(binomial(1000, 500), UINT64_MAX);
}
