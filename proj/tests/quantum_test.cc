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

#include "agq/quantum.h"

#include <gtest/gtest.h>

#include "agq/error.h"

using namespace agq;

namespace {

ConstructionRequest c1(uint32_t p, uint32_t n, uint32_t k) {
    ConstructionRequest req;
    req.id = ConstructionId::C1;
    req.p = p;
    req.n = n;
    req.k = k;
    return req;
}

}  // namespace

TEST(quantum, mds_example_q13) {
    Field f = Field::build(13, 1);
    CertifiedCode c = deep_dimension(f, 2, true);
    QuantumParams qp = stabilizer_params(f, c);
    ASSERT_EQ(qp.str(), "[[25,11,8]]_13");
    ASSERT_EQ(qp.d_method, "mds-certificate");
    ASSERT_EQ(singleton_defect(qp), 0);
    ASSERT_EQ(qp.mds(), true);
}

TEST(quantum, artin_schreier_by_columns) {
    Field f = Field::build(3, 1);
    ConstructionRequest req;
    req.id = ConstructionId::C9;
    req.p = 3;
    req.t = 2;
    req.k = 4;
    CertifiedCode c = construct(f, req);
    QuantumParams qp = stabilizer_params(f, c);
    ASSERT_EQ(qp.str(), "[[15,9,3]]_3");
    ASSERT_EQ(qp.d_method, "dual-by-columns");
    ASSERT_EQ(qp.witness.size(), 3u);
    ASSERT_EQ(qp.defect(), 2);
    ASSERT_EQ(qp.mds(), false);
    ASSERT_LT(qp.designed_d, (int64_t)qp.d + 1);
}

TEST(quantum, hermitian_q4_defect) {
    Field f = Field::build(2, 2);
    ConstructionRequest req;
    req.id = ConstructionId::C7;
    req.p = 2;
    req.m = 2;
    req.n = 16;
    req.k = 6;
    CertifiedCode c = construct(f, req);
    QuantumParams qp = stabilizer_params(f, c);
    ASSERT_EQ(qp.str(), "[[64,58,3]]_4");
    ASSERT_EQ(singleton_defect(qp), 2);
}

TEST(quantum, trivial_code) {
    Field f = Field::build(3, 1);
    LinearCode empty = make_code(f, Matrix(0, 4));
    QuantumParams qp = stabilizer_params(f, empty, std::nullopt, 0);
    ASSERT_EQ(qp.str(), "[[4,4,1]]_3");
    ASSERT_EQ(qp.d_method, "trivial");
}

TEST(quantum, rejects_non_orthogonal) {
    Field f = Field::build(3, 1);
    LinearCode id = make_code(f, identity_matrix(2));
    try {
        stabilizer_params(f, id, std::nullopt, 0);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind, ErrorKind::InvalidArgument);
    }
}

TEST(quantum, bound_and_unknown_strings) {
    QuantumParams qp;
    qp.q = 8;
    qp.n = 80;
    qp.k = 64;
    qp.d = 5;
    qp.status = DistanceStatus::LowerBound;
    ASSERT_EQ(qp.str(), "[[80,64,≥5]]_8");
    ASSERT_FALSE(qp.defect().has_value());
    ASSERT_FALSE(qp.mds().has_value());
    try {
        singleton_defect(qp);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind, ErrorKind::DistanceNotExact);
    }
    qp.status = DistanceStatus::Unknown;
    ASSERT_EQ(qp.str(), "[[80,64,?]]_8");
}

TEST(quantum, capped_search_reports_bound) {
    Field f = Field::build(2, 2);
    ConstructionRequest req;
    req.id = ConstructionId::C7;
    req.p = 2;
    req.m = 2;
    req.n = 16;
    req.k = 6;
    CertifiedCode c = construct(f, req);
    Budget tiny;
    tiny.max_ops = 1000;
    QuantumParams qp = stabilizer_params(f, c.code, std::nullopt, 0, tiny);
    ASSERT_EQ(qp.status, DistanceStatus::LowerBound);
    ASSERT_EQ(qp.d_method, "dual-by-columns-capped");
    ASSERT_LE(qp.d, 3u);
}

TEST(quantum, embedding_monotonicity) {
    Field f = Field::build(13, 1);
    CertifiedCode base = construct(f, c1(13, 25, 2));
    CertifiedCode up = embed_once(f, base);
    QuantumParams a = stabilizer_params(f, base);
    QuantumParams b = stabilizer_params(f, up);
    ASSERT_EQ(b.n, a.n);
    ASSERT_EQ(b.k, a.k - 2);
    ASSERT_EQ(b.d, a.d + 1);

    Field g = Field::build(11, 1);
    CertifiedCode deep = deep_dimension(g, 3, false);
    CertifiedCode ext = embed_once(g, deep);
    QuantumParams c = stabilizer_params(g, deep);
    QuantumParams d = stabilizer_params(g, ext);
    ASSERT_EQ(d.n, c.n + 1);
    ASSERT_EQ(d.k, c.k - 1);
    ASSERT_EQ(d.d, c.d + 1);
    ASSERT_EQ(d.str(), "[[32,20,7]]_11");
}
