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

#ifndef _AGQ_CODES_H
#define _AGQ_CODES_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agq/curves.h"
#include "agq/field.h"

namespace agq {

struct Matrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Elem> data;

    Matrix() = default;
    Matrix(size_t rows, size_t cols, Elem fill = ZERO) : rows(rows), cols(cols), data(rows * cols, fill) {
    }
    Elem &at(size_t r, size_t c) { return data[r * cols + c]; }
    Elem at(size_t r, size_t c) const { return data[r * cols + c]; }
    const Elem *row(size_t r) const { return data.data() + r * cols; }
    Elem *row(size_t r) { return data.data() + r * cols; }
    bool operator==(const Matrix &other) const = default;
};

Matrix identity_matrix(size_t k);
Matrix hstack(const Matrix &a, const Matrix &b);
Matrix column_subset(const Matrix &m, const std::vector<size_t> &cols);
/// Entrywise x -> x^q.
Matrix frobenius(const Field &f, const Matrix &m);
/// In-place reduced row echelon form (leading 1s). Returns pivot columns;
/// rows past the rank become zero.
std::vector<size_t> rref(const Field &f, Matrix &m);
size_t rank(const Field &f, Matrix m);
bool same_row_space(const Field &f, const Matrix &a, const Matrix &b);

/// Enumeration limits. Defaults come from AGQ_CAP_OPS (elementary field ops
/// per call, default 1e8) and AGQ_CAP_CODEWORDS (default 2^26).
struct Budget {
    uint64_t max_ops = 100000000;
    uint64_t max_codewords = uint64_t{1} << 26;

    static Budget from_env();
};

struct LinearCode {
    Matrix G;
    std::string provenance = "imported";

    size_t n() const { return G.cols; }
    size_t k() const { return G.rows; }
};

/// Wraps a generator matrix. Throws RankDefect unless the rows are independent.
LinearCode make_code(const Field &f, Matrix G, std::string provenance = "imported");

/// G[r][l] = v_l * f_r(P_l). Throws RankDefect with the achieved rank.
LinearCode evaluation_code(
    const Field &f,
    const MonomialBasis &basis,
    const std::vector<CurvePoint> &points,
    const std::vector<Elem> &twist,
    std::string provenance = "evaluation");

struct GramCertificate {
    Matrix M;
    bool all_zero = true;
    size_t bad_row = 0;
    size_t bad_col = 0;
    Elem bad_value = ZERO;
    uint64_t digest = 0;

    std::string digest_hex() const;
    std::string describe(const Field &f) const;
};

/// M[i][j] = sum_l G[i][l] * G[j][l]^q.
GramCertificate hermitian_gram(const Field &f, const LinearCode &code);
Elem hermitian_product(const Field &f, const Elem *a, const Elem *b, size_t n);

enum class DualKind { Euclidean, Hermitian };

LinearCode dual(const Field &f, const LinearCode &code, DualKind kind);

struct DistanceResult {
    size_t d = 0;
    bool exact = false;
    bool degenerate = false;
    std::string method;
    std::vector<Elem> codeword;
    std::vector<size_t> columns;
    uint64_t ops = 0;
};

/// Minimum weight of the code by enumerating projective messages.
DistanceResult exhaustive_distance(const Field &f, const LinearCode &code, const Budget &budget = Budget::from_env());

/// Minimum distance of the Euclidean dual: the least w <= d_max such that some
/// w columns of G are dependent. Reports a lower bound of d_max + 1 otherwise.
/// With `bound_on_cap` a search stopped by the cap at width w reports the
/// bound d >= w instead of throwing.
DistanceResult dual_distance_by_columns(
    const Field &f,
    const LinearCode &code,
    size_t d_max,
    const Budget &budget = Budget::from_env(),
    bool bound_on_cap = false);

struct MdsResult {
    bool mds = false;
    /// "minors", "cauchy" or "trivial".
    std::string method;
    std::vector<size_t> witness;
    uint64_t checks = 0;
};

/// True iff every k columns of G are independent. Small cases enumerate all
/// k-subsets. Large ones look for a Cauchy form of the systematic matrix.
MdsResult is_mds(const Field &f, const LinearCode &code, const Budget &budget = Budget::from_env());

/// Every k-subset checked, regardless of size.
MdsResult is_mds_by_minors(const Field &f, const LinearCode &code, const Budget &budget = Budget::from_env());

/// Cauchy-form certificate on (I|A). Empty when no Cauchy form was found.
std::optional<MdsResult> mds_by_cauchy_form(const Field &f, const LinearCode &code);

uint64_t binomial(uint64_t n, uint64_t k);

}  // namespace agq

#endif
