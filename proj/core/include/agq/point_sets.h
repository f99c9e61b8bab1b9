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

#ifndef _AGQ_POINT_SETS_H
#define _AGQ_POINT_SETS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agq/field.h"

namespace agq {

enum class PointFamily { RootsOfUnity, CosetUnion, AffineGrid, Explicit };

const char *point_family_name(PointFamily family);

/// Which coset leaders a coset union may use.
enum class LeaderPolicy {
    /// Leaders theta^(e(q+1)/n1) generating cosets of U_n inside V_n.
    VnCosets,
    /// Leaders taken from GF(q)*, one per new coset of U_n.
    SubfieldLeaders,
};

/// Distinct evaluation points. Nonzero points are sorted by discrete log and
/// zero, when present, comes last.
struct EvaluationSet {
    PointFamily family = PointFamily::Explicit;
    std::vector<Elem> points;
    uint32_t n = 0;
    uint32_t t = 0;
    std::vector<int64_t> leader_exponents;
    Elem anchor = ZERO;

    size_t size() const { return points.size(); }
};

struct TwistVector {
    std::vector<Elem> v;
    Elem unit_scalar = ONE;
};

EvaluationSet roots_of_unity_set(const Field &f, uint32_t n);
EvaluationSet coset_union_set(
    const Field &f,
    uint32_t n,
    uint32_t t,
    const std::vector<int64_t> &leader_exponents = {},
    LeaderPolicy policy = LeaderPolicy::VnCosets);
EvaluationSet affine_grid_set(const Field &f, uint32_t t, std::optional<Elem> anchor = std::nullopt);
EvaluationSet explicit_set(const Field &f, std::vector<Elem> points);

/// h'(a_i) as the product of (a_i - a_j) over j != i.
std::vector<Elem> local_derivatives(const Field &f, const std::vector<Elem> &points);

/// (anchor^q - anchor)^(t-1) for affine grids, 1 otherwise.
Elem default_unit_scalar(const Field &f, const EvaluationSet &set);

/// v_i = norm_preimage(unit_scalar / h'(a_i)). Throws NotNormValue.
TwistVector twist_vector(const Field &f, const std::vector<Elem> &points, Elem unit_scalar = ONE);
TwistVector twist_vector(const Field &f, const EvaluationSet &set, std::optional<Elem> unit_scalar = std::nullopt);

void sort_points(std::vector<Elem> &points);

}  // namespace agq

#endif
