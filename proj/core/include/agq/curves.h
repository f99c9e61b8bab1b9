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

#ifndef _AGQ_CURVES_H
#define _AGQ_CURVES_H

#include <cstdint>
#include <optional>
#include <vector>

#include "agq/field.h"

namespace agq {

enum class CurveFamily { ProjectiveLine, Elliptic, HyperElliptic, Hermitian, SemiHermitian, ArtinSchreier };

const char *curve_family_name(CurveFamily family);

/// A plane model y-part = x-part over GF(q^2) with one place P at infinity.
///
/// x and y have pole orders pole_x and pole_y at P; every function field
/// element regular away from P is a combination of x^i y^j with j < y_degree.
struct CurveSpec {
    CurveFamily family = CurveFamily::ProjectiveLine;
    uint32_t genus = 0;
    uint32_t pole_x = 1;
    uint32_t pole_y = 0;
    uint32_t y_degree = 1;
    uint32_t t = 0;
    Elem c = ZERO;
};

struct CurvePoint {
    Elem x = ZERO;
    Elem y = ZERO;
};

struct Monomial {
    uint32_t i = 0;
    uint32_t j = 0;
    uint32_t pole = 0;
};

using MonomialBasis = std::vector<Monomial>;

/// `t` is the exponent of y^q - y = x^t; `c` is the elliptic constant, chosen
/// when absent as 0 for 2m = 2 mod 4 and as the first theta power of
/// absolute trace 1 otherwise.
CurveSpec curve(const Field &f, CurveFamily family, uint32_t t = 0, std::optional<Elem> c = std::nullopt);

/// x-coordinates with a full fiber of rational points, sorted like point sets.
/// Hermitian and hyperelliptic curves return all of GF(q^2).
std::vector<Elem> x_support(const Field &f, const CurveSpec &curve);

std::vector<CurvePoint> fiber(const Field &f, const CurveSpec &curve, Elem x0);

/// Monomials x^i y^j with pole order at most k-1, by pole order.
MonomialBasis rr_basis(const CurveSpec &curve, uint32_t k);

Elem evaluate(const Field &f, const Monomial &mono, const CurvePoint &pt);

std::vector<uint32_t> semigroup_gaps(uint32_t a, uint32_t b);

}  // namespace agq

#endif
