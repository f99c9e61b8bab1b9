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

#include "agq/curves.h"

#include <algorithm>
#include <numeric>

#include "agq/error.h"
#include "agq/point_sets.h"

using namespace agq;

const char *agq::curve_family_name(CurveFamily family) {
    switch (family) {
        case CurveFamily::ProjectiveLine:
            return "ProjectiveLine";
        case CurveFamily::Elliptic:
            return "Elliptic";
        case CurveFamily::HyperElliptic:
            return "HyperElliptic";
        case CurveFamily::Hermitian:
            return "Hermitian";
        case CurveFamily::SemiHermitian:
            return "SemiHermitian";
        case CurveFamily::ArtinSchreier:
            return "ArtinSchreier";
    }
    return "ProjectiveLine";
}

CurveSpec agq::curve(const Field &f, CurveFamily family, uint32_t t, std::optional<Elem> c) {
    uint32_t q = f.q();
    CurveSpec s;
    s.family = family;
    switch (family) {
        case CurveFamily::ProjectiveLine:
            break;
        case CurveFamily::Elliptic: {
            if (f.p() != 2) {
                throw Error(ErrorKind::BadCharacteristic, "elliptic curve y^2+y=x^3+c needs characteristic 2");
            }
            bool zero_c = (2 * f.m()) % 4 == 2;
            if (c.has_value()) {
                bool ok = zero_c ? *c == ZERO : f.absolute_trace(*c) == ONE;
                if (!ok) {
                    throw Error(ErrorKind::BadTraceConstant, "constant " + f.format(*c) + " violates the trace rule");
                }
                s.c = *c;
            } else if (zero_c) {
                s.c = ZERO;
            } else {
                s.c = ZERO;
                for (Elem e = 0; e < f.order(); e++) {
                    if (f.absolute_trace(e) == ONE) {
                        s.c = e;
                        break;
                    }
                }
            }
            s.genus = 1;
            s.pole_x = 2;
            s.pole_y = 3;
            s.y_degree = 2;
            break;
        }
        case CurveFamily::HyperElliptic:
            if (f.p() != 2) {
                throw Error(ErrorKind::BadCharacteristic, "y^2+y=x^(q+1) needs characteristic 2");
            }
            s.genus = q / 2;
            s.pole_x = 2;
            s.pole_y = q + 1;
            s.y_degree = 2;
            break;
        case CurveFamily::Hermitian:
            s.genus = q * (q - 1) / 2;
            s.pole_x = q;
            s.pole_y = q + 1;
            s.y_degree = q;
            break;
        case CurveFamily::SemiHermitian:
            if (q % 2 == 0) {
                throw Error(ErrorKind::BadCharacteristic, "y^q+y=x^((q+1)/2) needs odd q");
            }
            s.genus = (q - 1) * (q - 1) / 4;
            s.pole_x = q;
            s.pole_y = (q + 1) / 2;
            s.y_degree = q;
            break;
        case CurveFamily::ArtinSchreier:
            if (t < 1 || t % f.p() == 0) {
                throw Error(ErrorKind::GcdConditionViolated, "t must be positive and prime to p");
            }
            if (q % 2 == 1) {
                uint32_t g = std::gcd(t, q + 1);
                if (((q + 1) / 2) % g != 0) {
                    throw Error(ErrorKind::GcdConditionViolated, "gcd(t, q+1) does not divide (q+1)/2");
                }
            } else if (t % 2 == 0) {
                throw Error(ErrorKind::GcdConditionViolated, "even q needs odd t");
            }
            s.t = t;
            s.genus = (q - 1) * (t - 1) / 2;
            s.pole_x = q;
            s.pole_y = t;
            s.y_degree = q;
            break;
    }
    return s;
}

namespace {

AdditiveMap fiber_map(CurveFamily family) {
    switch (family) {
        case CurveFamily::Elliptic:
        case CurveFamily::HyperElliptic:
            return AdditiveMap::SquarePlusId;
        case CurveFamily::Hermitian:
        case CurveFamily::SemiHermitian:
            return AdditiveMap::FrobPlusId;
        default:
            return AdditiveMap::FrobMinusId;
    }
}

Elem fiber_rhs(const Field &f, const CurveSpec &s, Elem x) {
    uint32_t q = f.q();
    switch (s.family) {
        case CurveFamily::Elliptic:
            return f.add(f.pow(x, 3), s.c);
        case CurveFamily::HyperElliptic:
        case CurveFamily::Hermitian:
            return f.pow(x, (int64_t)q + 1);
        case CurveFamily::SemiHermitian:
            return f.pow(x, ((int64_t)q + 1) / 2);
        case CurveFamily::ArtinSchreier:
            return f.pow(x, s.t);
        default:
            return ZERO;
    }
}

}  // namespace

std::vector<Elem> agq::x_support(const Field &f, const CurveSpec &s) {
    std::vector<Elem> out;
    for (Elem x : f.elements()) {
        bool keep = false;
        switch (s.family) {
            case CurveFamily::ProjectiveLine:
                throw Error(ErrorKind::UnsupportedFamily, "the line uses the point-set module");
            case CurveFamily::Elliptic:
                keep = f.absolute_trace(fiber_rhs(f, s, x)) == ZERO;
                break;
            case CurveFamily::HyperElliptic:
            case CurveFamily::Hermitian:
                keep = true;
                break;
            case CurveFamily::SemiHermitian:
                keep = x == ZERO || x % 2 == 0;
                break;
            case CurveFamily::ArtinSchreier:
                keep = f.trace(fiber_rhs(f, s, x)) == ZERO;
                break;
        }
        if (keep) {
            out.push_back(x);
        }
    }
    sort_points(out);
    return out;
}

std::vector<CurvePoint> agq::fiber(const Field &f, const CurveSpec &s, Elem x0) {
    if (s.family == CurveFamily::ProjectiveLine) {
        return {CurvePoint{x0, ZERO}};
    }
    auto ys = f.solve_additive(fiber_map(s.family), fiber_rhs(f, s, x0));
    if (ys.empty()) {
        throw Error(ErrorKind::EmptyFiber, "no rational point above x = " + f.format(x0));
    }
    std::vector<CurvePoint> out;
    for (Elem y : ys) {
        out.push_back(CurvePoint{x0, y});
    }
    return out;
}

MonomialBasis agq::rr_basis(const CurveSpec &s, uint32_t k) {
    MonomialBasis out;
    if (k == 0) {
        return out;
    }
    uint32_t bound = k - 1;
    for (uint32_t j = 0; j < s.y_degree; j++) {
        uint32_t py = s.pole_y * j;
        if (py > bound) {
            break;
        }
        for (uint32_t i = 0; py + s.pole_x * i <= bound; i++) {
            out.push_back(Monomial{i, j, py + s.pole_x * i});
        }
    }
    std::sort(out.begin(), out.end(), [](const Monomial &a, const Monomial &b) {
        return a.pole != b.pole ? a.pole < b.pole : a.j < b.j;
    });
    return out;
}

Elem agq::evaluate(const Field &f, const Monomial &mono, const CurvePoint &pt) {
    Elem v = f.pow(pt.x, mono.i);
    if (mono.j) {
        v = f.mul(v, f.pow(pt.y, mono.j));
    }
    return v;
}

std::vector<uint32_t> agq::semigroup_gaps(uint32_t a, uint32_t b) {
    if (std::gcd(a, b) != 1) {
        throw Error(ErrorKind::InvalidArgument, "semigroup generators must be coprime");
    }
    if (a == 1 || b == 1) {
        return {};
    }
    uint32_t frobenius = a * b - a - b;
    std::vector<bool> in(frobenius + 1, false);
    in[0] = true;
    for (uint32_t v = 1; v <= frobenius; v++) {
        in[v] = (v >= a && in[v - a]) || (v >= b && in[v - b]);
    }
    std::vector<uint32_t> gaps;
    for (uint32_t v = 1; v <= frobenius; v++) {
        if (!in[v]) {
            gaps.push_back(v);
        }
    }
    return gaps;
}
