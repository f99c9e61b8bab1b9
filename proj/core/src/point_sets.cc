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

#include "agq/point_sets.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "agq/error.h"

using namespace agq;

const char *agq::point_family_name(PointFamily family) {
    switch (family) {
        case PointFamily::RootsOfUnity:
            return "RootsOfUnity";
        case PointFamily::CosetUnion:
            return "CosetUnion";
        case PointFamily::AffineGrid:
            return "AffineGrid";
        case PointFamily::Explicit:
            return "Explicit";
    }
    return "Explicit";
}

void agq::sort_points(std::vector<Elem> &points) {
    // ZERO is the largest code, so it lands last.
    std::sort(points.begin(), points.end());
}

EvaluationSet agq::roots_of_unity_set(const Field &f, uint32_t n) {
    if (n < 2 || f.order() % (n - 1) != 0) {
        throw Error(
            ErrorKind::DivisibilityViolated,
            "n-1 = " + std::to_string((int64_t)n - 1) + " does not divide q^2-1 = " + std::to_string(f.order()));
    }
    EvaluationSet set;
    set.family = PointFamily::RootsOfUnity;
    set.n = n;
    uint32_t step = f.order() / (n - 1);
    for (uint32_t j = 0; j < n - 1; j++) {
        set.points.push_back(j * step);
    }
    set.points.push_back(ZERO);
    return set;
}

EvaluationSet agq::coset_union_set(
    const Field &f, uint32_t n, uint32_t t, const std::vector<int64_t> &leader_exponents, LeaderPolicy policy) {
    if (n == 0 || f.order() % n != 0) {
        throw Error(
            ErrorKind::DivisibilityViolated,
            "n = " + std::to_string(n) + " does not divide q^2-1 = " + std::to_string(f.order()));
    }
    uint32_t q = f.q();
    uint32_t n1 = std::gcd(n, q + 1);
    uint32_t n2 = n / n1;
    uint32_t v_step = (q + 1) / n1;
    uint32_t coset_mod = f.order() / n;

    if (policy == LeaderPolicy::VnCosets) {
        int64_t max_t = (int64_t)((q - 1) / n2) - 1;
        if ((int64_t)t > max_t) {
            throw Error(
                ErrorKind::TooManyCosets,
                "t = " + std::to_string(t) + " exceeds (q-1)/n2 - 1 = " + std::to_string(max_t));
        }
    }

    std::vector<int64_t> leaders;
    std::set<uint32_t> seen = {0};
    auto coset_of = [&](int64_t e) {
        int64_t r = e % (int64_t)coset_mod;
        return (uint32_t)(r < 0 ? r + coset_mod : r);
    };
    if (!leader_exponents.empty()) {
        if (leader_exponents.size() != t) {
            throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(t) + " leader exponents");
        }
        for (int64_t e : leader_exponents) {
            bool ok = policy == LeaderPolicy::VnCosets ? e % v_step == 0 : e % (q + 1) == 0;
            if (!ok) {
                throw Error(ErrorKind::LeaderNotInV, "leader t^" + std::to_string(e) + " is not an admissible leader");
            }
            if (!seen.insert(coset_of(e)).second) {
                throw Error(ErrorKind::InvalidArgument, "leader t^" + std::to_string(e) + " repeats a coset");
            }
            leaders.push_back(e);
        }
    } else {
        uint32_t step = policy == LeaderPolicy::VnCosets ? v_step : q + 1;
        for (uint64_t e = step; e < f.order() && leaders.size() < t; e += step) {
            if (seen.insert(coset_of((int64_t)e)).second) {
                leaders.push_back((int64_t)e);
            }
        }
        if (leaders.size() < t) {
            throw Error(
                policy == LeaderPolicy::VnCosets ? ErrorKind::TooManyCosets : ErrorKind::CosetSearchExhausted,
                "found only " + std::to_string(leaders.size()) + " admissible cosets, need " + std::to_string(t));
        }
    }

    EvaluationSet set;
    set.family = PointFamily::CosetUnion;
    set.n = n;
    set.t = t;
    set.leader_exponents = leaders;
    std::vector<int64_t> shifts = {0};
    shifts.insert(shifts.end(), leaders.begin(), leaders.end());
    for (int64_t s : shifts) {
        for (uint32_t j = 0; j < n; j++) {
            set.points.push_back(f.theta_pow(s + (int64_t)j * coset_mod));
        }
    }
    set.points.push_back(ZERO);
    sort_points(set.points);
    return set;
}

EvaluationSet agq::affine_grid_set(const Field &f, uint32_t t, std::optional<Elem> anchor) {
    uint32_t q = f.q();
    if (t < 1 || t > q) {
        throw Error(ErrorKind::InvalidArgument, "grid rows t must satisfy 1 <= t <= q");
    }
    Elem a = anchor.value_or(f.theta());
    if (f.in_base_field(a)) {
        throw Error(ErrorKind::AnchorInSubfield, "anchor " + f.format(a) + " lies in GF(q)");
    }
    std::vector<Elem> u = {ZERO};
    for (uint32_t j = 0; j + 1 < q; j++) {
        u.push_back(j * (q + 1));
    }
    EvaluationSet set;
    set.family = PointFamily::AffineGrid;
    set.t = t;
    set.anchor = a;
    for (uint32_t i = 0; i < t; i++) {
        for (uint32_t j = 0; j < q; j++) {
            set.points.push_back(f.add(f.mul(u[i], a), u[j]));
        }
    }
    sort_points(set.points);
    return set;
}

EvaluationSet agq::explicit_set(const Field &f, std::vector<Elem> points) {
    (void)f;
    sort_points(points);
    if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
        throw Error(ErrorKind::InvalidArgument, "evaluation points must be distinct");
    }
    EvaluationSet set;
    set.family = PointFamily::Explicit;
    set.points = std::move(points);
    return set;
}

std::vector<Elem> agq::local_derivatives(const Field &f, const std::vector<Elem> &points) {
    std::vector<Elem> out(points.size(), ONE);
    for (size_t i = 0; i < points.size(); i++) {
        for (size_t j = 0; j < points.size(); j++) {
            if (i != j) {
                out[i] = f.mul(out[i], f.sub(points[i], points[j]));
            }
        }
    }
    return out;
}

Elem agq::default_unit_scalar(const Field &f, const EvaluationSet &set) {
    if (set.family == PointFamily::AffineGrid) {
        Elem d = f.sub(f.frobenius(set.anchor), set.anchor);
        return f.pow(d, (int64_t)set.t - 1);
    }
    return ONE;
}

TwistVector agq::twist_vector(const Field &f, const std::vector<Elem> &points, Elem unit_scalar) {
    TwistVector tw;
    tw.unit_scalar = unit_scalar;
    auto h = local_derivatives(f, points);
    for (size_t i = 0; i < points.size(); i++) {
        if (h[i] == ZERO) {
            throw Error(ErrorKind::InvalidArgument, "evaluation points must be distinct");
        }
        Elem c = f.div(unit_scalar, h[i]);
        if (!f.in_base_field(c)) {
            throw Error(
                ErrorKind::NotNormValue,
                "point " + std::to_string(i) + " (" + f.format(points[i]) + "): unit/h' = " + f.format(c) +
                    " is not in GF(q)");
        }
        tw.v.push_back(f.norm_preimage(c));
    }
    return tw;
}

TwistVector agq::twist_vector(const Field &f, const EvaluationSet &set, std::optional<Elem> unit_scalar) {
    return twist_vector(f, set.points, unit_scalar.value_or(default_unit_scalar(f, set)));
}
