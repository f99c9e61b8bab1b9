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

#include "agq/error.h"

using namespace agq;

const char *agq::distance_status_name(DistanceStatus status) {
    switch (status) {
        case DistanceStatus::Exact:
            return "exact";
        case DistanceStatus::LowerBound:
            return "lower-bound";
        case DistanceStatus::Unknown:
            return "unknown";
    }
    return "?";
}

std::optional<bool> QuantumParams::mds() const {
    if (status == DistanceStatus::Exact) {
        return singleton_defect(*this) == 0;
    }
    if (status == DistanceStatus::LowerBound && (int64_t)n - k - 2 * (int64_t)d + 2 <= 0) {
        return true;
    }
    return std::nullopt;
}

std::optional<int64_t> QuantumParams::defect() const {
    if (status != DistanceStatus::Exact) {
        return std::nullopt;
    }
    return singleton_defect(*this);
}

std::string QuantumParams::str() const {
    std::string ds;
    switch (status) {
        case DistanceStatus::Exact:
            ds = std::to_string(d);
            break;
        case DistanceStatus::LowerBound:
            ds = "≥" + std::to_string(d);
            break;
        case DistanceStatus::Unknown:
            ds = "?";
            break;
    }
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + ds + "]]_" + std::to_string(q);
}

QuantumParams agq::stabilizer_params(
    const Field &f,
    const LinearCode &code,
    const std::optional<MdsResult> &mds,
    int64_t designed_d,
    const Budget &budget) {
    if (!hermitian_gram(f, code).all_zero) {
        throw Error(ErrorKind::InvalidArgument, "the code is not Hermitian self-orthogonal");
    }
    QuantumParams out;
    out.q = f.q();
    out.n = code.n();
    out.k = (int64_t)code.n() - 2 * (int64_t)code.k();
    out.designed_d = designed_d;
    if (code.k() == 0) {
        out.d = 1;
        out.status = DistanceStatus::Exact;
        out.d_method = "trivial";
        return out;
    }
    if (mds && mds->mds) {
        out.d = code.k() + 1;
        out.status = DistanceStatus::Exact;
        out.d_method = "mds-certificate";
        return out;
    }
    try {
        DistanceResult r = dual_distance_by_columns(f, code, code.k() + 1, budget, true);
        out.d = r.d;
        out.status = r.exact ? DistanceStatus::Exact : DistanceStatus::LowerBound;
        out.d_method = r.method;
        out.witness = r.columns;
    } catch (const Error &e) {
        if (e.kind != ErrorKind::CapExceeded) {
            throw;
        }
        out.status = DistanceStatus::Unknown;
        out.d_method = "cap-exceeded";
    }
    return out;
}

QuantumParams agq::stabilizer_params(const Field &f, const CertifiedCode &code, const Budget &budget) {
    return stabilizer_params(f, code.code, code.mds, code.designed_dual_distance, budget);
}

int64_t agq::singleton_defect(const QuantumParams &params) {
    if (params.status != DistanceStatus::Exact) {
        throw Error(ErrorKind::DistanceNotExact, "distance of " + params.str() + " is not exact");
    }
    return (int64_t)params.n - params.k - 2 * (int64_t)params.d + 2;
}
