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

#ifndef _AGQ_QUANTUM_H
#define _AGQ_QUANTUM_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agq/codes.h"
#include "agq/constructions.h"
#include "agq/field.h"

namespace agq {

enum class DistanceStatus { Exact, LowerBound, Unknown };

const char *distance_status_name(DistanceStatus status);

/// Parameters [[n, n-2k, d]]_q of the stabilizer code from a Hermitian
/// self-orthogonal [n, k]_{q^2} code.
struct QuantumParams {
    uint32_t q = 0;
    size_t n = 0;
    int64_t k = 0;
    size_t d = 0;
    DistanceStatus status = DistanceStatus::Unknown;
    /// "mds-certificate", "dual-by-columns", "dual-by-columns-capped", "trivial"
    /// or "cap-exceeded".
    std::string d_method;
    /// Dependent column set realizing d, when one was found.
    std::vector<size_t> witness;
    /// Stored for reference only, never reported as d.
    int64_t designed_d = 0;

    std::optional<bool> mds() const;
    std::optional<int64_t> defect() const;
    /// "[[n,k,d]]_q" with "≥d" for bounds and "?" when unknown.
    std::string str() const;
};

/// Throws InvalidArgument unless the code's Gram matrix is zero.
QuantumParams stabilizer_params(
    const Field &f,
    const LinearCode &code,
    const std::optional<MdsResult> &mds,
    int64_t designed_d,
    const Budget &budget = Budget::from_env());

QuantumParams stabilizer_params(const Field &f, const CertifiedCode &code, const Budget &budget = Budget::from_env());

/// n - k - 2d + 2. Throws DistanceNotExact for bounds.
int64_t singleton_defect(const QuantumParams &params);

}  // namespace agq

#endif
