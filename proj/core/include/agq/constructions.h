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

#ifndef _AGQ_CONSTRUCTIONS_H
#define _AGQ_CONSTRUCTIONS_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agq/codes.h"
#include "agq/curves.h"
#include "agq/field.h"
#include "agq/point_sets.h"

namespace agq {

enum class ConstructionId { C1, C2, C3, C4, C5, C6, C7, C8, C9, C10 };

/// "C1" .. "C10", with the curve name appended for C5..C10.
const char *construction_name(ConstructionId id);
std::optional<ConstructionId> parse_construction(std::string_view text);

/// The three point sets a Hermitian-curve code may sit over.
enum class HermitianCase { RootsOfUnity, CosetUnion, AffineGrid };

enum class EmbedPolicy { None, Once, Iterate, Deep };

const char *embed_policy_name(EmbedPolicy policy);

struct ConstructionRequest {
    ConstructionId id = ConstructionId::C1;
    uint32_t p = 0;
    uint32_t m = 1;
    /// Length for C1, C6 and C7 case i; subgroup order for C2, C3, C7 case ii.
    uint32_t n = 0;
    /// Cosets (C2, C3, C7 ii), grid rows (C4, C7 iii), curve exponent (C9,
    /// C10) or the deep-dimension divisor of q+1.
    uint32_t t = 0;
    /// Pole bound: L((k-1)P). Zero picks the largest k of the stated range
    /// for C1..C4 and is an error for curves.
    uint32_t k = 0;
    std::vector<int64_t> leaders;
    std::optional<Elem> anchor;
    std::optional<Elem> c;
    std::optional<Elem> unit_scalar;
    HermitianCase hermitian_case = HermitianCase::RootsOfUnity;
    EmbedPolicy embed = EmbedPolicy::None;
};

/// A code whose Hermitian Gram matrix is known to vanish.
struct CertifiedCode {
    LinearCode code;
    GramCertificate gram;
    std::optional<MdsResult> mds;
    CurveSpec curve;
    /// Rational points and twist per coordinate, before any appended column.
    std::vector<CurvePoint> points;
    std::vector<Elem> twist;
    bool extended = false;
    Elem extension_value = ZERO;
    uint32_t pole_bound = 0;
    /// deg G - 2g + 2, the usual lower bound on the dual distance.
    int64_t designed_dual_distance = 0;
    std::vector<std::string> trace;

    size_t n() const { return code.n(); }
    size_t k() const { return code.k(); }
    std::string label() const;
};

/// Largest k of the construction's stated range, floor((N+q+2g-1)/(q+1)).
uint32_t stated_k_max(uint32_t q, size_t length, uint32_t genus);

/// Builds the unembedded code. Throws GramNonzero when the certificate fails.
CertifiedCode construct(const Field &f, const ConstructionRequest &req, const Budget &budget = Budget::from_env());

/// Adds the row (v_l a_l^k), with one extra column when its self product is
/// nonzero. Accepted only if the new Gram matrix vanishes.
CertifiedCode embed_once(const Field &f, const CertifiedCode &code, const Budget &budget = Budget::from_env());

struct EmbedChain {
    std::vector<CertifiedCode> codes;
    std::string stop_reason;
};

/// Repeats embed_once until it is rejected. The input is not part of the chain.
EmbedChain embed_iterate(
    const Field &f, const CertifiedCode &code, const Budget &budget = Budget::from_env(), size_t max_steps = 64);

/// The [t(q-1)+1, floor(n/2t)] code over the roots of x^n - x, embedded once
/// when `embed` is set.
CertifiedCode deep_dimension(const Field &f, uint32_t t, bool embed, const Budget &budget = Budget::from_env());

/// Base code plus the embeddings asked for by the policy, in order.
EmbedChain run_request(const Field &f, const ConstructionRequest &req, const Budget &budget = Budget::from_env());

}  // namespace agq

#endif
