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

#include "agq/constructions.h"

#include <algorithm>
#include <cctype>

#include "agq/error.h"

using namespace agq;

namespace {

struct Named {
    ConstructionId id;
    const char *name;
    const char *alias;
};

constexpr Named NAMES[] = {
    {ConstructionId::C1, "C1", "c1"},
    {ConstructionId::C2, "C2", "c2"},
    {ConstructionId::C3, "C3", "c3"},
    {ConstructionId::C4, "C4", "c4"},
    {ConstructionId::C5, "C5-elliptic", "c5"},
    {ConstructionId::C6, "C6-hyperelliptic", "c6"},
    {ConstructionId::C7, "C7-hermitian", "c7"},
    {ConstructionId::C8, "C8-semihermitian", "c8"},
    {ConstructionId::C9, "C9-AS-odd", "c9"},
    {ConstructionId::C10, "C10-AS-even", "c10"},
};

std::string lower(std::string_view s) {
    std::string out(s);
    for (char &c : out) {
        c = (char)std::tolower((unsigned char)c);
    }
    return out;
}

bool genus_zero(ConstructionId id) {
    return id == ConstructionId::C1 || id == ConstructionId::C2 || id == ConstructionId::C3 ||
           id == ConstructionId::C4;
}

EvaluationSet hermitian_case_set(const Field &f, const ConstructionRequest &req) {
    switch (req.hermitian_case) {
        case HermitianCase::RootsOfUnity:
            return roots_of_unity_set(f, req.n == 0 ? f.size() : req.n);
        case HermitianCase::CosetUnion:
            return coset_union_set(f, req.n, req.t, req.leaders, LeaderPolicy::VnCosets);
        case HermitianCase::AffineGrid:
            return affine_grid_set(f, req.t, req.anchor);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown case");
}

EvaluationSet genus_zero_set(const Field &f, const ConstructionRequest &req) {
    switch (req.id) {
        case ConstructionId::C1:
            return roots_of_unity_set(f, req.n);
        case ConstructionId::C2:
            return coset_union_set(f, req.n, req.t, req.leaders, LeaderPolicy::SubfieldLeaders);
        case ConstructionId::C3:
            return coset_union_set(f, req.n, req.t, req.leaders, LeaderPolicy::VnCosets);
        case ConstructionId::C4:
            return affine_grid_set(f, req.t, req.anchor);
        default:
            throw Error(ErrorKind::InvalidArgument, "not a genus-0 construction");
    }
}

CurveSpec request_curve(const Field &f, const ConstructionRequest &req) {
    switch (req.id) {
        case ConstructionId::C5:
            return curve(f, CurveFamily::Elliptic, 0, req.c);
        case ConstructionId::C6:
            return curve(f, CurveFamily::HyperElliptic);
        case ConstructionId::C7:
            return curve(f, CurveFamily::Hermitian);
        case ConstructionId::C8:
            return curve(f, CurveFamily::SemiHermitian);
        case ConstructionId::C9:
            if (f.p() == 2) {
                throw Error(ErrorKind::BadCharacteristic, "C9 needs odd q");
            }
            return curve(f, CurveFamily::ArtinSchreier, req.t);
        case ConstructionId::C10:
            if (f.p() != 2) {
                throw Error(ErrorKind::BadCharacteristic, "C10 needs even q");
            }
            return curve(f, CurveFamily::ArtinSchreier, req.t);
        default:
            return curve(f, CurveFamily::ProjectiveLine);
    }
}

CertifiedCode certify(
    const Field &f,
    const CurveSpec &cv,
    const EvaluationSet &xs,
    std::optional<Elem> unit_scalar,
    uint32_t k,
    const std::string &provenance,
    std::vector<std::string> trace,
    const Budget &budget) {
    if (k == 0) {
        throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
    }
    TwistVector tw;
    try {
        tw = twist_vector(f, xs, unit_scalar);
    } catch (const Error &e) {
        if (e.kind == ErrorKind::NotNormValue && cv.family == CurveFamily::Elliptic) {
            throw Error(ErrorKind::NotNormValue, "elliptic norm condition fails for q=" + std::to_string(f.q()) + ": " + e.what());
        }
        throw;
    }

    CertifiedCode out;
    out.curve = cv;
    for (size_t i = 0; i < xs.points.size(); i++) {
        for (const CurvePoint &pt : fiber(f, cv, xs.points[i])) {
            out.points.push_back(pt);
            out.twist.push_back(tw.v[i]);
        }
    }
    out.pole_bound = k - 1;
    out.designed_dual_distance = (int64_t)k + 1 - 2 * (int64_t)cv.genus;

    uint32_t lo = cv.genus + 1;
    uint32_t hi = stated_k_max(f.q(), out.points.size(), cv.genus);
    trace.push_back(
        "N=" + std::to_string(out.points.size()) + ", g=" + std::to_string(cv.genus) +
        ", k range " + std::to_string(lo) + ".." + std::to_string(hi));
    if (k < lo || k > hi) {
        trace.push_back("k=" + std::to_string(k) + " is outside the stated range");
    }
    if (tw.unit_scalar != ONE) {
        trace.push_back("unit scalar " + f.format(tw.unit_scalar));
    }

    auto basis = rr_basis(cv, k);
    out.code = evaluation_code(f, basis, out.points, out.twist, provenance);
    out.gram = hermitian_gram(f, out.code);
    if (!out.gram.all_zero) {
        throw Error(ErrorKind::GramNonzero, provenance + " [" + std::to_string(out.n()) + "," +
                                                std::to_string(out.k()) + "]: " + out.gram.describe(f));
    }
    if (cv.genus == 0) {
        try {
            out.mds = is_mds(f, out.code, budget);
        } catch (const Error &e) {
            if (e.kind != ErrorKind::CapExceeded) {
                throw;
            }
            trace.push_back(std::string("mds unknown: ") + e.what());
        }
    }
    out.trace = std::move(trace);
    return out;
}

std::string request_provenance(const Field &f, const ConstructionRequest &req) {
    std::string s = construction_name(req.id);
    s += " q=" + std::to_string(f.q());
    if (req.n) {
        s += " n=" + std::to_string(req.n);
    }
    if (req.t) {
        s += " t=" + std::to_string(req.t);
    }
    return s;
}

}  // namespace

const char *agq::construction_name(ConstructionId id) {
    for (const auto &n : NAMES) {
        if (n.id == id) {
            return n.name;
        }
    }
    return "?";
}

std::optional<ConstructionId> agq::parse_construction(std::string_view text) {
    std::string s = lower(text);
    for (const auto &n : NAMES) {
        if (s == n.alias || s == lower(n.name)) {
            return n.id;
        }
    }
    return std::nullopt;
}

const char *agq::embed_policy_name(EmbedPolicy policy) {
    switch (policy) {
        case EmbedPolicy::None:
            return "none";
        case EmbedPolicy::Once:
            return "once";
        case EmbedPolicy::Iterate:
            return "iterate";
        case EmbedPolicy::Deep:
            return "deep";
    }
    return "?";
}

std::string CertifiedCode::label() const {
    return "[" + std::to_string(n()) + "," + std::to_string(k()) + "]";
}

uint32_t agq::stated_k_max(uint32_t q, size_t length, uint32_t genus) {
    return (uint32_t)((length + q + 2 * (size_t)genus - 1) / (q + 1));
}

CertifiedCode agq::construct(const Field &f, const ConstructionRequest &req, const Budget &budget) {
    std::string prov = request_provenance(f, req);
    if (genus_zero(req.id)) {
        EvaluationSet set = genus_zero_set(f, req);
        uint32_t k = req.k ? req.k : stated_k_max(f.q(), set.size(), 0);
        std::vector<std::string> trace{std::string(point_family_name(set.family)) + " |U|=" +
                                       std::to_string(set.size())};
        return certify(f, curve(f, CurveFamily::ProjectiveLine), set, req.unit_scalar, k, prov, trace, budget);
    }
    CurveSpec cv = request_curve(f, req);
    if (req.k == 0) {
        throw Error(ErrorKind::InvalidArgument, "curve constructions need an explicit k");
    }
    EvaluationSet xs;
    if (req.id == ConstructionId::C6 || req.id == ConstructionId::C7) {
        xs = hermitian_case_set(f, req);
    } else {
        xs = explicit_set(f, x_support(f, cv));
    }
    std::vector<std::string> trace{std::string(curve_family_name(cv.family)) + " x-set " +
                                   point_family_name(xs.family) + " of size " + std::to_string(xs.size())};
    return certify(f, cv, xs, req.unit_scalar, req.k, prov, trace, budget);
}

CertifiedCode agq::embed_once(const Field &f, const CertifiedCode &code, const Budget &budget) {
    if (code.curve.family != CurveFamily::ProjectiveLine) {
        throw Error(ErrorKind::EmbeddingRejected, "embedding needs a genus-0 code");
    }
    if (code.extended) {
        throw Error(ErrorKind::EmbeddingRejected, "the code already carries an appended column");
    }
    std::optional<MdsResult> mds = code.mds;
    if (!mds) {
        try {
            mds = is_mds(f, code.code, budget);
        } catch (const Error &e) {
            throw Error(ErrorKind::EmbeddingRejected, std::string("MDS not certified: ") + e.what());
        }
    }
    if (!mds->mds) {
        throw Error(ErrorKind::EmbeddingRejected, "input code is not MDS");
    }

    uint32_t q = f.q();
    size_t n = code.points.size();
    size_t k = code.k();
    uint64_t kq = (uint64_t)k * (q + 1);
    std::vector<std::string> trace = code.trace;
    std::string label;
    if (kq == n - 1) {
        label = "k(q+1)=n−1";
    } else if (kq == n - 1 + q) {
        label = "k(q+1)=n−1+q";
    } else {
        label = "n−1≠k(q+1)≠n−1+q";
    }
    trace.push_back(
        "embed [" + std::to_string(n) + "," + std::to_string(k) + "]: " + label + ", k(q+1)=" + std::to_string(kq) +
        ", B(k+1)=" + std::to_string(n > 1 ? kq % (n - 1) : 0));

    std::vector<Elem> row(n);
    for (size_t l = 0; l < n; l++) {
        row[l] = f.mul(code.twist[l], f.pow(code.points[l].x, (int64_t)k));
    }
    Elem c = hermitian_product(f, row.data(), row.data(), n);

    Matrix G;
    CertifiedCode out;
    if (c == ZERO) {
        G = Matrix(k + 1, n);
        std::copy(code.code.G.data.begin(), code.code.G.data.end(), G.data.begin());
        std::copy(row.begin(), row.end(), G.row(k));
        trace.push_back("new row is isotropic, length kept");
    } else {
        Elem a = f.norm_preimage(f.neg(c));
        G = Matrix(k + 1, n + 1);
        for (size_t r = 0; r < k; r++) {
            std::copy(code.code.G.row(r), code.code.G.row(r) + n, G.row(r));
        }
        std::copy(row.begin(), row.end(), G.row(k));
        G.at(k, n) = a;
        out.extended = true;
        out.extension_value = a;
        trace.push_back("appended column with a=" + f.format(a) + ", a^(q+1)=" + f.format(f.neg(c)));
    }

    try {
        out.code = make_code(f, std::move(G), code.code.provenance + " +embed");
    } catch (const Error &e) {
        throw Error(ErrorKind::EmbeddingRejected, e.what());
    }
    out.gram = hermitian_gram(f, out.code);
    if (!out.gram.all_zero) {
        throw Error(ErrorKind::EmbeddingRejected, "GramNonzero: " + out.gram.describe(f));
    }
    out.curve = code.curve;
    out.points = code.points;
    out.twist = code.twist;
    out.pole_bound = (uint32_t)k;
    out.designed_dual_distance = (int64_t)k + 2;
    try {
        out.mds = is_mds(f, out.code, budget);
    } catch (const Error &e) {
        if (e.kind != ErrorKind::CapExceeded) {
            throw;
        }
        trace.push_back(std::string("mds unknown: ") + e.what());
    }
    out.trace = std::move(trace);
    return out;
}

EmbedChain agq::embed_iterate(const Field &f, const CertifiedCode &code, const Budget &budget, size_t max_steps) {
    EmbedChain chain;
    const CertifiedCode *cur = &code;
    for (size_t step = 0; step < max_steps; step++) {
        try {
            chain.codes.push_back(embed_once(f, *cur, budget));
        } catch (const Error &e) {
            chain.stop_reason = e.what();
            return chain;
        }
        cur = &chain.codes.back();
    }
    chain.stop_reason = "step limit";
    return chain;
}

CertifiedCode agq::deep_dimension(const Field &f, uint32_t t, bool embed, const Budget &budget) {
    uint32_t q = f.q();
    if (t == 0 || (q + 1) % t != 0) {
        throw Error(ErrorKind::DivisibilityViolated, "t=" + std::to_string(t) + " does not divide q+1");
    }
    uint32_t n = t * (q - 1) + 1;
    uint32_t kk = n / (2 * t);
    std::vector<std::string> trace{
        "deep: n=t(q−1)+1=" + std::to_string(n) + ", k″=⌊n/2t⌋=" + std::to_string(kk)};
    CertifiedCode base = certify(
        f,
        curve(f, CurveFamily::ProjectiveLine),
        roots_of_unity_set(f, n),
        std::nullopt,
        kk,
        "C1 deep q=" + std::to_string(q) + " t=" + std::to_string(t),
        trace,
        budget);
    if (!embed) {
        return base;
    }
    bool divides = ((uint64_t)kk * (q + 1)) % (n - 1) == 0;
    base.trace.push_back(divides ? "(n−1)|k″(q+1)" : "(n−1)∤k″(q+1)");
    return embed_once(f, base, budget);
}

EmbedChain agq::run_request(const Field &f, const ConstructionRequest &req, const Budget &budget) {
    EmbedChain chain;
    if (req.embed == EmbedPolicy::Deep) {
        if (req.id != ConstructionId::C1) {
            throw Error(ErrorKind::InvalidArgument, "deep embedding is defined for C1 only");
        }
        uint32_t t = req.t;
        if (t == 0) {
            if (req.n < 2 || (req.n - 1) % (f.q() - 1) != 0) {
                throw Error(ErrorKind::DivisibilityViolated, "deep embedding needs n = t(q−1)+1");
            }
            t = (req.n - 1) / (f.q() - 1);
        }
        CertifiedCode base = deep_dimension(f, t, false, budget);
        chain.codes.push_back(deep_dimension(f, t, true, budget));
        chain.codes.insert(chain.codes.begin(), std::move(base));
        return chain;
    }
    chain.codes.push_back(construct(f, req, budget));
    if (req.embed == EmbedPolicy::Once) {
        chain.codes.push_back(embed_once(f, chain.codes.back(), budget));
    } else if (req.embed == EmbedPolicy::Iterate) {
        EmbedChain more = embed_iterate(f, chain.codes.back(), budget);
        for (auto &c : more.codes) {
            chain.codes.push_back(std::move(c));
        }
        chain.stop_reason = more.stop_reason;
    }
    return chain;
}
