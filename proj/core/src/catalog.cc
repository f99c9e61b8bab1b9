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

#include "agq/catalog.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <regex>
#include <thread>
#include <tuple>

#include "agq/error.h"
#include "json.hpp"

using namespace agq;
using json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

const char *case_name(HermitianCase c) {
    switch (c) {
        case HermitianCase::RootsOfUnity:
            return "i";
        case HermitianCase::CosetUnion:
            return "ii";
        case HermitianCase::AffineGrid:
            return "iii";
    }
    return "?";
}

json elem_json(const std::optional<Elem> &e) {
    if (!e) {
        return nullptr;
    }
    if (*e == ZERO) {
        return "0";
    }
    return "t^" + std::to_string(*e);
}

bool starts_with(const std::string &s, const char *prefix) {
    return s.rfind(prefix, 0) == 0;
}

uint32_t q_of(const ConstructionRequest &r) {
    uint32_t q = 1;
    for (uint32_t i = 0; i < r.m; i++) {
        q *= r.p;
    }
    return q;
}

std::string row_label(const ConstructionRequest &r, uint32_t embeds) {
    std::string s = construction_name(r.id);
    if (r.id == ConstructionId::C6 || r.id == ConstructionId::C7) {
        s += std::string("(") + case_name(r.hermitian_case) + ")";
    }
    s += " q=" + std::to_string(q_of(r));
    if (r.n) {
        s += " n=" + std::to_string(r.n);
    }
    if (r.t) {
        s += " t=" + std::to_string(r.t);
    }
    if (r.k) {
        s += " k=" + std::to_string(r.k);
    }
    if (r.embed == EmbedPolicy::Deep) {
        s += " deep";
    }
    if (embeds) {
        s += " +" + std::to_string(embeds);
    }
    return s;
}

ConstructionRequest recipe(
    ConstructionId id,
    uint32_t q,
    uint32_t n,
    uint32_t t,
    uint32_t k,
    EmbedPolicy embed = EmbedPolicy::None,
    HermitianCase hc = HermitianCase::RootsOfUnity) {
    auto pm = prime_power(q);
    ConstructionRequest r;
    r.id = id;
    r.p = pm->first;
    r.m = pm->second;
    r.n = n;
    r.t = t;
    r.k = k;
    r.embed = embed;
    r.hermitian_case = hc;
    return r;
}

ReproTarget target(
    const char *table, const char *expected, const ConstructionRequest &r, uint32_t embeds = 0, bool classical = false) {
    ReproTarget out;
    out.table = table;
    out.row = row_label(r, embeds);
    out.expected = expected;
    out.classical = classical;
    out.recipe = r;
    out.embeds = embeds;
    return out;
}

std::vector<ReproTarget> mds1_targets() {
    using C = ConstructionId;
    std::vector<ReproTarget> out;
    const std::pair<uint32_t, const char *> once[] = {
        {5, "[[9,3,4]]_5"},
        {7, "[[13,7,4]]_7"},
        {9, "[[17,11,4]]_9"},
        {11, "[[21,15,4]]_11"},
        {13, "[[25,19,4]]_13"},
        {17, "[[33,27,4]]_17"},
        {19, "[[37,31,4]]_19"},
        {23, "[[45,39,4]]_23"},
        {25, "[[49,43,4]]_25"},
        {27, "[[53,47,4]]_27"},
    };
    for (const auto &[q, e] : once) {
        out.push_back(target("mds1", e, recipe(C::C1, q, 2 * q - 1, 0, 2), 1));
    }
    const std::pair<uint32_t, const char *> deep[] = {
        {5, "[[9,3,4]]_5"},
        {7, "[[14,6,5]]_7"},
        {9, "[[17,7,6]]_9"},
        {11, "[[22,10,7]]_11"},
        {13, "[[25,11,8]]_13"},
        {17, "[[33,15,10]]_17"},
        {19, "[[38,18,11]]_19"},
        {23, "[[46,22,13]]_23"},
        {25, "[[49,23,14]]_25"},
        {27, "[[54,26,15]]_27"},
    };
    for (const auto &[q, e] : deep) {
        out.push_back(target("mds1", e, recipe(C::C1, q, 2 * q - 1, 2, 0, EmbedPolicy::Deep)));
    }
    const std::tuple<uint32_t, const char *, const char *> c3[] = {
        {3, "[[49,43,4]]_17", "[[49,41,5]]_17"},
        {4, "[[61,53,5]]_17", "[[62,52,6]]_17"},
        {5, "[[73,65,5]]_17", "[[74,64,6]]_17"},
        {6, "[[85,75,6]]_17", "[[85,73,7]]_17"},
        {7, "[[97,85,7]]_17", "[[97,83,8]]_17"},
    };
    for (const auto &[t, base, embedded] : c3) {
        out.push_back(target("mds1", base, recipe(C::C3, 17, 12, t, 0), 0));
        out.push_back(target("mds1", embedded, recipe(C::C3, 17, 12, t, 0), 1));
    }
    struct Grid {
        uint32_t q;
        uint32_t t;
        std::vector<const char *> chain;
    };
    const Grid c4[] = {
        {7, 3, {"[[21,13,5]]_7", "[[22,12,6]]_7"}},
        {7, 4, {"[[28,18,6]]_7"}},
        {7, 5, {"[[36,24,7]]_7"}},
        {8, 2, {"[[16,10,4]]_8", "[[16,8,5]]_8", "[[16,6,6]]_8"}},
        {8, 3, {"[[24,16,5]]_8", "[[24,14,6]]_8", "[[24,12,7]]_8"}},
        {8, 4, {"[[32,22,6]]_8", "[[32,20,7]]_8"}},
        {8, 5, {"[[40,28,7]]_8"}},
        {8, 6, {"[[48,34,8]]_8"}},
        {9, 2, {"[[18,12,4]]_9", "[[18,10,5]]_9", "[[18,8,6]]_9"}},
        {9, 3, {"[[27,19,5]]_9", "[[27,17,6]]_9", "[[28,16,7]]_9"}},
        {9, 4, {"[[36,26,6]]_9", "[[36,24,7]]_9"}},
        {9, 5, {"[[45,33,7]]_9", "[[45,31,8]]_9"}},
        {9, 6, {"[[54,40,8]]_9", "[[55,39,9]]_9"}},
        {9, 7, {"[[64,48,9]]_9"}},
    };
    for (const auto &g : c4) {
        for (size_t i = 0; i < g.chain.size(); i++) {
            out.push_back(target("mds1", g.chain[i], recipe(C::C4, g.q, 0, g.t, 0), (uint32_t)i + 1));
        }
    }
    out.push_back(target("mds1", "[17,2,16]_{9^2}", recipe(C::C3, 9, 8, 2, 2), 0, true));
    out.push_back(target("mds1", "[17,3,15]_{9^2}", recipe(C::C3, 9, 8, 2, 2), 1, true));
    out.push_back(target("mds1", "[25,2,24]_{17^2}", recipe(C::C3, 17, 12, 2, 2), 0, true));
    out.push_back(target("mds1", "[26,3,24]_{17^2}", recipe(C::C3, 17, 12, 2, 2), 1, true));
    return out;
}

std::vector<ReproTarget> mixed_targets() {
    using C = ConstructionId;
    const auto ii = HermitianCase::CosetUnion;
    const auto none = EmbedPolicy::None;
    return {
        target("mixed", "[[24,18,3]]_4", recipe(C::C5, 4, 0, 0, 4)),
        target("mixed", "[[20,12,4]]_4", recipe(C::C5, 4, 0, 0, 5)),
        target("mixed", "[[80,64,8]]_8", recipe(C::C5, 8, 0, 0, 9)),
        target("mixed", "[[288,228,30]]_{2^4}", recipe(C::C5, 16, 0, 0, 31)),
        target("mixed", "[[1088,884,102]]_{2^5}", recipe(C::C5, 32, 0, 0, 103)),
        target("mixed", "[[64,58,3]]_4", recipe(C::C7, 4, 16, 0, 6)),
        target("mixed", "[[95,89,3]]_5", recipe(C::C7, 5, 6, 2, 7, none, ii)),
        target("mixed", "[[95,87,3]]_5", recipe(C::C7, 5, 6, 2, 11, none, ii)),
        target("mixed", "[[95,85,3]]_5", recipe(C::C7, 5, 6, 2, 12, none, ii)),
        target("mixed", "[[95,83,4]]_5", recipe(C::C7, 5, 6, 2, 13, none, ii)),
        target("mixed", "[[15,9,3]]_3", recipe(C::C9, 3, 0, 2, 4)),
        target("mixed", "[[65,59,3]]_5", recipe(C::C8, 5, 0, 0, 6)),
        target("mixed", "[[65,51,5]]_5", recipe(C::C8, 5, 0, 0, 11)),
        target("mixed", "[[65,49,≥5]]_5", recipe(C::C8, 5, 0, 0, 12)),
        target("mixed", "[[175,169,3]]_7", recipe(C::C9, 7, 0, 4, 8)),
        target("mixed", "[64,58,3]_4", recipe(C::C10, 4, 0, 5, 6)),
        target("mixed", "[[91,81,4]]_7", recipe(C::C9, 7, 0, 2, 8)),
        target("mixed", "[[176,168,3]]_8", recipe(C::C10, 8, 0, 3, 9)),
        target("mixed", "[[63,55,3]]_9", recipe(C::C7, 9, 2, 2, 19, none, ii)),
        target("mixed", "[[369,361,3]]_9", recipe(C::C9, 9, 0, 5, 11)),
    };
}

std::optional<size_t> quantum_rank_d(const CatalogEntry &e) {
    if (!e.quantum || e.quantum->status == DistanceStatus::Unknown) {
        return std::nullopt;
    }
    return e.quantum->d;
}

}  // namespace

const char *agq::verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::Certified:
            return "CERTIFIED";
        case Verdict::Rejected:
            return "REJECTED";
        case Verdict::Match:
            return "MATCH";
        case Verdict::Unmatched:
            return "UNMATCHED";
        case Verdict::Skipped:
            return "SKIPPED";
    }
    return "?";
}

std::string CatalogEntry::classical_str() const {
    std::string s = "[" + std::to_string(n) + "," + std::to_string(k);
    if (d) {
        s += "," + std::to_string(*d);
    }
    return s + "]_{" + std::to_string(q) + "^2}";
}

std::string CatalogEntry::to_json() const {
    json j;
    j["kind"] = kind;
    j["request"] = json::parse(request);
    j["field"] = {{"p", p}, {"m", m}, {"q", q}};
    json c = {{"n", n}, {"k", k}};
    c["d"] = d ? json(*d) : json(nullptr);
    c["d_designed"] = d_designed ? json(*d_designed) : json(nullptr);
    j["classical"] = c;
    if (quantum) {
        json qj = {{"q", quantum->q}, {"n", quantum->n}, {"k", quantum->k}};
        qj["d"] = quantum->status == DistanceStatus::Unknown ? json(nullptr) : json(quantum->d);
        qj["d_status"] = distance_status_name(quantum->status);
        qj["d_method"] = quantum->d_method;
        auto mds_flag = quantum->mds();
        qj["mds"] = mds_flag ? json(*mds_flag) : json(nullptr);
        auto defect = quantum->defect();
        qj["defect"] = defect ? json(*defect) : json(nullptr);
        qj["witness"] = quantum->witness;
        qj["designed_d"] = quantum->designed_d;
        qj["str"] = quantum->str();
        j["quantum"] = qj;
    } else {
        j["quantum"] = nullptr;
    }
    json cert = {{"gram_zero", gram_zero}, {"gram_digest", gram_digest}};
    if (mds) {
        cert["mds"] = {
            {"mds", mds->mds}, {"method", mds->method}, {"witness", mds->witness}, {"checks", mds->checks}};
    } else {
        cert["mds"] = nullptr;
    }
    j["certificates"] = cert;
    j["trace"] = trace;
    j["seconds"] = seconds;
    j["verdict"] = verdict_name(verdict);
    if (!reason.empty()) {
        j["reason"] = reason;
    }
    if (!table.empty()) {
        j["table"] = table;
        j["row"] = row;
        j["expected"] = expected;
        j["computed"] = computed;
    }
    return j.dump();
}

std::string agq::request_json(const ConstructionRequest &req) {
    json j;
    j["construction"] = construction_name(req.id);
    j["p"] = req.p;
    j["m"] = req.m;
    j["n"] = req.n;
    j["t"] = req.t;
    j["k"] = req.k;
    j["leaders"] = req.leaders;
    j["anchor"] = elem_json(req.anchor);
    j["c"] = elem_json(req.c);
    j["unit_scalar"] = elem_json(req.unit_scalar);
    if (req.id == ConstructionId::C6 || req.id == ConstructionId::C7) {
        j["case"] = case_name(req.hermitian_case);
    }
    j["embed"] = embed_policy_name(req.embed);
    return j.dump();
}

std::string agq::verify_request_json(const std::string &path, bool systematic_prefix) {
    json j;
    j["file"] = path;
    j["systematic_prefix"] = systematic_prefix;
    return j.dump();
}

int agq::exit_code(const CatalogEntry &entry) {
    switch (entry.verdict) {
        case Verdict::Certified:
        case Verdict::Match:
            return 0;
        case Verdict::Skipped:
            return 3;
        case Verdict::Unmatched:
            return 2;
        case Verdict::Rejected:
            if (starts_with(entry.reason, "CapExceeded")) {
                return 3;
            }
            if (starts_with(entry.reason, "ParseError")) {
                return 4;
            }
            return 2;
    }
    return 2;
}

std::optional<std::pair<uint32_t, uint32_t>> agq::prime_power(uint64_t q) {
    if (q < 2) {
        return std::nullopt;
    }
    uint64_t p = 2;
    while (p * p <= q && q % p != 0) {
        p++;
    }
    if (q % p != 0) {
        p = q;
    }
    uint32_t m = 0;
    while (q % p == 0) {
        q /= p;
        m++;
    }
    if (q != 1) {
        return std::nullopt;
    }
    return std::make_pair((uint32_t)p, m);
}

CatalogEntry agq::describe_code(const Field &f, const CertifiedCode &code, const Budget &budget, bool primal_distance) {
    CatalogEntry e;
    e.kind = "construct";
    e.p = f.p();
    e.m = f.m();
    e.q = f.q();
    e.n = code.n();
    e.k = code.k();
    e.gram_zero = code.gram.all_zero;
    e.gram_digest = code.gram.digest_hex();
    e.mds = code.mds;
    e.trace = code.trace;
    if (!code.extended) {
        e.d_designed = (int64_t)code.n() - code.pole_bound;
    }
    if (code.mds && code.mds->mds) {
        e.d = code.n() - code.k() + 1;
    } else if (primal_distance) {
        try {
            DistanceResult r = exhaustive_distance(f, code.code, budget);
            e.d = r.d;
        } catch (const Error &err) {
            if (err.kind != ErrorKind::CapExceeded) {
                throw;
            }
            e.trace.push_back(std::string("primal distance skipped: ") + err.what());
        }
    }
    e.quantum = stabilizer_params(f, code, budget);
    e.verdict = Verdict::Certified;
    return e;
}

ConstructOutcome agq::run_construct(const ConstructionRequest &req, const Budget &budget, bool primal_distance) {
    auto start = Clock::now();
    ConstructOutcome out;
    try {
        Field f = Field::build(req.p, req.m);
        EmbedChain chain = run_request(f, req, budget);
        for (size_t i = 0; i < chain.codes.size(); i++) {
            bool last = i + 1 == chain.codes.size();
            out.chain.push_back(describe_code(f, chain.codes[i], budget, primal_distance && last));
            out.chain.back().request = request_json(req);
        }
        out.entry = out.chain.back();
        if (!chain.stop_reason.empty()) {
            out.entry.trace.push_back("chain stopped: " + chain.stop_reason);
        }
        out.code = std::move(chain.codes.back());
    } catch (const Error &err) {
        out.entry = CatalogEntry{};
        out.entry.kind = "construct";
        out.entry.p = req.p;
        out.entry.m = req.m;
        out.entry.q = 1;
        for (uint32_t i = 0; i < req.m && out.entry.q <= 65536; i++) {
            out.entry.q *= req.p;
        }
        out.entry.verdict = Verdict::Rejected;
        out.entry.reason = err.what();
    }
    out.entry.request = request_json(req);
    out.entry.seconds = seconds_since(start);
    return out;
}

CatalogEntry agq::run_verify(const Field &f, const Matrix &G, const Budget &budget, bool primal_distance) {
    auto start = Clock::now();
    CatalogEntry e;
    e.kind = "verify";
    e.p = f.p();
    e.m = f.m();
    e.q = f.q();
    e.n = G.cols;
    e.k = G.rows;
    try {
        LinearCode code = make_code(f, G);
        GramCertificate gram = hermitian_gram(f, code);
        e.gram_zero = gram.all_zero;
        e.gram_digest = gram.digest_hex();
        if (!gram.all_zero) {
            throw Error(ErrorKind::GramNonzero, gram.describe(f));
        }
        try {
            e.mds = is_mds(f, code, budget);
        } catch (const Error &err) {
            if (err.kind != ErrorKind::CapExceeded) {
                throw;
            }
            e.trace.push_back(std::string("mds unknown: ") + err.what());
        }
        if (e.mds && e.mds->mds) {
            e.d = code.n() - code.k() + 1;
        } else if (primal_distance) {
            try {
                e.d = exhaustive_distance(f, code, budget).d;
            } catch (const Error &err) {
                if (err.kind != ErrorKind::CapExceeded) {
                    throw;
                }
                e.trace.push_back(std::string("primal distance skipped: ") + err.what());
            }
        }
        e.quantum = stabilizer_params(f, code, e.mds, 0, budget);
        e.verdict = Verdict::Certified;
    } catch (const Error &err) {
        e.verdict = Verdict::Rejected;
        e.reason = err.what();
    }
    e.seconds = seconds_since(start);
    return e;
}

std::optional<ExpectedParams> agq::parse_expected(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') {
            s += c;
        }
    }
    static const std::regex re(R"(^(\[\[?)(\d+),(\d+),(≥)?(\d+)(\]\]?)_\{?(\d+)(?:\^(\d+))?\}?$)");
    std::smatch mt;
    if (!std::regex_match(s, mt, re)) {
        return std::nullopt;
    }
    if (mt[1].length() != mt[6].length()) {
        return std::nullopt;
    }
    ExpectedParams out;
    out.n = std::stoull(mt[2]);
    out.k = std::stoull(mt[3]);
    out.at_least = mt[4].matched;
    out.d = std::stoull(mt[5]);
    uint64_t base = std::stoull(mt[7]);
    uint64_t e = mt[8].matched ? std::stoull(mt[8]) : 1;
    out.q = 1;
    for (uint64_t i = 0; i < e; i++) {
        out.q *= base;
    }
    return out;
}

std::vector<ReproTarget> agq::repro_targets(std::string_view table) {
    if (table == "mds1") {
        return mds1_targets();
    }
    if (table == "mixed") {
        return mixed_targets();
    }
    throw Error(ErrorKind::InvalidArgument, "unknown table '" + std::string(table) + "'");
}

CatalogEntry agq::reproduce_row(const ReproTarget &t, const Budget &budget) {
    auto start = Clock::now();
    CatalogEntry e;
    auto finish = [&](Verdict v, std::string reason) {
        e.kind = "reproduce";
        e.table = t.table;
        e.row = t.row;
        e.expected = t.expected;
        e.verdict = v;
        e.reason = std::move(reason);
        e.seconds = seconds_since(start);
        return e;
    };
    auto want = parse_expected(t.expected);
    if (!want) {
        return finish(Verdict::Skipped, "expected string does not parse");
    }
    if (!t.recipe) {
        return finish(Verdict::Skipped, "no recipe");
    }
    const ConstructionRequest &req = *t.recipe;
    e.request = request_json(req);
    try {
        Field f = Field::build(req.p, req.m);
        std::optional<CertifiedCode> code;
        if (req.embed == EmbedPolicy::Deep) {
            code = run_request(f, req, budget).codes.back();
        } else {
            code = construct(f, req, budget);
        }
        for (uint32_t i = 0; i < t.embeds; i++) {
            code = embed_once(f, *code, budget);
        }
        CatalogEntry d = describe_code(f, *code, budget, t.classical);
        d.request = e.request;
        e = d;
    } catch (const Error &err) {
        e.computed = std::string("REJECTED(") + err.what() + ")";
        if (err.kind == ErrorKind::CapExceeded) {
            return finish(Verdict::Skipped, "cap");
        }
        return finish(Verdict::Unmatched, err.what());
    }

    if (t.classical) {
        e.computed = e.classical_str();
        if (!e.d) {
            return finish(Verdict::Skipped, "cap");
        }
        bool ok = e.n == want->n && e.k == want->k && *e.d == want->d && e.q * e.q == want->q;
        return finish(ok ? Verdict::Match : Verdict::Unmatched, "");
    }

    const QuantumParams &qp = *e.quantum;
    e.computed = qp.str();
    bool shape = qp.n == want->n && qp.k == (int64_t)want->k && qp.q == want->q;
    if (!shape) {
        return finish(Verdict::Unmatched, "");
    }
    if (qp.status == DistanceStatus::Unknown) {
        return finish(Verdict::Skipped, "cap");
    }
    if (want->at_least) {
        if (qp.d >= want->d) {
            return finish(Verdict::Match, "");
        }
        return finish(qp.status == DistanceStatus::Exact ? Verdict::Unmatched : Verdict::Skipped, "");
    }
    if (qp.status == DistanceStatus::Exact) {
        return finish(qp.d == want->d ? Verdict::Match : Verdict::Unmatched, "");
    }
    return finish(qp.d > want->d ? Verdict::Unmatched : Verdict::Skipped, qp.d > want->d ? "" : "cap");
}

std::vector<CatalogEntry> agq::reproduce(
    std::string_view table, const Budget &budget, const std::function<void(const CatalogEntry &)> &sink) {
    std::vector<CatalogEntry> out;
    for (const ReproTarget &t : repro_targets(table)) {
        out.push_back(reproduce_row(t, budget));
        if (sink) {
            sink(out.back());
        }
    }
    return out;
}

std::string agq::format_report_line(const CatalogEntry &e) {
    std::string s = e.table + " | " + e.row + " | ";
    switch (e.verdict) {
        case Verdict::Match:
            s += "MATCH " + e.expected;
            break;
        case Verdict::Unmatched:
            s += "UNMATCHED(" + e.expected + ", " + e.computed + ")";
            break;
        default:
            s += std::string(verdict_name(e.verdict)) + "(" + e.reason + ") " + e.expected;
            if (!e.computed.empty()) {
                s += " got " + e.computed;
            }
            break;
    }
    return s;
}

namespace {

std::vector<CatalogEntry> scan_one(const ConstructionRequest &req, const Budget &budget, bool assumption_check) {
    std::vector<CatalogEntry> out;
    ConstructionRequest r = req;
    if (assumption_check) {
        CatalogEntry a;
        a.kind = "assumption1";
        a.p = r.p;
        a.m = r.m;
        a.request = request_json(r);
        try {
            Field f = Field::build(r.p, r.m);
            a.q = f.q();
            CurveSpec cv = curve(f, CurveFamily::Elliptic, 0, r.c);
            twist_vector(f, explicit_set(f, x_support(f, cv)));
            a.verdict = Verdict::Certified;
        } catch (const Error &err) {
            a.verdict = Verdict::Rejected;
            a.reason = err.what();
        }
        out.push_back(a);
        if (a.verdict != Verdict::Certified) {
            return out;
        }
    }
    if (r.k == 0 && r.id != ConstructionId::C1 && r.id != ConstructionId::C2 && r.id != ConstructionId::C3 &&
        r.id != ConstructionId::C4) {
        try {
            Field f = Field::build(r.p, r.m);
            ConstructionRequest probe = r;
            probe.k = 1;
            probe.embed = EmbedPolicy::None;
            CertifiedCode c = construct(f, probe, budget);
            r.k = stated_k_max(f.q(), c.n(), c.curve.genus);
        } catch (const Error &err) {
            CatalogEntry x;
            x.kind = "scan";
            x.p = r.p;
            x.m = r.m;
            x.request = request_json(r);
            x.verdict = Verdict::Rejected;
            x.reason = err.what();
            out.push_back(x);
            return out;
        }
    }
    ConstructOutcome o = run_construct(r, budget, true);
    if (o.entry.verdict == Verdict::Certified) {
        for (auto &c : o.chain) {
            c.kind = "scan";
            c.request = o.entry.request;
            out.push_back(std::move(c));
        }
        out.back().trace = o.entry.trace;
        out.back().seconds = o.entry.seconds;
    } else {
        o.entry.kind = "scan";
        out.push_back(std::move(o.entry));
    }
    return out;
}

}  // namespace

std::vector<CatalogEntry> agq::scan(
    const ScanGrid &grid, const Budget &budget, const std::function<void(const CatalogEntry &)> &sink) {
    struct Job {
        ConstructionRequest req;
        bool assumption_check = false;
        std::optional<std::string> bad_q;
    };
    std::vector<Job> jobs;
    for (uint32_t q : grid.qs) {
        auto pm = prime_power(q);
        if (!pm) {
            Job j;
            j.bad_q = "q=" + std::to_string(q) + " is not a prime power";
            jobs.push_back(j);
            continue;
        }
        ConstructionRequest base;
        base.id = grid.id;
        base.p = pm->first;
        base.m = pm->second;
        base.embed = grid.embed;
        base.hermitian_case = grid.hermitian_case;
        std::vector<uint32_t> ns = grid.ns;
        if (ns.empty() && grid.id == ConstructionId::C1) {
            uint64_t order = (uint64_t)q * q - 1;
            for (uint64_t d = 2; d <= order; d++) {
                if (order % d == 0) {
                    ns.push_back((uint32_t)d + 1);
                }
            }
        }
        if (ns.empty()) {
            ns.push_back(0);
        }
        std::vector<uint32_t> ts = grid.ts.empty() ? std::vector<uint32_t>{0} : grid.ts;
        std::vector<uint32_t> ks = grid.ks.empty() ? std::vector<uint32_t>{0} : grid.ks;
        bool first = true;
        for (uint32_t n : ns) {
            for (uint32_t t : ts) {
                for (uint32_t k : ks) {
                    Job j;
                    j.req = base;
                    j.req.n = n;
                    j.req.t = t;
                    j.req.k = k;
                    j.assumption_check = first && grid.id == ConstructionId::C5;
                    first = false;
                    jobs.push_back(j);
                }
            }
        }
    }

    std::vector<std::optional<std::vector<CatalogEntry>>> results(jobs.size());
    std::mutex mu;
    size_t next_job = 0;
    size_t next_emit = 0;
    auto worker = [&]() {
        while (true) {
            size_t idx;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next_job >= jobs.size()) {
                    return;
                }
                idx = next_job++;
            }
            std::vector<CatalogEntry> r;
            if (jobs[idx].bad_q) {
                CatalogEntry x;
                x.kind = "scan";
                x.verdict = Verdict::Rejected;
                x.reason = "InvalidArgument: " + *jobs[idx].bad_q;
                r.push_back(x);
            } else {
                r = scan_one(jobs[idx].req, budget, jobs[idx].assumption_check);
            }
            std::lock_guard<std::mutex> lock(mu);
            results[idx] = std::move(r);
            while (next_emit < results.size() && results[next_emit]) {
                if (sink) {
                    for (const auto &e : *results[next_emit]) {
                        sink(e);
                    }
                }
                next_emit++;
            }
        }
    };
    size_t threads = grid.threads ? grid.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<size_t>(1, jobs.size()));
    std::vector<std::thread> pool;
    for (size_t i = 0; i < threads; i++) {
        pool.emplace_back(worker);
    }
    for (auto &th : pool) {
        th.join();
    }

    std::vector<CatalogEntry> all;
    for (auto &r : results) {
        for (auto &e : *r) {
            all.push_back(std::move(e));
        }
    }
    std::map<std::tuple<uint32_t, size_t, int64_t>, size_t> best;
    std::vector<bool> keep(all.size(), true);
    for (size_t i = 0; i < all.size(); i++) {
        const CatalogEntry &e = all[i];
        if (e.verdict != Verdict::Certified || !e.quantum) {
            continue;
        }
        auto key = std::make_tuple(e.q, e.n, e.quantum->k);
        auto it = best.find(key);
        if (it == best.end()) {
            best[key] = i;
            continue;
        }
        size_t d_new = quantum_rank_d(e).value_or(0);
        size_t d_old = quantum_rank_d(all[it->second]).value_or(0);
        if (d_new > d_old) {
            keep[it->second] = false;
            it->second = i;
        } else {
            keep[i] = false;
        }
    }
    std::vector<CatalogEntry> out;
    for (size_t i = 0; i < all.size(); i++) {
        if (keep[i]) {
            out.push_back(std::move(all[i]));
        }
    }
    return out;
}
