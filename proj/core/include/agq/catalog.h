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

#ifndef _AGQ_CATALOG_H
#define _AGQ_CATALOG_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agq/codes.h"
#include "agq/constructions.h"
#include "agq/field.h"
#include "agq/quantum.h"

namespace agq {

enum class Verdict { Certified, Rejected, Match, Unmatched, Skipped };

const char *verdict_name(Verdict verdict);

/// One line of the catalog.
struct CatalogEntry {
    std::string kind;
    /// Request echo, already serialized as a JSON object.
    std::string request = "{}";
    uint32_t p = 0;
    uint32_t m = 0;
    uint32_t q = 0;
    size_t n = 0;
    size_t k = 0;
    /// Classical minimum distance, when enumerated within budget.
    std::optional<size_t> d;
    /// n - deg G, the designed classical distance of a one-point code.
    std::optional<int64_t> d_designed;
    std::optional<QuantumParams> quantum;
    bool gram_zero = false;
    std::string gram_digest;
    std::optional<MdsResult> mds;
    std::vector<std::string> trace;
    double seconds = 0;
    Verdict verdict = Verdict::Rejected;
    std::string reason;
    std::string table;
    std::string row;
    std::string expected;
    std::string computed;

    std::string classical_str() const;
    std::string to_json() const;
};

std::string request_json(const ConstructionRequest &req);
std::string verify_request_json(const std::string &path, bool systematic_prefix);

/// Exit status for the CLI: 0 certified or matched, 2 rejected, 3 budget.
int exit_code(const CatalogEntry &entry);

/// Returns (p, m) with q = p^m.
std::optional<std::pair<uint32_t, uint32_t>> prime_power(uint64_t q);

/// Fills classical and quantum columns for a certified code.
CatalogEntry describe_code(const Field &f, const CertifiedCode &code, const Budget &budget, bool primal_distance);

struct ConstructOutcome {
    /// Every code of the chain, last one being the result.
    std::vector<CatalogEntry> chain;
    std::optional<CertifiedCode> code;
    CatalogEntry entry;
};

ConstructOutcome run_construct(const ConstructionRequest &req, const Budget &budget, bool primal_distance = false);

CatalogEntry run_verify(const Field &f, const Matrix &G, const Budget &budget, bool primal_distance = false);

struct ReproTarget {
    std::string table;
    std::string row;
    /// The parameter string as printed.
    std::string expected;
    /// Printed as a classical [n,k,d]_{q^2} code rather than [[n,k,d]]_q.
    bool classical = false;
    std::optional<ConstructionRequest> recipe;
    /// embed_once applications after the base code.
    uint32_t embeds = 0;
};

struct ExpectedParams {
    uint64_t n = 0;
    uint64_t k = 0;
    uint64_t d = 0;
    bool at_least = false;
    uint64_t q = 0;
};

/// Parses "[[n,k,d]]_q", "[[n,k,≥d]]_q" and "[n,k,d]_{p^e}".
std::optional<ExpectedParams> parse_expected(std::string_view text);

std::vector<ReproTarget> repro_targets(std::string_view table);

CatalogEntry reproduce_row(const ReproTarget &target, const Budget &budget);

std::vector<CatalogEntry> reproduce(
    std::string_view table, const Budget &budget, const std::function<void(const CatalogEntry &)> &sink = {});

/// One line per row: MATCH, UNMATCHED(expected, got) or SKIPPED(reason).
std::string format_report_line(const CatalogEntry &entry);

struct ScanGrid {
    ConstructionId id = ConstructionId::C1;
    std::vector<uint32_t> qs;
    /// Empty means every admissible value for C1, and "unused" elsewhere.
    std::vector<uint32_t> ns;
    std::vector<uint32_t> ts;
    /// Empty means the largest k of the stated range.
    std::vector<uint32_t> ks;
    EmbedPolicy embed = EmbedPolicy::Iterate;
    HermitianCase hermitian_case = HermitianCase::RootsOfUnity;
    size_t threads = 0;
};

/// Runs the grid in parallel and returns entries in request order, deduped by
/// (q, n, k_Q) keeping the largest d. Rejected requests are kept as entries.
std::vector<CatalogEntry> scan(
    const ScanGrid &grid, const Budget &budget, const std::function<void(const CatalogEntry &)> &sink = {});

}  // namespace agq

#endif
