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

#include <gtest/gtest.h>

#include "json.hpp"

using namespace agq;
using json = nlohmann::json;

TEST(catalog, parse_expected_forms) {
    auto a = parse_expected("[[25,11,8]]_13");
    ASSERT_TRUE(a.has_value());
    ASSERT_EQ(a->n, 25u);
    ASSERT_EQ(a->k, 11u);
    ASSERT_EQ(a->d, 8u);
    ASSERT_EQ(a->q, 13u);
    ASSERT_FALSE(a->at_least);

    auto b = parse_expected("[[65,49,≥5]]_5");
    ASSERT_TRUE(b.has_value());
    ASSERT_TRUE(b->at_least);

    auto c = parse_expected("[80,8,72]_{2^6}");
    ASSERT_TRUE(c.has_value());
    ASSERT_EQ(c->q, 64u);

    auto d = parse_expected("[[288,228,30]]_{2^4}");
    ASSERT_TRUE(d.has_value());
    ASSERT_EQ(d->q, 16u);

    ASSERT_FALSE(parse_expected("[[25,11,8]_13").has_value());
    ASSERT_FALSE(parse_expected("25,11,8").has_value());
}

TEST(catalog, prime_power) {
    ASSERT_EQ(prime_power(16), (std::pair<uint32_t, uint32_t>{2, 4}));
    ASSERT_EQ(prime_power(13), (std::pair<uint32_t, uint32_t>{13, 1}));
    ASSERT_FALSE(prime_power(12).has_value());
    ASSERT_FALSE(prime_power(1).has_value());
}

TEST(catalog, exit_codes) {
    CatalogEntry e;
    e.verdict = Verdict::Certified;
    ASSERT_EQ(exit_code(e), 0);
    e.verdict = Verdict::Match;
    ASSERT_EQ(exit_code(e), 0);
    e.verdict = Verdict::Rejected;
    e.reason = "GramNonzero: entry (1,4) = 1";
    ASSERT_EQ(exit_code(e), 2);
    e.reason = "CapExceeded: too many";
    ASSERT_EQ(exit_code(e), 3);
    e.reason = "ParseError: line 1";
    ASSERT_EQ(exit_code(e), 4);
    e.verdict = Verdict::Skipped;
    ASSERT_EQ(exit_code(e), 3);
    e.verdict = Verdict::Unmatched;
    ASSERT_EQ(exit_code(e), 2);
}

TEST(catalog, construct_entry_json) {
    ConstructionRequest req;
    req.id = ConstructionId::C1;
    req.p = 13;
    req.n = 25;
    req.embed = EmbedPolicy::Deep;
    ConstructOutcome o = run_construct(req, Budget{});
    ASSERT_EQ(o.entry.verdict, Verdict::Certified);
    ASSERT_EQ(o.chain.size(), 2u);
    json j = json::parse(o.entry.to_json());
    ASSERT_EQ(j["verdict"], "CERTIFIED");
    ASSERT_EQ(j["quantum"]["str"], "[[25,11,8]]_13");
    ASSERT_EQ(j["quantum"]["d"], 8);
    ASSERT_EQ(j["quantum"]["mds"], true);
    ASSERT_EQ(j["quantum"]["defect"], 0);
    ASSERT_EQ(j["quantum"]["d_method"], "mds-certificate");
    ASSERT_EQ(j["certificates"]["gram_zero"], true);
    ASSERT_EQ(j["certificates"]["mds"]["method"], "minors");
    ASSERT_EQ(j["request"]["construction"], "C1");
    ASSERT_EQ(exit_code(o.entry), 0);
}

TEST(catalog, rejected_entry) {
    ConstructionRequest req;
    req.id = ConstructionId::C1;
    req.p = 11;
    req.n = 16;
    req.k = 5;
    ConstructOutcome o = run_construct(req, Budget{});
    ASSERT_EQ(o.entry.verdict, Verdict::Rejected);
    ASSERT_EQ(o.entry.q, 11u);
    ASSERT_NE(o.entry.reason.find("GramNonzero"), std::string::npos);
    ASSERT_EQ(exit_code(o.entry), 2);
    json j = json::parse(o.entry.to_json());
    ASSERT_TRUE(j["quantum"].is_null());
}

TEST(catalog, verify_identity_rejected) {
    Field f = Field::build(3, 1);
    CatalogEntry e = run_verify(f, identity_matrix(2), Budget{});
    ASSERT_EQ(e.verdict, Verdict::Rejected);
    ASSERT_FALSE(e.gram_zero);
    ASSERT_EQ(exit_code(e), 2);
}

TEST(catalog, scan_elliptic) {
    ScanGrid grid;
    grid.id = ConstructionId::C5;
    grid.qs = {4, 8};
    grid.embed = EmbedPolicy::None;
    auto entries = scan(grid, Budget{});
    size_t assumption = 0;
    bool saw24 = false;
    bool saw80 = false;
    for (const auto &e : entries) {
        if (e.kind == "assumption1") {
            assumption++;
            ASSERT_EQ(e.verdict, Verdict::Certified);
            continue;
        }
        ASSERT_EQ(e.verdict, Verdict::Certified) << e.reason;
        if (e.q == 4 && e.n == 24 && e.k == 4) {
            saw24 = true;
            ASSERT_EQ(e.d, 20u);
        }
        if (e.q == 8 && e.n == 80 && e.k == 8) {
            saw80 = true;
        }
    }
    ASSERT_EQ(assumption, 2u);
    ASSERT_TRUE(saw24);
    ASSERT_TRUE(saw80);
}

TEST(catalog, scan_c1_q5_includes_n9) {
    ScanGrid grid;
    grid.id = ConstructionId::C1;
    grid.qs = {5};
    grid.embed = EmbedPolicy::Iterate;
    auto entries = scan(grid, Budget{});
    bool found = false;
    for (const auto &e : entries) {
        if (e.quantum && e.quantum->str() == "[[9,3,4]]_5") {
            found = true;
        }
    }
    ASSERT_TRUE(found);
}

TEST(catalog, scan_empty_grid) {
    ScanGrid grid;
    ASSERT_TRUE(scan(grid, Budget{}).empty());
}

TEST(catalog, scan_is_deterministic) {
    ScanGrid grid;
    grid.id = ConstructionId::C1;
    grid.qs = {5, 7};
    grid.threads = 4;
    auto dump = [&]() {
        std::string s;
        for (auto e : scan(grid, Budget{})) {
            e.seconds = 0;
            s += e.to_json() + "\n";
        }
        return s;
    };
    ASSERT_EQ(dump(), dump());
}

TEST(catalog, repro_targets_parse) {
    for (const char *table : {"mds1", "mixed"}) {
        auto targets = repro_targets(table);
        ASSERT_FALSE(targets.empty());
        for (const auto &t : targets) {
            ASSERT_TRUE(parse_expected(t.expected).has_value()) << t.expected;
        }
    }
}

TEST(catalog, reproduce_selected_rows) {
    for (const auto &t : repro_targets("mds1")) {
        if (t.expected == "[[21,13,5]]_7" || t.expected == "[[9,3,4]]_5") {
            CatalogEntry e = reproduce_row(t, Budget{});
            ASSERT_EQ(e.verdict, Verdict::Match) << format_report_line(e);
        }
    }
    for (const auto &t : repro_targets("mixed")) {
        if (t.expected == "[[20,12,4]]_4") {
            CatalogEntry e = reproduce_row(t, Budget{});
            ASSERT_EQ(e.verdict, Verdict::Unmatched);
            ASSERT_EQ(e.computed, "[[24,16,4]]_4");
            ASSERT_NE(format_report_line(e).find("UNMATCHED("), std::string::npos);
        }
    }
}
