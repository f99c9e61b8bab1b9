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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "agq/catalog.h"
#include "agq/constructions.h"
#include "agq/error.h"
#include "agq/field.h"
#include "agq/matrix_io.h"

using namespace agq;

namespace {

struct ConstructArgs {
    std::string construction;
    uint32_t p = 0;
    uint32_t m = 1;
    uint32_t n = 0;
    uint32_t t = 0;
    uint32_t k = 0;
    std::vector<int64_t> leaders;
    std::string anchor;
    std::string c;
    std::string unit;
    std::string hcase = "i";
    std::string embed = "none";
    std::string out;
    bool distance = false;
    bool chain = false;
};

struct ScanArgs {
    std::string construction = "c1";
    std::vector<uint32_t> qs;
    std::vector<uint32_t> ns;
    std::vector<uint32_t> ts;
    std::vector<uint32_t> ks;
    std::string hcase = "i";
    std::string embed = "iterate";
    size_t threads = 0;
    std::string out;
};

bool timing = true;

void print(std::ostream &os, CatalogEntry e) {
    if (!timing) {
        e.seconds = 0;
    }
    os << e.to_json() << "\n";
}

std::optional<Elem> parse_elem(const Field &f, const std::string &token) {
    if (token.empty()) {
        return std::nullopt;
    }
    return f.parse(token);
}

std::optional<HermitianCase> parse_case(const std::string &s) {
    if (s == "i") {
        return HermitianCase::RootsOfUnity;
    }
    if (s == "ii") {
        return HermitianCase::CosetUnion;
    }
    if (s == "iii") {
        return HermitianCase::AffineGrid;
    }
    return std::nullopt;
}

std::optional<EmbedPolicy> parse_embed(const std::string &s) {
    for (EmbedPolicy p : {EmbedPolicy::None, EmbedPolicy::Once, EmbedPolicy::Iterate, EmbedPolicy::Deep}) {
        if (s == embed_policy_name(p)) {
            return p;
        }
    }
    return std::nullopt;
}

int cmd_construct(const ConstructArgs &a) {
    auto id = parse_construction(a.construction);
    auto hc = parse_case(a.hcase);
    auto embed = parse_embed(a.embed);
    if (!id || !hc || !embed) {
        std::cerr << "bad --construction, --case or --embed value\n";
        return 4;
    }
    ConstructionRequest req;
    req.id = *id;
    req.p = a.p;
    req.m = a.m;
    req.n = a.n;
    req.t = a.t;
    req.k = a.k;
    req.leaders = a.leaders;
    req.hermitian_case = *hc;
    req.embed = *embed;

    std::optional<Field> f;
    try {
        f = Field::build(a.p, a.m);
        req.anchor = parse_elem(*f, a.anchor);
        req.c = parse_elem(*f, a.c);
        req.unit_scalar = parse_elem(*f, a.unit);
    } catch (const Error &e) {
        CatalogEntry bad;
        bad.kind = "construct";
        bad.p = a.p;
        bad.m = a.m;
        bad.request = request_json(req);
        bad.reason = e.what();
        print(std::cout, bad);
        std::cerr << e.what() << "\n";
        return exit_code(bad);
    }

    ConstructOutcome o = run_construct(req, Budget::from_env(), a.distance);
    if (a.chain) {
        for (size_t i = 0; i + 1 < o.chain.size(); i++) {
            print(std::cout, o.chain[i]);
        }
    }
    print(std::cout, o.entry);
    if (o.entry.verdict != Verdict::Certified) {
        std::cerr << o.entry.reason << "\n";
    }
    if (o.code && !a.out.empty()) {
        std::ofstream file(a.out);
        file << write_matrix(*f, o.code->code.G);
    }
    return exit_code(o.entry);
}

int cmd_verify(const std::string &path, bool prefix, bool distance) {
    MatrixFile mf;
    try {
        mf = read_matrix_file(path, prefix);
    } catch (const Error &e) {
        std::cerr << e.what() << "\n";
        return e.kind == ErrorKind::ParseError ? 4 : 2;
    }
    CatalogEntry e = run_verify(mf.field, mf.G, Budget::from_env(), distance);
    e.request = verify_request_json(path, prefix);
    print(std::cout, e);
    if (e.verdict != Verdict::Certified) {
        std::cerr << e.reason << "\n";
    }
    return exit_code(e);
}

int cmd_export(const std::string &path, bool prefix, const std::string &out) {
    MatrixFile mf;
    try {
        mf = read_matrix_file(path, prefix);
    } catch (const Error &e) {
        std::cerr << e.what() << "\n";
        return e.kind == ErrorKind::ParseError ? 4 : 2;
    }
    std::string text = write_matrix(mf.field, mf.G);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream(out) << text;
    }
    return 0;
}

int cmd_scan(const ScanArgs &a) {
    auto id = parse_construction(a.construction);
    auto hc = parse_case(a.hcase);
    auto embed = parse_embed(a.embed);
    if (!id || !hc || !embed) {
        std::cerr << "bad --construction, --case or --embed value\n";
        return 4;
    }
    ScanGrid grid;
    grid.id = *id;
    grid.qs = a.qs;
    grid.ns = a.ns;
    grid.ts = a.ts;
    grid.ks = a.ks;
    grid.hermitian_case = *hc;
    grid.embed = *embed;
    grid.threads = a.threads;
    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out);
    }
    std::ostream &os = a.out.empty() ? std::cout : file;
    for (const CatalogEntry &e : scan(grid, Budget::from_env())) {
        print(os, e);
    }
    return 0;
}

int cmd_reproduce(const std::string &table, bool as_json) {
    std::vector<std::string> tables;
    if (table == "all") {
        tables = {"mds1", "mixed"};
    } else {
        tables = {table};
    }
    size_t counts[5] = {};
    try {
        for (const auto &t : tables) {
            reproduce(t, Budget::from_env(), [&](const CatalogEntry &e) {
                counts[(int)e.verdict]++;
                if (as_json) {
                    print(std::cout, e);
                } else {
                    std::cout << format_report_line(e) << std::endl;
                }
            });
        }
    } catch (const Error &e) {
        std::cerr << e.what() << "\n";
        return 4;
    }
    if (!as_json) {
        std::cout << "MATCH " << counts[(int)Verdict::Match] << ", UNMATCHED " << counts[(int)Verdict::Unmatched]
                  << ", SKIPPED " << counts[(int)Verdict::Skipped] << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Hermitian self-orthogonal AG codes and the quantum codes they give"};
    app.require_subcommand(1);
    app.add_flag("--no-timing", [](int64_t) { timing = false; }, "Write 0 for all timings");

    ConstructArgs ca;
    auto *construct = app.add_subcommand("construct", "Build and certify one code");
    auto *group = construct->add_option_group("construction");
    for (int i = 1; i <= 10; i++) {
        std::string name = "c" + std::to_string(i);
        group->add_flag_callback("--" + name, [&ca, name]() { ca.construction = name; }, "Construction " + name);
    }
    group->add_option("--construction", ca.construction, "Construction name, C1..C10");
    group->require_option(1);
    construct->add_option("--p", ca.p, "Characteristic")->required();
    construct->add_option("--m", ca.m, "q = p^m");
    construct->add_option("--n", ca.n, "Length or subgroup order");
    construct->add_option("--t", ca.t, "Cosets, grid rows or curve exponent");
    construct->add_option("--k", ca.k, "Pole bound k, G = (k-1)P");
    construct->add_option("--leaders", ca.leaders, "Coset leader exponents")->delimiter(',');
    construct->add_option("--anchor", ca.anchor, "Affine grid anchor, e.g. t^3");
    construct->add_option("--c", ca.c, "Elliptic constant");
    construct->add_option("--unit", ca.unit, "Unit scalar of the twist");
    construct->add_option("--case", ca.hcase, "Point set for C6/C7: i, ii or iii");
    construct->add_option("--embed", ca.embed, "none, once, iterate or deep");
    construct->add_option("--out", ca.out, "Write the generator matrix here");
    construct->add_flag("--distance", ca.distance, "Enumerate the classical minimum distance");
    construct->add_flag("--chain", ca.chain, "Print every code of the embedding chain");

    std::string verify_path;
    bool verify_prefix = false;
    bool verify_distance = false;
    auto *verify = app.add_subcommand("verify", "Certify a generator matrix file");
    verify->add_option("file", verify_path)->required();
    verify->add_flag("--systematic-prefix", verify_prefix, "Rows omit the leading identity block");
    verify->add_flag("--distance", verify_distance, "Enumerate the classical minimum distance");

    ScanArgs sa;
    auto *scan_cmd = app.add_subcommand("scan", "Sweep a parameter grid into a catalog");
    scan_cmd->add_option("--construction", sa.construction, "Construction name, C1..C10");
    scan_cmd->add_option("--q", sa.qs, "Values of q")->delimiter(',');
    scan_cmd->add_option("--n", sa.ns, "Values of n")->delimiter(',');
    scan_cmd->add_option("--t", sa.ts, "Values of t")->delimiter(',');
    scan_cmd->add_option("--k", sa.ks, "Values of k")->delimiter(',');
    scan_cmd->add_option("--case", sa.hcase, "Point set for C6/C7");
    scan_cmd->add_option("--embed", sa.embed, "none, once, iterate or deep");
    scan_cmd->add_option("--threads", sa.threads, "Worker threads, 0 for all cores");
    scan_cmd->add_option("--out", sa.out, "Catalog file, stdout by default");

    std::string table;
    bool repro_json = false;
    auto *repro = app.add_subcommand("reproduce", "Rerun the pinned recipes of a parameter table");
    repro->add_option("table", table, "mds1, mixed or all")->required();
    repro->add_flag("--json", repro_json, "Catalog lines instead of the report");

    std::string export_path;
    std::string export_out;
    bool export_prefix = false;
    auto *exp = app.add_subcommand("export", "Rewrite a matrix file in canonical form");
    exp->add_option("file", export_path)->required();
    exp->add_option("--out", export_out, "Output file, stdout by default");
    exp->add_flag("--systematic-prefix", export_prefix, "Rows omit the leading identity block");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 4;
    }

    if (*construct) {
        return cmd_construct(ca);
    }
    if (*verify) {
        return cmd_verify(verify_path, verify_prefix, verify_distance);
    }
    if (*scan_cmd) {
        return cmd_scan(sa);
    }
    if (*repro) {
        return cmd_reproduce(table, repro_json);
    }
    return cmd_export(export_path, export_prefix, export_out);
}
