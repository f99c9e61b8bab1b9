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

#include "agq/matrix_io.h"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "agq/error.h"

using namespace agq;

namespace {

[[noreturn]] void parse_fail(size_t line, size_t col, const std::string &msg) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

struct Token {
    std::string text;
    size_t col;
};

std::vector<Token> split(const std::string &s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace((unsigned char)s[i])) {
            i++;
        }
        size_t start = i;
        while (i < s.size() && !std::isspace((unsigned char)s[i])) {
            i++;
        }
        if (i > start) {
            out.push_back(Token{s.substr(start, i - start), start + 1});
        }
    }
    return out;
}

uint64_t header_number(const Token &tok, const std::string &key, size_t line) {
    std::string prefix = key + "=";
    if (tok.text.rfind(prefix, 0) != 0) {
        parse_fail(line, tok.col, "expected " + prefix);
    }
    std::string v = tok.text.substr(prefix.size());
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
        parse_fail(line, tok.col, "bad number in " + tok.text);
    }
    return std::stoull(v);
}

}  // namespace

MatrixFile agq::read_matrix(std::istream &in, bool systematic_prefix) {
    std::string text;
    size_t line_no = 0;
    std::vector<Token> header;
    while (std::getline(in, text)) {
        line_no++;
        header = split(text);
        if (!header.empty()) {
            break;
        }
    }
    if (header.size() != 3) {
        parse_fail(line_no, 1, "header must be 'q2=<p>^<2m> n=<n> k=<k>'");
    }
    const Token &qt = header[0];
    size_t caret = qt.text.find('^');
    if (qt.text.rfind("q2=", 0) != 0 || caret == std::string::npos) {
        parse_fail(line_no, qt.col, "expected q2=<p>^<2m>");
    }
    std::string ps = qt.text.substr(3, caret - 3);
    std::string es = qt.text.substr(caret + 1);
    if (ps.empty() || es.empty() || ps.find_first_not_of("0123456789") != std::string::npos ||
        es.find_first_not_of("0123456789") != std::string::npos) {
        parse_fail(line_no, qt.col, "bad field size " + qt.text);
    }
    uint64_t p = std::stoull(ps);
    uint64_t e = std::stoull(es);
    if (e == 0 || e % 2 != 0) {
        parse_fail(line_no, qt.col, "field exponent must be even");
    }
    uint64_t n = header_number(header[1], "n", line_no);
    uint64_t k = header_number(header[2], "k", line_no);
    if (k > n) {
        parse_fail(line_no, header[2].col, "k exceeds n");
    }

    MatrixFile mf{Field::build((uint32_t)p, (uint32_t)(e / 2)), Matrix(k, n)};
    size_t width = systematic_prefix ? n - k : n;
    size_t offset = systematic_prefix ? k : 0;
    size_t r = 0;
    while (std::getline(in, text)) {
        line_no++;
        auto toks = split(text);
        if (toks.empty()) {
            continue;
        }
        if (r == k) {
            parse_fail(line_no, toks[0].col, "more than k = " + std::to_string(k) + " rows");
        }
        if (toks.size() != width) {
            parse_fail(
                line_no, toks[0].col,
                "expected " + std::to_string(width) + " entries, found " + std::to_string(toks.size()));
        }
        for (size_t c = 0; c < width; c++) {
            try {
                mf.G.at(r, offset + c) = mf.field.parse(toks[c].text);
            } catch (const Error &err) {
                parse_fail(line_no, toks[c].col, err.what());
            }
        }
        if (systematic_prefix) {
            mf.G.at(r, r) = ONE;
        }
        r++;
    }
    if (r != k) {
        parse_fail(line_no + 1, 1, "expected " + std::to_string(k) + " rows, found " + std::to_string(r));
    }
    return mf;
}

MatrixFile agq::read_matrix_file(const std::string &path, bool systematic_prefix) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    }
    return read_matrix(in, systematic_prefix);
}

std::string agq::write_matrix(const Field &f, const Matrix &G) {
    std::ostringstream out;
    out << "q2=" << f.p() << "^" << 2 * f.m() << " n=" << G.cols << " k=" << G.rows << "\n";
    for (size_t r = 0; r < G.rows; r++) {
        for (size_t c = 0; c < G.cols; c++) {
            if (c) {
                out << ' ';
            }
            Elem e = G.at(r, c);
            if (e != ZERO && e != ONE && f.in_prime_field(e)) {
                out << f.to_index(e);
            } else {
                out << f.format(e);
            }
        }
        out << "\n";
    }
    return out.str();
}
