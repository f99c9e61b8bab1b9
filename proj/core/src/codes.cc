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

#include "agq/codes.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "agq/error.h"

using namespace agq;

uint64_t agq::binomial(uint64_t n, uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (uint64_t i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) {
            return UINT64_MAX;
        }
    }
    return (uint64_t)r;
}

Budget Budget::from_env() {
    Budget b;
    if (const char *env = std::getenv("AGQ_CAP_OPS")) {
        uint64_t v = std::strtoull(env, nullptr, 10);
        if (v) {
            b.max_ops = v;
        }
    }
    if (const char *env = std::getenv("AGQ_CAP_CODEWORDS")) {
        uint64_t v = std::strtoull(env, nullptr, 10);
        if (v) {
            b.max_codewords = v;
        }
    }
    return b;
}

Matrix agq::identity_matrix(size_t k) {
    Matrix m(k, k);
    for (size_t i = 0; i < k; i++) {
        m.at(i, i) = ONE;
    }
    return m;
}

Matrix agq::hstack(const Matrix &a, const Matrix &b) {
    if (a.rows != b.rows) {
        throw Error(ErrorKind::InvalidArgument, "hstack needs equal row counts");
    }
    Matrix m(a.rows, a.cols + b.cols);
    for (size_t r = 0; r < a.rows; r++) {
        std::copy(a.row(r), a.row(r) + a.cols, m.row(r));
        std::copy(b.row(r), b.row(r) + b.cols, m.row(r) + a.cols);
    }
    return m;
}

Matrix agq::column_subset(const Matrix &m, const std::vector<size_t> &cols) {
    Matrix out(m.rows, cols.size());
    for (size_t r = 0; r < m.rows; r++) {
        for (size_t c = 0; c < cols.size(); c++) {
            out.at(r, c) = m.at(r, cols[c]);
        }
    }
    return out;
}

Matrix agq::frobenius(const Field &f, const Matrix &m) {
    Matrix out = m;
    for (auto &x : out.data) {
        x = f.frobenius(x);
    }
    return out;
}

std::vector<size_t> agq::rref(const Field &f, Matrix &m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; c++) {
        size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == ZERO) {
            piv++;
        }
        if (piv == m.rows) {
            continue;
        }
        if (piv != r) {
            std::swap_ranges(m.row(piv), m.row(piv) + m.cols, m.row(r));
        }
        Elem s = f.inv(m.at(r, c));
        for (size_t j = c; j < m.cols; j++) {
            m.at(r, j) = f.mul(m.at(r, j), s);
        }
        for (size_t i = 0; i < m.rows; i++) {
            Elem factor = m.at(i, c);
            if (i == r || factor == ZERO) {
                continue;
            }
            Elem nf = f.neg(factor);
            for (size_t j = c; j < m.cols; j++) {
                m.at(i, j) = f.add(m.at(i, j), f.mul(nf, m.at(r, j)));
            }
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

size_t agq::rank(const Field &f, Matrix m) {
    return rref(f, m).size();
}

bool agq::same_row_space(const Field &f, const Matrix &a, const Matrix &b) {
    if (a.cols != b.cols) {
        return false;
    }
    Matrix ra = a;
    Matrix rb = b;
    size_t ka = rref(f, ra).size();
    size_t kb = rref(f, rb).size();
    if (ka != kb) {
        return false;
    }
    return std::equal(ra.data.begin(), ra.data.begin() + ka * a.cols, rb.data.begin());
}

LinearCode agq::make_code(const Field &f, Matrix G, std::string provenance) {
    size_t r = rank(f, G);
    if (r != G.rows) {
        throw Error(
            ErrorKind::RankDefect,
            "generator has rank " + std::to_string(r) + " but " + std::to_string(G.rows) + " rows");
    }
    return LinearCode{std::move(G), std::move(provenance)};
}

LinearCode agq::evaluation_code(
    const Field &f,
    const MonomialBasis &basis,
    const std::vector<CurvePoint> &points,
    const std::vector<Elem> &twist,
    std::string provenance) {
    if (twist.size() != points.size()) {
        throw Error(ErrorKind::InvalidArgument, "twist and point counts differ");
    }
    Matrix G(basis.size(), points.size());
    for (size_t r = 0; r < basis.size(); r++) {
        for (size_t l = 0; l < points.size(); l++) {
            G.at(r, l) = f.mul(twist[l], evaluate(f, basis[r], points[l]));
        }
    }
    return make_code(f, std::move(G), std::move(provenance));
}

Elem agq::hermitian_product(const Field &f, const Elem *a, const Elem *b, size_t n) {
    Elem acc = ZERO;
    for (size_t l = 0; l < n; l++) {
        acc = f.add(acc, f.mul(a[l], f.frobenius(b[l])));
    }
    return acc;
}

GramCertificate agq::hermitian_gram(const Field &f, const LinearCode &code) {
    const Matrix &G = code.G;
    Matrix Gq = frobenius(f, G);
    GramCertificate cert;
    cert.M = Matrix(G.rows, G.rows);
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t v) {
        for (int b = 0; b < 8; b++) {
            h ^= (v >> (8 * b)) & 0xFF;
            h *= 1099511628211ull;
        }
    };
    mix(G.rows);
    mix(G.cols);
    for (size_t i = 0; i < G.rows; i++) {
        for (size_t j = 0; j < G.rows; j++) {
            Elem acc = ZERO;
            const Elem *a = G.row(i);
            const Elem *b = Gq.row(j);
            for (size_t l = 0; l < G.cols; l++) {
                acc = f.add(acc, f.mul(a[l], b[l]));
            }
            cert.M.at(i, j) = acc;
            mix(acc);
            if (acc != ZERO && cert.all_zero) {
                cert.all_zero = false;
                cert.bad_row = i;
                cert.bad_col = j;
                cert.bad_value = acc;
            }
        }
    }
    cert.digest = h;
    return cert;
}

std::string GramCertificate::digest_hex() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)digest);
    return buf;
}

std::string GramCertificate::describe(const Field &f) const {
    if (all_zero) {
        return "all zero";
    }
    return "entry (" + std::to_string(bad_row) + "," + std::to_string(bad_col) + ") = " + f.format(bad_value);
}

LinearCode agq::dual(const Field &f, const LinearCode &code, DualKind kind) {
    Matrix R = kind == DualKind::Hermitian ? frobenius(f, code.G) : code.G;
    auto piv = rref(f, R);
    size_t n = R.cols;
    std::vector<bool> is_pivot(n, false);
    for (size_t c : piv) {
        is_pivot[c] = true;
    }
    Matrix H(n - piv.size(), n);
    size_t t = 0;
    for (size_t c = 0; c < n; c++) {
        if (is_pivot[c]) {
            continue;
        }
        H.at(t, c) = ONE;
        for (size_t i = 0; i < piv.size(); i++) {
            H.at(t, piv[i]) = f.neg(R.at(i, c));
        }
        t++;
    }
    return LinearCode{std::move(H), kind == DualKind::Hermitian ? "hermitian-dual" : "euclidean-dual"};
}

DistanceResult agq::exhaustive_distance(const Field &f, const LinearCode &code, const Budget &budget) {
    size_t n = code.n();
    size_t k = code.k();
    DistanceResult res;
    res.method = "exhaustive";
    if (k == 0) {
        res.d = n + 1;
        res.exact = true;
        res.degenerate = true;
        return res;
    }
    uint64_t Q = f.size();
    unsigned __int128 messages = 0;
    unsigned __int128 pw = 1;
    for (size_t i = 0; i < k; i++) {
        messages += pw;
        pw *= Q;
        if (messages > budget.max_codewords) {
            throw Error(ErrorKind::CapExceeded, "exhaustive enumeration over the codeword cap");
        }
    }
    if (messages * 2 * n > budget.max_ops) {
        throw Error(ErrorKind::CapExceeded, "exhaustive enumeration over the operation cap");
    }

    res.d = n + 1;
    std::vector<Elem> cw(n);
    for (size_t lead = 0; lead < k; lead++) {
        std::copy(code.G.row(lead), code.G.row(lead) + n, cw.begin());
        size_t len = k - 1 - lead;
        std::vector<uint32_t> digit(len, 0);
        auto value = [](uint32_t t) { return t == 0 ? ZERO : (Elem)(t - 1); };
        while (true) {
            size_t w = 0;
            for (Elem x : cw) {
                w += x != ZERO;
            }
            res.ops += n;
            if (w < res.d) {
                res.d = w;
                res.codeword = cw;
            }
            size_t pos = 0;
            while (pos < len) {
                Elem old = value(digit[pos]);
                digit[pos] = digit[pos] + 1 == Q ? 0 : digit[pos] + 1;
                Elem delta = f.sub(value(digit[pos]), old);
                const Elem *row = code.G.row(lead + 1 + pos);
                for (size_t l = 0; l < n; l++) {
                    cw[l] = f.add(cw[l], f.mul(delta, row[l]));
                }
                res.ops += n;
                if (digit[pos] != 0) {
                    break;
                }
                pos++;
            }
            if (pos == len) {
                break;
            }
        }
    }
    for (size_t l = 0; l < n; l++) {
        if (res.codeword[l] != ZERO) {
            res.columns.push_back(l);
        }
    }
    res.exact = true;
    return res;
}

namespace {

// Incremental column echelon basis for subset searches.
struct ColumnBasis {
    const Field &f;
    const Matrix &G;
    size_t k;
    std::vector<Elem> vecs;
    std::vector<size_t> pivots;
    std::vector<Elem> scratch;
    uint64_t ops = 0;

    ColumnBasis(const Field &f, const Matrix &G, size_t depth) : f(f), G(G), k(G.rows), vecs(depth * G.rows), pivots(depth), scratch(G.rows) {
    }

    // Reduces column c against the first `depth` stored vectors. Returns the
    // pivot of the remainder or k when the column lies in their span.
    size_t reduce(size_t c, size_t depth) {
        for (size_t r = 0; r < k; r++) {
            scratch[r] = G.at(r, c);
        }
        for (size_t d = 0; d < depth; d++) {
            Elem coef = scratch[pivots[d]];
            if (coef == ZERO) {
                continue;
            }
            Elem nc = f.neg(coef);
            const Elem *b = &vecs[d * k];
            for (size_t r = 0; r < k; r++) {
                if (b[r] != ZERO) {
                    scratch[r] = f.add(scratch[r], f.mul(nc, b[r]));
                }
            }
            ops += k;
        }
        ops += k;
        for (size_t r = 0; r < k; r++) {
            if (scratch[r] != ZERO) {
                return r;
            }
        }
        return k;
    }

    void store(size_t depth, size_t pivot) {
        Elem s = f.inv(scratch[pivot]);
        Elem *b = &vecs[depth * k];
        for (size_t r = 0; r < k; r++) {
            b[r] = f.mul(scratch[r], s);
        }
        pivots[depth] = pivot;
    }
};

// Searches w-subsets whose last column lies in the span of the others.
bool find_dependent(ColumnBasis &cb, size_t n, size_t w, std::vector<size_t> &chosen, const Budget &budget) {
    std::function<bool(size_t, size_t)> dfs = [&](size_t depth, size_t start) -> bool {
        for (size_t c = start; c + (w - depth) <= n; c++) {
            size_t piv = cb.reduce(c, depth);
            if (cb.ops > budget.max_ops) {
                throw Error(ErrorKind::CapExceeded, "column-dependence search over the operation cap");
            }
            if (piv == cb.k) {
                if (depth + 1 == w) {
                    chosen[depth] = c;
                    return true;
                }
                continue;
            }
            if (depth + 1 == w) {
                continue;
            }
            cb.store(depth, piv);
            chosen[depth] = c;
            if (dfs(depth + 1, c + 1)) {
                return true;
            }
        }
        return false;
    };
    return dfs(0, 0);
}

}  // namespace

DistanceResult agq::dual_distance_by_columns(
    const Field &f, const LinearCode &code, size_t d_max, const Budget &budget, bool bound_on_cap) {
    size_t n = code.n();
    size_t k = code.k();
    DistanceResult res;
    res.method = "dual-by-columns";
    d_max = std::min(d_max, k + 1);
    ColumnBasis cb(f, code.G, std::max<size_t>(d_max, 1));
    for (size_t w = 1; w <= d_max && w <= n; w++) {
        std::vector<size_t> chosen(w);
        bool found;
        try {
            found = find_dependent(cb, n, w, chosen, budget);
        } catch (const Error &e) {
            if (!bound_on_cap || e.kind != ErrorKind::CapExceeded) {
                throw;
            }
            res.d = w;
            res.exact = false;
            res.method = "dual-by-columns-capped";
            res.ops = cb.ops;
            return res;
        }
        if (found) {
            res.d = w;
            res.exact = true;
            res.columns = chosen;
            res.ops = cb.ops;
            return res;
        }
    }
    res.ops = cb.ops;
    if (d_max >= n) {
        // All columns independent: the dual is the zero code.
        res.d = n + 1;
        res.exact = true;
        res.degenerate = true;
        return res;
    }
    res.d = d_max + 1;
    res.exact = false;
    return res;
}

MdsResult agq::is_mds_by_minors(const Field &f, const LinearCode &code, const Budget &budget) {
    size_t n = code.n();
    size_t k = code.k();
    MdsResult res;
    res.method = "minors";
    if (k == 0 || k >= n) {
        res.mds = true;
        res.method = "trivial";
        return res;
    }
    ColumnBasis cb(f, code.G, k);
    std::vector<size_t> chosen(k);
    bool singular = false;
    std::function<bool(size_t, size_t)> dfs = [&](size_t depth, size_t start) -> bool {
        for (size_t c = start; c + (k - depth) <= n; c++) {
            size_t piv = cb.reduce(c, depth);
            if (cb.ops > budget.max_ops) {
                throw Error(ErrorKind::CapExceeded, "minor enumeration over the operation cap");
            }
            chosen[depth] = c;
            if (piv == k) {
                singular = true;
                // Pad the dependent prefix to a k-subset.
                std::vector<size_t> w(chosen.begin(), chosen.begin() + depth + 1);
                for (size_t x = 0; x < n && w.size() < k; x++) {
                    if (std::find(w.begin(), w.end(), x) == w.end()) {
                        w.push_back(x);
                    }
                }
                std::sort(w.begin(), w.end());
                res.witness = w;
                return true;
            }
            if (depth + 1 == k) {
                res.checks++;
                continue;
            }
            cb.store(depth, piv);
            if (dfs(depth + 1, c + 1)) {
                return true;
            }
        }
        return false;
    };
    dfs(0, 0);
    res.mds = !singular;
    return res;
}

std::optional<MdsResult> agq::mds_by_cauchy_form(const Field &f, const LinearCode &code) {
    size_t n = code.n();
    size_t k = code.k();
    MdsResult res;
    res.method = "cauchy";
    Matrix R = code.G;
    auto piv = rref(f, R);
    for (size_t i = 0; i < k; i++) {
        if (i >= piv.size() || piv[i] != i) {
            res.mds = false;
            for (size_t c = 0; c < k; c++) {
                res.witness.push_back(c);
            }
            return res;
        }
    }
    size_t r = n - k;
    if (k == 0 || r == 0) {
        res.mds = true;
        res.method = "trivial";
        return res;
    }
    auto A = [&](size_t i, size_t j) { return R.at(i, k + j); };
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < r; j++) {
            res.checks++;
            if (A(i, j) == ZERO) {
                res.mds = false;
                for (size_t c = 0; c < k; c++) {
                    if (c != i) {
                        res.witness.push_back(c);
                    }
                }
                res.witness.push_back(k + j);
                return res;
            }
        }
    }
    if (k == 1 || r == 1) {
        res.mds = true;
        res.method = "nonzero-entries";
        return res;
    }

    // Look for a[i][j] = c_i d_j / (x_i - y_j) normalised to y_0 = 0, x_0 = 1,
    // d_0 = 1. The one remaining free value x_1 is searched over the field.
    Matrix B(k, r);
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < r; j++) {
            B.at(i, j) = f.inv(A(i, j));
        }
    }
    auto K = [&](size_t i, size_t j) {
        return f.div(f.mul(B.at(i, j), B.at(0, 0)), f.mul(B.at(i, 0), B.at(0, j)));
    };
    std::vector<Elem> x(k), y(r), c(k), d(r);
    for (Elem x1 : f.elements()) {
        if (x1 == ZERO || x1 == ONE) {
            continue;
        }
        res.checks++;
        x[0] = ONE;
        x[1] = x1;
        y[0] = ZERO;
        bool ok = true;
        for (size_t j = 1; j < r && ok; j++) {
            Elem kk = K(1, j);
            Elem den = f.sub(ONE, f.mul(kk, x1));
            if (den == ZERO) {
                ok = false;
                break;
            }
            y[j] = f.div(f.mul(x1, f.sub(ONE, kk)), den);
        }
        for (size_t i = 2; i < k && ok; i++) {
            Elem den = f.sub(ONE, f.mul(K(i, 1), f.sub(ONE, y[1])));
            if (den == ZERO) {
                ok = false;
                break;
            }
            x[i] = f.div(y[1], den);
        }
        if (!ok) {
            continue;
        }
        std::vector<Elem> all = x;
        all.insert(all.end(), y.begin(), y.end());
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
            continue;
        }
        for (size_t i = 0; i < k; i++) {
            c[i] = f.div(x[i], B.at(i, 0));
        }
        for (size_t j = 0; j < r; j++) {
            d[j] = f.div(f.mul(B.at(0, 0), f.sub(ONE, y[j])), B.at(0, j));
        }
        for (size_t i = 0; i < k && ok; i++) {
            for (size_t j = 0; j < r; j++) {
                if (f.mul(A(i, j), f.sub(x[i], y[j])) != f.mul(c[i], d[j])) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            res.mds = true;
            return res;
        }
    }
    return std::nullopt;
}

MdsResult agq::is_mds(const Field &f, const LinearCode &code, const Budget &budget) {
    size_t n = code.n();
    size_t k = code.k();
    uint64_t subsets = binomial(n, k);
    unsigned __int128 estimate = (unsigned __int128)subsets * k * k;
    if (estimate <= budget.max_ops) {
        return is_mds_by_minors(f, code, budget);
    }
    auto cert = mds_by_cauchy_form(f, code);
    if (!cert.has_value()) {
        throw Error(
            ErrorKind::CapExceeded,
            "C(" + std::to_string(n) + "," + std::to_string(k) + ") minors over the cap and no Cauchy form found");
    }
    return *cert;
}
