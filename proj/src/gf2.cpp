#include "pir/gf2.hpp"

#include <algorithm>
#include <sstream>

namespace pir {

Point canonical_key(Point p, int s) {
    Point r = 0;
    for (int i = 0; i < s; ++i)
        if ((p >> i) & 1) r |= Point(1) << (s - 1 - i);
    return r;
}

ParseReport parse_matrix(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string row;
        for (char c : line) {
            if (c == '0' || c == '1')
                row.push_back(c);
            else if (c != ' ' && c != '\t' && c != '\r')
                throw parse_error("unexpected character in matrix text");
        }
        if (!row.empty()) rows.push_back(row);
    }
    if (rows.empty()) throw parse_error("empty matrix text");
    const std::size_t n = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw parse_error("ragged rows in matrix text");
    const int s = static_cast<int>(rows.size());
    if (s > 32) throw budget_error("dimension exceeds 32 rows");

    GeneratorMatrix g;
    g.s = s;
    g.n = static_cast<int>(n);
    g.cols.assign(n, 0);
    for (int i = 0; i < s; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rows[i][j] == '1') g.cols[j] |= Point(1) << i;

    ParseReport rep;
    rep.rank = gf2_rank(g.cols);
    for (Point c : g.cols)
        if (c) ++rep.effective_length;
    rep.matrix = std::move(g);
    return rep;
}

std::string write_matrix(const GeneratorMatrix& g) {
    std::string out;
    for (int i = 0; i < g.s; ++i) {
        for (int j = 0; j < g.n; ++j) out.push_back(((g.cols[j] >> i) & 1) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

int gf2_rank(const std::vector<Point>& vecs) {
    std::vector<Point> basis;
    for (Point v : vecs) {
        for (Point b : basis) v = std::min(v, v ^ b);
        if (v) basis.push_back(v);
    }
    return static_cast<int>(basis.size());
}

PointMultiset matrix_to_multiset(const GeneratorMatrix& g) {
    PointMultiset p;
    p.s = g.s;
    p.n = g.n;
    for (Point c : g.cols) {
        if (!c) throw std::runtime_error("zero column has no point");
        ++p.mult[c];
    }
    return p;
}

GeneratorMatrix multiset_to_matrix(const PointMultiset& p) {
    std::vector<Point> support;
    for (const auto& [pt, m] : p.mult) {
        if (!pt || m < 0) throw std::runtime_error("invalid multiset entry");
        if (m > 0) support.push_back(pt);
    }
    if (gf2_rank(support) < p.s) throw std::runtime_error("multiset support is rank-deficient");
    std::sort(support.begin(), support.end(),
              [&](Point a, Point b) { return canonical_key(a, p.s) < canonical_key(b, p.s); });
    GeneratorMatrix g;
    g.s = p.s;
    for (Point pt : support)
        for (int m = 0; m < p.mult.at(pt); ++m) g.cols.push_back(pt);
    g.n = static_cast<int>(g.cols.size());
    return g;
}

namespace {

// Rows as n-bit masks packed into 64-bit words; codeword weights by Gray-code walk.
struct RowMasks {
    int s, n, words;
    std::vector<std::uint64_t> rows;  // s * words

    explicit RowMasks(const GeneratorMatrix& g)
        : s(g.s), n(g.n), words((g.n + 63) / 64), rows(std::size_t(g.s) * words, 0) {
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < s; ++i)
                if ((g.cols[j] >> i) & 1) rows[std::size_t(i) * words + j / 64] |= 1ull << (j % 64);
    }
};

template <typename F>
void walk_codewords(const RowMasks& rm, F&& visit) {
    std::vector<std::uint64_t> cw(rm.words, 0);
    visit(0);
    const std::uint64_t total = 1ull << rm.s;
    for (std::uint64_t t = 1; t < total; ++t) {
        const int bit = __builtin_ctzll(t);  // Gray-code flip position
        const std::uint64_t* row = &rm.rows[std::size_t(bit) * rm.words];
        int w = 0;
        for (int q = 0; q < rm.words; ++q) {
            cw[q] ^= row[q];
            w += __builtin_popcountll(cw[q]);
        }
        visit(w);
    }
}

}  // namespace

int min_distance(const GeneratorMatrix& g) {
    if (g.s > 28) throw budget_error("min_distance enumeration limited to s <= 28");
    RowMasks rm(g);
    int best = g.n + 1;
    bool first = true;
    walk_codewords(rm, [&](int w) {
        if (first) {
            first = false;  // zero codeword
            return;
        }
        best = std::min(best, w);
    });
    if (best > g.n) throw std::runtime_error("code has no nonzero codeword");
    return best;
}

WeightDistribution weight_distribution(const GeneratorMatrix& g) {
    if (g.s > 28) throw budget_error("weight enumeration limited to s <= 28");
    WeightDistribution wd;
    wd.counts.assign(g.n + 1, 0);
    RowMasks rm(g);
    walk_codewords(rm, [&](int w) { ++wd.counts[w]; });
    return wd;
}

namespace {

// Nullspace basis of the column map: v with sum_{j in supp v} col_j = 0.
std::vector<std::vector<std::uint64_t>> null_space(const GeneratorMatrix& g) {
    std::vector<std::pair<Point, std::vector<std::uint64_t>>> pivots;  // (value, support)
    const int words = (g.n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> null_basis;
    for (int j = 0; j < g.n; ++j) {
        Point v = g.cols[j];
        std::vector<std::uint64_t> supp(words, 0);
        supp[j / 64] |= 1ull << (j % 64);
        for (auto& [pv, ps] : pivots) {
            if ((v ^ pv) < v) {
                v ^= pv;
                for (int q = 0; q < words; ++q) supp[q] ^= ps[q];
            }
        }
        if (v)
            pivots.emplace_back(v, std::move(supp));
        else
            null_basis.push_back(std::move(supp));
    }
    return null_basis;
}

template <class Visit>
void walk_dual(const GeneratorMatrix& g, Visit visit) {
    const auto null_basis = null_space(g);
    const int dim = static_cast<int>(null_basis.size());
    if (dim > 28) throw budget_error("dual enumeration limited to n - rank <= 28");
    const int words = (g.n + 63) / 64;
    std::vector<std::uint64_t> cw(words, 0);
    const std::uint64_t total = 1ull << dim;
    for (std::uint64_t t = 1; t < total; ++t) {
        const int bit = __builtin_ctzll(t);
        int w = 0;
        for (int q = 0; q < words; ++q) {
            cw[q] ^= null_basis[bit][q];
            w += __builtin_popcountll(cw[q]);
        }
        visit(w);
    }
}

}  // namespace

int dual_min_distance(const GeneratorMatrix& g) {
    int best = g.n + 1;
    walk_dual(g, [&](int w) { best = std::min(best, w); });
    if (best > g.n) throw std::runtime_error("dual code is trivial (columns independent)");
    return best;
}

WeightDistribution dual_weight_distribution(const GeneratorMatrix& g) {
    WeightDistribution wd;
    wd.counts.assign(g.n + 1, 0);
    wd.counts[0] = 1;
    walk_dual(g, [&](int w) { ++wd.counts[w]; });
    return wd;
}

HyperplaneSpectrum hyperplane_spectrum(const PointMultiset& p) {
    if (p.s > 24) throw budget_error("hyperplane enumeration limited to s <= 24");
    HyperplaneSpectrum sp;
    for (Point a = 1; a < (Point(1) << p.s); ++a) {
        int inside = 0;
        for (const auto& [pt, m] : p.mult)
            if (parity(a & pt) == 0) inside += m;
        ++sp.h[inside];
    }
    for (const auto& [pt, m] : p.mult) sp.y2 += static_cast<long long>(m) * (m - 1);

    if (p.s >= 2) {  // standard-equation self-check
        long long c0 = 0, c1 = 0, c2 = 0;
        for (const auto& [i, hi] : sp.h) {
            c0 += hi;
            c1 += static_cast<long long>(i) * hi;
            c2 += static_cast<long long>(i) * (i - 1) * hi;
        }
        const long long n = p.n;
        const long long full = (1ll << p.s) - 1;
        const long long half = (1ll << (p.s - 1)) - 1;
        const long long quart = 1ll << (p.s - 2);
        if (c0 != full || c1 != n * half || c2 != n * (n - 1) * (quart - 1) + quart * sp.y2)
            throw std::logic_error("standard equations violated");
    }
    return sp;
}

GeneratorMatrix puncture(const GeneratorMatrix& g, int col) {
    if (col < 0 || col >= g.n) throw std::out_of_range("puncture: column index");
    GeneratorMatrix r = g;
    r.cols.erase(r.cols.begin() + col);
    r.n = g.n - 1;
    return r;
}

ShortenResult shorten(const GeneratorMatrix& g, int col) {
    if (col < 0 || col >= g.n) throw std::out_of_range("shorten: column index");
    if (!g.cols[col]) throw std::runtime_error("shorten: zero column");
    // Pivot on one row where the column has a 1, eliminate it from the rest.
    const int piv = __builtin_ctz(g.cols[col]);
    // Row operations act on columns: adding row piv to row i flips bit i of
    // every column whose pivot bit is set -- work in the transposed view.
    std::vector<Point> cols = g.cols;
    for (int j = 0; j < g.n; ++j) {
        if ((cols[j] >> piv) & 1) cols[j] ^= g.cols[col] ^ (Point(1) << piv);
    }
    // Now column `col` is the unit vector e_piv; delete row piv and column col.
    GeneratorMatrix r;
    r.s = g.s - 1;
    for (int j = 0; j < g.n; ++j) {
        if (j == col) continue;
        Point c = cols[j];
        Point low = c & ((Point(1) << piv) - 1);
        Point high = c >> (piv + 1);
        r.cols.push_back(low | (high << piv));
    }
    r.n = g.n - 1;
    ShortenResult res;
    res.rank_dropped = gf2_rank(r.cols) < r.s;
    res.matrix = std::move(r);
    return res;
}

GeneratorMatrix parity_extend(const GeneratorMatrix& g) {
    Point sum = 0;
    for (Point c : g.cols) sum ^= c;
    GeneratorMatrix r = g;
    r.cols.push_back(sum);
    r.n = g.n + 1;
    return r;
}

ExpurgateResult expurgate(const GeneratorMatrix& g, int row) {
    if (row < 0 || row >= g.s) throw std::out_of_range("expurgate: row index");
    ExpurgateResult res;
    res.matrix.s = g.s - 1;
    for (Point c : g.cols) {
        Point low = c & ((Point(1) << row) - 1);
        Point high = c >> (row + 1);
        Point v = low | (high << row);
        if (v)
            res.matrix.cols.push_back(v);
        else
            ++res.dropped_columns;
    }
    res.matrix.n = static_cast<int>(res.matrix.cols.size());
    res.rank_dropped = gf2_rank(res.matrix.cols) < res.matrix.s;
    return res;
}

GeneratorMatrix direct_sum(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    GeneratorMatrix r;
    r.s = a.s + b.s;
    if (r.s > 32) throw budget_error("direct_sum dimension exceeds 32");
    for (Point c : a.cols) r.cols.push_back(c);
    for (Point c : b.cols) r.cols.push_back(c << a.s);
    r.n = a.n + b.n;
    return r;
}

GeneratorMatrix juxtapose(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    if (a.s != b.s) throw std::runtime_error("juxtapose: dimension mismatch");
    GeneratorMatrix r = a;
    r.cols.insert(r.cols.end(), b.cols.begin(), b.cols.end());
    r.n = a.n + b.n;
    return r;
}

}  // namespace pir
