#include "pir/constructions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "catalog_data.hpp"

namespace pir {

namespace {

void require_valid(const CertifiedCode& c, const char* what) {
    if (!validate_certificate(c.matrix, c.certificate.k, c.certificate).valid)
        throw std::logic_error(std::string(what) + " produced an invalid certificate");
}

std::vector<int> point_index(const GeneratorMatrix& g) {
    std::vector<int> idx(std::size_t(1) << g.s, -1);
    for (int j = 0; j < g.n; ++j) idx[g.cols[j]] = j;
    return idx;
}

}  // namespace

CertifiedCode simplex(int s) {
    if (s < 1 || s > 20) throw std::invalid_argument("simplex: s must be in [1,20]");
    if (s > 14) throw budget_error("simplex: certificate too large beyond s = 14");
    PointMultiset ms;
    ms.s = s;
    const Point all = (Point(1) << s) - 1;
    for (Point p = 1; p <= all; ++p) ms.mult[p] = 1;
    ms.n = static_cast<int>(all);
    CertifiedCode out;
    out.matrix = multiset_to_matrix(ms);
    const auto idx = point_index(out.matrix);
    auto& cert = out.certificate;
    cert.s = s;
    cert.n = out.matrix.n;
    cert.k = 1 << (s - 1);
    cert.sets.resize(s);
    for (int i = 0; i < s; ++i) {
        const Point ei = Point(1) << i;
        auto& sets = cert.sets[i];
        sets.reserve(cert.k);
        sets.push_back({idx[ei]});
        for (Point x = 1; x <= all; ++x) {
            if ((x >> i) & 1) continue;
            RecoverySet rs{idx[x], idx[x ^ ei]};
            std::sort(rs.begin(), rs.end());
            sets.push_back(std::move(rs));
        }
    }
    require_valid(out, "simplex");
    return out;
}

namespace {

// Fixed-point-free map with T^2 + T + I = 0: companion blocks on bit pairs.
Point apply_T(Point u, int m) {
    Point r = 0;
    for (int t = 0; t + 1 < m; t += 2) {
        const Point a = (u >> t) & 1, b = (u >> (t + 1)) & 1;
        r |= b << t;
        r |= (a ^ b) << (t + 1);
    }
    return r;
}

struct SpreadSearch {
    int m = 0;
    int target = 0;
    long long nodes = 0;
    long long budget = 0;
    std::vector<char> used;  // covered or skipped
    int covered = 0;
    int skipped = 0;
    std::vector<std::array<Point, 3>> lines;

    bool rec() {
        if (++nodes > budget) throw budget_error("spread search budget exhausted");
        if (static_cast<int>(lines.size()) == target) return true;
        const Point total = (Point(1) << m) - 1;
        Point a = 0;
        for (Point p = 1; p <= total; ++p)
            if (!used[p]) {
                a = p;
                break;
            }
        if (!a) return false;
        const int remaining = static_cast<int>(total) - covered - skipped;
        if (static_cast<int>(lines.size()) + remaining / 3 < target) return false;
        for (Point b = a + 1; b <= total; ++b) {
            if (used[b]) continue;
            const Point c = a ^ b;
            if (c <= b || used[c]) continue;
            used[a] = used[b] = used[c] = 1;
            covered += 3;
            lines.push_back({a, b, c});
            if (rec()) return true;
            lines.pop_back();
            covered -= 3;
            used[a] = used[b] = used[c] = 0;
        }
        if (skipped < static_cast<int>(total) - 3 * target) {
            used[a] = 1;
            ++skipped;
            if (rec()) return true;
            --skipped;
            used[a] = 0;
        }
        return false;
    }
};

}  // namespace

std::vector<Line> partial_line_spread(int s, Point hyperplane_normal, long long node_budget) {
    if (s < 3 || s > 24) throw std::invalid_argument("partial_line_spread: s must be in [3,24]");
    for (int i = 0; i < s; ++i)
        if (!((hyperplane_normal >> i) & 1))
            throw std::runtime_error("hyperplane contains a unit vector");
    const int m = s - 1;
    // basis e_j + e_s of the even-weight hyperplane: coordinates u map to the
    // point u with the last row set to the parity of u
    auto emb = [&](Point u) { return u | (Point(popcount(u) & 1) << (s - 1)); };
    std::vector<Line> out;
    if (m % 2 == 0) {
        // perfect spread from the orbits {u, Tu, u + Tu}
        std::vector<char> seen(std::size_t(1) << m, 0);
        for (Point u = 1; u < (Point(1) << m); ++u) {
            if (seen[u]) continue;
            const Point v = apply_T(u, m), w = u ^ v;
            seen[u] = seen[v] = seen[w] = 1;
            std::array<Point, 3> pts{emb(u), emb(v), emb(w)};
            std::sort(pts.begin(), pts.end());
            out.push_back({pts[0], pts[1], pts[2]});
        }
    } else {
        SpreadSearch search;
        search.m = m;
        search.target = ((1 << m) - 5) / 3;
        search.budget = node_budget;
        search.used.assign(std::size_t(1) << m, 0);
        if (!search.rec()) throw std::logic_error("maximal partial spread not reached");
        for (const auto& ln : search.lines) {
            std::array<Point, 3> pts{emb(ln[0]), emb(ln[1]), emb(ln[2])};
            std::sort(pts.begin(), pts.end());
            out.push_back({pts[0], pts[1], pts[2]});
        }
    }
    return out;
}

CertifiedCode remove_lines(int s, int lambda) {
    if (s < 3) throw std::invalid_argument("remove_lines: s must be >= 3");
    const int cap = ((1 << (s - 1)) - 3 - (s % 2 == 0 ? 2 : -2)) / 3;
    if (lambda < 0 || lambda > cap) throw std::out_of_range("remove_lines: lambda out of range");
    if (lambda == 0) return simplex(s);
    auto lines = partial_line_spread(s, (Point(1) << s) - 1);
    lines.resize(lambda);
    std::vector<char> removed(std::size_t(1) << s, 0);
    for (const auto& ln : lines) removed[ln.a] = removed[ln.b] = removed[ln.c] = 1;

    PointMultiset ms;
    ms.s = s;
    const Point all = (Point(1) << s) - 1;
    for (Point p = 1; p <= all; ++p)
        if (!removed[p]) ms.mult[p] = 1;
    ms.n = static_cast<int>(all) - 3 * lambda;
    CertifiedCode out;
    out.matrix = multiset_to_matrix(ms);
    const auto idx = point_index(out.matrix);
    auto& cert = out.certificate;
    cert.s = s;
    cert.n = out.matrix.n;
    cert.k = (1 << (s - 1)) - 2 * lambda;
    cert.sets.resize(s);
    for (int i = 0; i < s; ++i) {
        const Point ei = Point(1) << i;
        auto& sets = cert.sets[i];
        sets.push_back({idx[ei]});  // e_i has odd weight, never on a removed line
        for (Point x = 1; x <= all; ++x) {
            if ((x >> i) & 1) continue;
            if (removed[x] || removed[x ^ ei]) continue;
            RecoverySet rs{idx[x], idx[x ^ ei]};
            std::sort(rs.begin(), rs.end());
            sets.push_back(std::move(rs));
        }
        // each dropped pair frees the odd-weight partner of one removed point;
        // the three partners of one line sum to e_i again
        for (const auto& ln : lines) {
            RecoverySet rs{idx[ln.a ^ ei], idx[ln.b ^ ei], idx[ln.c ^ ei]};
            std::sort(rs.begin(), rs.end());
            sets.push_back(std::move(rs));
        }
    }
    require_valid(out, "remove_lines");
    return out;
}

namespace {

struct CliqueSolver {
    int V = 0;
    std::vector<std::vector<char>> adj;
    long long nodes = 0;
    long long budget = 0;
    std::vector<int> best, cur;

    void expand(const std::vector<int>& P) {
        if (++nodes > budget) throw budget_error("clique search budget exhausted");
        // greedy coloring bound, classes built in index order
        std::vector<int> order, colors;
        std::vector<std::vector<int>> classes;
        for (int v : P) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool conflict = false;
                for (int u : classes[c])
                    if (adj[v][u]) {
                        conflict = true;
                        break;
                    }
                if (!conflict) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int u : classes[c]) {
                order.push_back(u);
                colors.push_back(static_cast<int>(c) + 1);
            }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(cur.size()) + colors[i] <= static_cast<int>(best.size())) return;
            const int v = order[i];
            cur.push_back(v);
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (adj[v][order[j]]) next.push_back(order[j]);
            if (next.empty()) {
                if (cur.size() > best.size()) best = cur;
            } else {
                expand(next);
            }
            cur.pop_back();
        }
    }
};

std::vector<RecoverySet> zero_sum_sets(const GeneratorMatrix& g, int size_cap) {
    std::vector<RecoverySet> out;
    RecoverySet cur;
    auto rec = [&](auto&& self, int start, Point acc) -> void {
        if (acc == 0 && cur.size() >= 2) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= size_cap) return;
        for (int j = start; j < g.n; ++j) {
            cur.push_back(j);
            self(self, j + 1, acc ^ g.cols[j]);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::stable_sort(out.begin(), out.end(), [](const RecoverySet& a, const RecoverySet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::uint64_t set_mask(const RecoverySet& set) {
    std::uint64_t m = 0;
    for (int j : set) m |= std::uint64_t(1) << j;
    return m;
}

}  // namespace

std::vector<CertifiedCode> lengthen_search(const CertifiedCode& base, int t,
                                           const LengthenOptions& opt) {
    const GeneratorMatrix& g = base.matrix;
    const int k = base.certificate.k;
    if (t < 0) throw std::invalid_argument("lengthen_search: t must be >= 0");
    if (g.n > 63) throw budget_error("lengthen_search limited to n <= 63");
    if (g.s + 1 > 31) throw budget_error("lengthen_search limited to s <= 30");
    if (!validate_certificate(g, k, base.certificate).valid)
        throw std::runtime_error("lengthen_search: input certificate does not validate");

    // masks of the k working sets per index
    std::vector<std::vector<std::uint64_t>> set_masks(g.s);
    for (int i = 0; i < g.s; ++i)
        for (int j = 0; j < k; ++j) set_masks[i].push_back(set_mask(base.certificate.sets[i][j]));

    // disjoint zero-sum column sets for the new index, fixed once by clique search
    const int need = k - t;
    std::vector<RecoverySet> zsets;
    std::vector<std::uint64_t> zmasks;
    if (need > 0) {
        const auto cands = zero_sum_sets(g, opt.zset_size_cap);
        const int V = static_cast<int>(cands.size());
        if (V == 0) return {};
        if (V > 4096) throw budget_error("lengthen_search: too many zero-sum sets");
        std::vector<std::uint64_t> masks(V);
        for (int v = 0; v < V; ++v) masks[v] = set_mask(cands[v]);
        CliqueSolver clique;
        clique.V = V;
        clique.budget = opt.clique_node_budget;
        clique.adj.assign(V, std::vector<char>(V, 0));
        for (int u = 0; u < V; ++u)
            for (int v = u + 1; v < V; ++v)
                if (!(masks[u] & masks[v])) clique.adj[u][v] = clique.adj[v][u] = 1;
        std::vector<int> all(V);
        for (int v = 0; v < V; ++v) all[v] = v;
        clique.expand(all);
        if (static_cast<int>(clique.best.size()) < need) return {};
        std::sort(clique.best.begin(), clique.best.end());
        for (int v : clique.best) {
            zsets.push_back(cands[v]);
            zmasks.push_back(masks[v]);
        }
    }

    std::vector<CertifiedCode> results;
    long long rows_left = opt.row_budget;
    const int wmax = opt.max_row_weight < 0 ? g.n : std::min(g.n, opt.max_row_weight);
    const Point new_unit = Point(1) << g.s;

    auto try_row = [&](std::uint64_t r) -> bool {
        // at most t parity flips among the working sets of each old index
        for (int i = 0; i < g.s; ++i) {
            int flips = 0;
            for (std::uint64_t m : set_masks[i])
                if (__builtin_parityll(m & r) && ++flips > t) return false;
        }
        std::vector<int> odd_z;
        for (std::size_t z = 0; z < zmasks.size(); ++z)
            if (__builtin_parityll(zmasks[z] & r)) odd_z.push_back(static_cast<int>(z));
        if (static_cast<int>(odd_z.size()) < need) return false;

        CertifiedCode ext;
        ext.matrix.s = g.s + 1;
        ext.matrix.n = g.n + t;
        for (int j = 0; j < g.n; ++j)
            ext.matrix.cols.push_back(g.cols[j] | (Point((r >> j) & 1) << g.s));
        for (int j = 0; j < t; ++j) ext.matrix.cols.push_back(new_unit);
        auto& cert = ext.certificate;
        cert.s = ext.matrix.s;
        cert.n = ext.matrix.n;
        cert.k = k;
        cert.sets.resize(cert.s);
        for (int i = 0; i < g.s; ++i) {
            int next_new = g.n;
            for (int j = 0; j < k; ++j) {
                RecoverySet set = base.certificate.sets[i][j];
                if (__builtin_parityll(set_masks[i][j] & r)) set.push_back(next_new++);
                cert.sets[i].push_back(std::move(set));
            }
        }
        for (int j = 0; j < t; ++j) cert.sets[g.s].push_back({g.n + j});
        for (int z = 0; z < need; ++z) cert.sets[g.s].push_back(zsets[odd_z[z]]);
        require_valid(ext, "lengthen_search");
        results.push_back(std::move(ext));
        return static_cast<int>(results.size()) >= opt.max_results;
    };

    for (int w = 0; w <= wmax; ++w) {
        if (w == 0) {
            if (--rows_left < 0) break;
            if (try_row(0)) return results;
            continue;
        }
        std::uint64_t r = (std::uint64_t(1) << w) - 1;
        const std::uint64_t limit = std::uint64_t(1) << g.n;
        while (r < limit) {
            if (--rows_left < 0) {
                if (results.empty()) throw budget_error("lengthen_search row budget exhausted");
                return results;
            }
            if (try_row(r)) return results;
            const std::uint64_t c = r & -r, rr = r + c;
            r = rr | (((r ^ rr) >> 2) / c);
        }
    }
    return results;
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        for (int e = 0; e < detail::raw_catalog_size; ++e) {
            const auto& raw = detail::raw_catalog[e];
            CatalogEntry entry;
            entry.id = raw.id;
            entry.s = raw.s;
            entry.k = raw.k;
            entry.n = raw.n;
            entry.kind = raw.reference ? EntryKind::reference : EntryKind::certified;
            entry.note = raw.note;
            ParseReport rep = parse_matrix(raw.matrix);
            if (rep.matrix.s != raw.s || rep.matrix.n != raw.n || rep.rank != raw.s)
                throw std::logic_error("catalog entry dimensions inconsistent: " + entry.id);
            entry.matrix = std::move(rep.matrix);
            if (raw.cert && raw.cert[0]) entry.certificate = certificate_from_json(raw.cert);
            out.push_back(std::move(entry));
        }
        return out;
    }();
    return entries;
}

std::vector<CatalogEntry> catalog_lookup(int s, int k) {
    std::vector<CatalogEntry> out;
    for (const auto& entry : catalog_entries())
        if (entry.s == s && entry.k == k) out.push_back(entry);
    return out;
}

}  // namespace pir
