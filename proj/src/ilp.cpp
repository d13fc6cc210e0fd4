#include "pir/ilp.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pir {

namespace {

constexpr long long kBig = 1LL << 60;

std::string hex_point(Point p) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%x", static_cast<unsigned>(p));
    return buf;
}

std::string y_name(int i, const std::vector<Point>& pts) {
    uint64_t h = 1469598103934665603ULL;
    for (Point p : pts)
        for (int b = 0; b < 4; ++b) {
            h ^= (p >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return "y_" + std::to_string(i) + "_" + buf;
}

// minimal recovery sets for e_i over all nonzero points, as sorted point lists
std::vector<std::vector<Point>> minimal_point_sets(int s, int i, int lambda) {
    GeneratorMatrix g;
    g.s = s;
    g.n = (1 << s) - 1;
    for (Point p = 1; p <= Point(g.n); ++p) g.cols.push_back(p);
    std::vector<std::vector<Point>> out;
    for (const RecoverySet& set : enumerate_minimal_recovery_sets(g, i, lambda)) {
        std::vector<Point> pts;
        for (int j : set) pts.push_back(Point(j) + 1);
        out.push_back(std::move(pts));
    }
    return out;
}

IlpModel build_core(int s, int k, int lambda, IlpMode mode, const BuildFlags& flags) {
    if (s < 1 || s > 10) throw std::invalid_argument("build needs 1 <= s <= 10");
    if (k < 1) throw std::invalid_argument("build needs k >= 1");
    if (lambda < 2) throw std::invalid_argument("build needs lambda >= 2");
    IlpModel m;
    m.s = s;
    m.k = k;
    m.lambda = lambda;
    m.mode = mode;
    m.flags = flags;
    const int npts = (1 << s) - 1;
    const long long xub =
        flags.projective ? 1 : (flags.repeat_cap ? k : static_cast<long long>(s) * k);
    for (Point p = 1; p <= Point(npts); ++p) {
        const bool unit = (p & (p - 1)) == 0;
        m.vars.push_back({"x_" + hex_point(p), flags.systematic && unit ? 1LL : 0LL, xub, true});
        m.x_points.push_back({p});
        m.objective.push_back({static_cast<int>(m.vars.size()) - 1, 1});
    }
    m.x_count = npts;

    std::vector<std::vector<std::vector<Point>>> sets_by_i;
    std::vector<std::vector<int>> yvar_by_i;
    std::size_t total_sets = 0;
    for (int i = 0; i < s; ++i) {
        sets_by_i.push_back(minimal_point_sets(s, i, lambda));
        total_sets += sets_by_i.back().size();
        if (total_sets > 2'000'000) throw budget_error("recovery-set variable count exceeds cap");
        yvar_by_i.emplace_back();
        for (const auto& h : sets_by_i[i]) {
            m.vars.push_back({y_name(i, h), 0, k, true});
            m.y_members.push_back({{i, h}});
            yvar_by_i[i].push_back(static_cast<int>(m.vars.size()) - 1);
        }
    }

    // linkage: sets containing point p cannot outnumber its columns
    for (int i = 0; i < s; ++i)
        for (Point p = 1; p <= Point(npts); ++p) {
            IlpConstraint row;
            row.name = "link_" + std::to_string(i) + "_" + hex_point(p);
            for (std::size_t t = 0; t < sets_by_i[i].size(); ++t)
                if (std::binary_search(sets_by_i[i][t].begin(), sets_by_i[i][t].end(), p))
                    row.terms.push_back({yvar_by_i[i][t], 1});
            if (row.terms.empty()) continue;
            row.terms.push_back({static_cast<int>(p) - 1, -1});
            row.sense = Sense::le;
            row.rhs = 0;
            m.cons.push_back(std::move(row));
        }

    // hyperplane cuts: at least k columns off every hyperplane
    for (Point a = 1; a <= Point(npts); ++a) {
        IlpConstraint row;
        row.name = "hyp_" + hex_point(a);
        for (Point p = 1; p <= Point(npts); ++p)
            if (parity(a & p)) row.terms.push_back({static_cast<int>(p) - 1, 1});
        row.sense = Sense::ge;
        row.rhs = k;
        m.cons.push_back(std::move(row));
    }

    if (mode == IlpMode::exact) {
        for (int i = 0; i < s; ++i) {
            IlpConstraint row;
            row.name = "dem_" + std::to_string(i);
            for (int v : yvar_by_i[i]) row.terms.push_back({v, 1});
            row.sense = Sense::ge;
            row.rhs = k;
            m.cons.push_back(std::move(row));
        }
    } else {
        // per-index tallies of same-size sets, tied down by equality rows: a
        // sum variable lets one row's budget cap another row's demand, which
        // row-at-a-time interval propagation cannot do through individual y
        std::vector<std::vector<int>> tally(s);  // [i][w-2] -> var id or -1
        for (int i = 0; i < s; ++i) {
            tally[i].assign(lambda - 1, -1);
            for (int w = 2; w <= lambda; ++w) {
                long long cnt = 0;
                for (const auto& h : sets_by_i[i])
                    cnt += static_cast<int>(h.size()) == w;
                if (cnt == 0) continue;
                m.vars.push_back({"sum_" + std::to_string(i) + "_" + std::to_string(w),
                                  0, cnt * k, true});
                m.y_members.push_back({});
                tally[i][w - 2] = static_cast<int>(m.vars.size()) - 1;
                IlpConstraint row;
                row.name = "def_" + std::to_string(i) + "_" + std::to_string(w);
                for (std::size_t t = 0; t < sets_by_i[i].size(); ++t)
                    if (static_cast<int>(sets_by_i[i][t].size()) == w)
                        row.terms.push_back({yvar_by_i[i][t], 1});
                row.terms.push_back({tally[i][w - 2], -1});
                row.sense = Sense::eq;
                row.rhs = 0;
                m.cons.push_back(std::move(row));
            }
        }
        auto singleton = [&](int i) {
            for (std::size_t t = 0; t < sets_by_i[i].size(); ++t)
                if (sets_by_i[i][t].size() == 1) return yvar_by_i[i][t];
            throw std::logic_error("missing singleton recovery set");
        };
        // size-aware demand relaxation: sets longer than lambda occupy at
        // least lambda+1 columns each
        for (int i = 0; i < s; ++i) {
            IlpConstraint row;
            row.name = "relax_" + std::to_string(i);
            for (Point p = 1; p <= Point(npts); ++p)
                row.terms.push_back({static_cast<int>(p) - 1, 1});
            row.terms.push_back({singleton(i), lambda});
            for (int w = 2; w <= lambda; ++w)
                if (tally[i][w - 2] >= 0)
                    row.terms.push_back({tally[i][w - 2], lambda + 1 - w});
            row.sense = Sense::ge;
            row.rhs = static_cast<long long>(lambda + 1) * k;
            m.cons.push_back(std::move(row));
        }
        // tightened hyperplane cuts: every recovery set for e_i off H meets
        // the outside an odd number of times, hence at least once
        for (int i = 0; i < s; ++i)
            for (Point a = 1; a <= Point(npts); ++a) {
                if (!parity(a & (Point(1) << i))) continue;  // e_i inside H
                IlpConstraint row;
                row.name = "cut14_" + std::to_string(i) + "_" + hex_point(a);
                for (Point p = 1; p <= Point(npts); ++p)
                    if (parity(a & p)) row.terms.push_back({static_cast<int>(p) - 1, 1});
                for (std::size_t t = 0; t < sets_by_i[i].size(); ++t) {
                    long long outside = 0;
                    for (Point p : sets_by_i[i][t]) outside += parity(a & p);
                    if (outside != 1) row.terms.push_back({yvar_by_i[i][t], 1 - outside});
                }
                row.sense = Sense::ge;
                row.rhs = k;
                m.cons.push_back(std::move(row));
            }
        // disjointness aggregate: columns consumed by one index fit in n
        for (int i = 0; i < s; ++i) {
            IlpConstraint row;
            row.name = "agg_" + std::to_string(i);
            row.terms.push_back({singleton(i), 1});
            for (int w = 2; w <= lambda; ++w)
                if (tally[i][w - 2] >= 0) row.terms.push_back({tally[i][w - 2], w});
            for (Point p = 1; p <= Point(npts); ++p)
                row.terms.push_back({static_cast<int>(p) - 1, -1});
            row.sense = Sense::le;
            row.rhs = 0;
            m.cons.push_back(std::move(row));
        }
        // size->=2 sets never use the e_i column (a member equal to e_i would
        // make the rest sum to zero), so they pack into the remaining stock
        for (int i = 0; i < s; ++i) {
            IlpConstraint row;
            row.name = "agg2_" + std::to_string(i);
            for (int w = 2; w <= lambda; ++w)
                if (tally[i][w - 2] >= 0) row.terms.push_back({tally[i][w - 2], w});
            for (Point p = 1; p <= Point(npts); ++p)
                if (p != (Point(1) << i)) row.terms.push_back({static_cast<int>(p) - 1, -1});
            row.sense = Sense::le;
            row.rhs = 0;
            m.cons.push_back(std::move(row));
        }
        // averaged tightened cuts (the sum of cut14 over all hyperplanes off
        // e_i, divided by 2^{s-2}): interval propagation cannot recover this
        // combination on its own
        if (s >= 3)
            for (int i = 0; i < s; ++i) {
                IlpConstraint row;
                row.name = "cut14sum_" + std::to_string(i);
                for (int w = 3; w <= lambda; ++w)
                    if (tally[i][w - 2] >= 0)
                        row.terms.push_back({tally[i][w - 2], w - 2});
                for (Point p = 1; p <= Point(npts); ++p)
                    row.terms.push_back(
                        {static_cast<int>(p) - 1, p == (Point(1) << i) ? -2LL : -1LL});
                row.sense = Sense::le;
                row.rhs = -2LL * k;
                m.cons.push_back(std::move(row));
            }
    }

    // per-point multiplicity cap, averaged over the hyperplanes through the
    // point: every real multiset obeys it, so lower mode keeps it always
    if ((flags.lemma8_cut || mode == IlpMode::lower) && s >= 2) {
        const long long q = 1LL << (s - 2);
        for (Point p = 1; p <= Point(npts); ++p) {
            IlpConstraint row;
            row.name = "cap_" + hex_point(p);
            for (Point p2 = 1; p2 <= Point(npts); ++p2)
                if (p2 != p) row.terms.push_back({static_cast<int>(p2) - 1, q});
            row.sense = Sense::ge;
            row.rhs = static_cast<long long>(k) * ((1LL << (s - 1)) - 1);
            m.cons.push_back(std::move(row));
        }
    }
    if (flags.order_units)
        for (int i = 0; i + 1 < s; ++i) {
            IlpConstraint row;
            row.name = "ord_" + std::to_string(i);
            row.terms.push_back({static_cast<int>(Point(1) << i) - 1, 1});
            row.terms.push_back({static_cast<int>(Point(1) << (i + 1)) - 1, -1});
            row.sense = Sense::ge;
            row.rhs = 0;
            m.cons.push_back(std::move(row));
        }
    return m;
}

}  // namespace

IlpModel build_exact(int s, int k, int lambda, const BuildFlags& flags) {
    return build_core(s, k, lambda, IlpMode::exact, flags);
}

IlpModel build_lower(int s, int k, int lambda) {
    return build_core(s, k, lambda, IlpMode::lower, BuildFlags{});
}

IlpModel apply_symmetry(const IlpModel& m, const std::vector<std::vector<int>>& generators) {
    if (m.mode != IlpMode::exact)
        throw std::invalid_argument("orbit reduction expects an exact-mode model");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != m.s)
            throw std::invalid_argument("generator arity differs from s");
        std::vector<char> seen(m.s, 0);
        for (int img : g) {
            if (img < 0 || img >= m.s || seen[img])
                throw std::invalid_argument("generator is not a permutation");
            seen[img] = 1;
        }
    }
    for (const auto& pts : m.x_points)
        if (pts.size() != 1) throw std::invalid_argument("model is already orbit-reduced");
    for (const auto& mem : m.y_members)
        if (mem.size() != 1) throw std::invalid_argument("model is already orbit-reduced");

    const int nvars = static_cast<int>(m.vars.size());
    std::vector<int> parent(nvars);
    for (int v = 0; v < nvars; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    std::map<Point, int> xvar;
    for (int v = 0; v < m.x_count; ++v) xvar[m.x_points[v][0]] = v;
    std::map<std::pair<int, std::vector<Point>>, int> yvar;
    for (int v = m.x_count; v < nvars; ++v) yvar[m.y_members[v - m.x_count][0]] = v;

    for (const auto& g : generators) {
        auto act = [&](Point p) {
            Point q = 0;
            for (int i = 0; i < m.s; ++i)
                if (p >> i & 1) q |= Point(1) << g[i];
            return q;
        };
        for (int v = 0; v < m.x_count; ++v) unite(v, xvar.at(act(m.x_points[v][0])));
        for (int v = m.x_count; v < nvars; ++v) {
            const auto& [i, pts] = m.y_members[v - m.x_count][0];
            std::vector<Point> img;
            for (Point p : pts) img.push_back(act(p));
            std::sort(img.begin(), img.end());
            const auto it = yvar.find({g[i], img});
            if (it == yvar.end())
                throw std::logic_error("group action left the recovery-set family");
            unite(v, it->second);
        }
    }

    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < nvars; ++v) groups[find(v)].push_back(v);

    IlpModel out;
    out.s = m.s;
    out.k = m.k;
    out.lambda = m.lambda;
    out.mode = m.mode;
    out.flags = m.flags;
    std::vector<int> old2new(nvars, -1);
    // x orbits first, ordered by least member point
    for (const auto& [root, members] : groups) {
        if (root >= m.x_count) continue;
        std::vector<Point> pts;
        long long lb = 0, ub = kBig;
        for (int v : members) {
            pts.push_back(m.x_points[v][0]);
            lb = std::max(lb, m.vars[v].lb);
            ub = std::min(ub, m.vars[v].ub);
        }
        std::sort(pts.begin(), pts.end());
        for (int v : members) old2new[v] = static_cast<int>(out.vars.size());
        out.vars.push_back({"x_" + hex_point(pts.front()), lb, ub, true});
        out.x_points.push_back(std::move(pts));
    }
    out.x_count = static_cast<int>(out.vars.size());
    for (const auto& [root, members] : groups) {
        if (root < m.x_count) continue;
        std::vector<std::pair<int, std::vector<Point>>> keys;
        long long lb = 0, ub = kBig;
        for (int v : members) {
            keys.push_back(m.y_members[v - m.x_count][0]);
            lb = std::max(lb, m.vars[v].lb);
            ub = std::min(ub, m.vars[v].ub);
        }
        std::sort(keys.begin(), keys.end());
        for (int v : members) old2new[v] = static_cast<int>(out.vars.size());
        out.vars.push_back({y_name(keys.front().first, keys.front().second), lb, ub, true});
        out.y_members.push_back(std::move(keys));
    }

    auto rewrite = [&](const std::vector<IlpTerm>& terms) {
        std::map<int, long long> acc;
        for (const auto& t : terms) acc[old2new[t.var]] += t.coeff;
        std::vector<IlpTerm> res;
        for (const auto& [v, c] : acc)
            if (c != 0) res.push_back({v, c});
        return res;
    };
    out.objective = rewrite(m.objective);
    std::set<std::string> seen_rows;
    for (const auto& row : m.cons) {
        IlpConstraint nr;
        nr.name = row.name;
        nr.terms = rewrite(row.terms);
        nr.sense = row.sense;
        nr.rhs = row.rhs;
        std::ostringstream key;
        key << static_cast<int>(nr.sense) << '|' << nr.rhs;
        for (const auto& t : nr.terms) key << '|' << t.var << ':' << t.coeff;
        if (seen_rows.insert(key.str()).second) out.cons.push_back(std::move(nr));
    }
    return out;
}

namespace {

long long div_floor(long long a, long long b) {
    long long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}
long long div_ceil(long long a, long long b) { return -div_floor(-a, b); }

struct Solver {
    const IlpModel& m;
    std::vector<IlpConstraint> rows;
    int cutoff_row;
    std::vector<std::vector<std::pair<int, long long>>> var_terms;  // var -> (row, coeff)
    std::vector<long long> obj;
    std::vector<int> eligible;     // ge rows whose coefficients match the objective
    long long family_f = 0;        // max eligible-row membership over variables
    long long budget;
    long long seed;
    long long nodes = 0;
    bool stopped = false;
    bool seeded_out = false;  // incumbent reached the caller's proven floor
    long long incumbent_val = kBig;
    std::vector<long long> incumbent;
    long long root_bound = 0;
    bool have_root_bound = false;

    // node state lives here; children undo their edits through the trail
    // instead of copying the whole box at every branch
    std::vector<long long> lb, ub;
    struct Mark {
        int var;
        char hi;
        long long old;
    };
    std::vector<Mark> trail;
    std::vector<int> queue;
    std::size_t qhead = 0;
    std::vector<char> inq;

    Solver(const IlpModel& model, const SolveOptions& opt)
        : m(model), budget(opt.node_budget), seed(opt.seed_lower) {
        rows = m.cons;
        obj.assign(m.vars.size(), 0);
        for (const auto& t : m.objective) obj[t.var] += t.coeff;
        IlpConstraint cut;
        cut.name = "cutoff";
        cut.terms = m.objective;
        cut.sense = Sense::le;
        cut.rhs = kBig;
        cutoff_row = static_cast<int>(rows.size());
        rows.push_back(std::move(cut));
        var_terms.assign(m.vars.size(), {});
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            for (const auto& t : rows[r].terms) var_terms[t.var].push_back({r, t.coeff});
        std::vector<long long> membership(m.vars.size(), 0);
        for (int r = 0; r < cutoff_row; ++r) {
            if (rows[r].sense != Sense::ge) continue;
            bool ok = !rows[r].terms.empty();
            for (const auto& t : rows[r].terms)
                ok = ok && t.coeff > 0 && t.coeff == obj[t.var];
            if (!ok) continue;
            eligible.push_back(r);
            for (const auto& t : rows[r].terms) ++membership[t.var];
        }
        for (long long f : membership) family_f = std::max(family_f, f);
    }

    void init_box() {
        for (const auto& v : m.vars) {
            lb.push_back(v.lb);
            ub.push_back(v.ub);
        }
        inq.assign(rows.size(), 0);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) enqueue(r);
    }

    void set_lb(int v, long long val) {
        trail.push_back({v, 0, lb[v]});
        lb[v] = val;
    }
    void set_ub(int v, long long val) {
        trail.push_back({v, 1, ub[v]});
        ub[v] = val;
    }
    void undo(std::size_t mark) {
        while (trail.size() > mark) {
            const Mark e = trail.back();
            trail.pop_back();
            (e.hi ? ub[e.var] : lb[e.var]) = e.old;
        }
    }
    void enqueue(int r) {
        if (!inq[r]) {
            inq[r] = 1;
            queue.push_back(r);
        }
    }
    void wake(int v) {
        for (const auto& [r, c] : var_terms[v]) enqueue(r);
    }
    void drop_queue() {
        while (qhead < queue.size()) inq[queue[qhead++]] = 0;
        queue.clear();
        qhead = 0;
    }
    bool fail() {
        drop_queue();
        return false;
    }

    bool propagate() {
        while (qhead < queue.size()) {
            const int r = queue[qhead++];
            if (qhead == queue.size()) {
                queue.clear();
                qhead = 0;
            }
            inq[r] = 0;
            const IlpConstraint& row = rows[r];
            if (row.sense != Sense::le) {  // ge or eq: sum >= rhs
                long long maxact = 0;
                for (const auto& t : row.terms)
                    maxact += t.coeff > 0 ? t.coeff * ub[t.var] : t.coeff * lb[t.var];
                const long long slack = maxact - row.rhs;
                if (slack < 0) return fail();
                // a term tightens iff |c|*(ub-lb) > slack
                for (const auto& t : row.terms) {
                    const long long w = ub[t.var] - lb[t.var];
                    if (w == 0) continue;
                    if (t.coeff > 0) {
                        if (t.coeff * w <= slack) continue;
                        set_lb(t.var, ub[t.var] - slack / t.coeff);
                        wake(t.var);
                    } else {
                        if (-t.coeff * w <= slack) continue;
                        set_ub(t.var, lb[t.var] + slack / -t.coeff);
                        wake(t.var);
                    }
                }
            }
            if (row.sense != Sense::ge) {  // le or eq: sum <= rhs
                long long minact = 0;
                for (const auto& t : row.terms)
                    minact += t.coeff > 0 ? t.coeff * lb[t.var] : t.coeff * ub[t.var];
                const long long slack = row.rhs - minact;
                if (slack < 0) return fail();
                for (const auto& t : row.terms) {
                    const long long w = ub[t.var] - lb[t.var];
                    if (w == 0) continue;
                    if (t.coeff > 0) {
                        if (t.coeff * w <= slack) continue;
                        set_ub(t.var, lb[t.var] + slack / t.coeff);
                        wake(t.var);
                    } else {
                        if (-t.coeff * w <= slack) continue;
                        set_lb(t.var, ub[t.var] - slack / -t.coeff);
                        wake(t.var);
                    }
                }
            }
        }
        return true;
    }

    // objective floor: lower-bound contribution plus residual demand, both as
    // a single tightest row and averaged across the whole eligible family
    long long bound(int* tight) {
        long long base = 0;
        for (const auto& t : m.objective)
            base += t.coeff > 0 ? t.coeff * lb[t.var] : t.coeff * ub[t.var];
        long long best_res = 0, sum_res = 0;
        *tight = -1;
        for (int r : eligible) {
            long long act = 0;
            for (const auto& t : rows[r].terms) act += t.coeff * lb[t.var];
            const long long res = rows[r].rhs - act;
            if (res > best_res) {
                best_res = res;
                *tight = r;
            }
            if (res > 0) sum_res += res;
        }
        long long extra = best_res;
        if (family_f > 0) extra = std::max(extra, div_ceil(sum_res, family_f));
        return base + extra;
    }

    void dfs() {
        if (stopped || seeded_out) return;
        ++nodes;
        if (nodes > budget) {
            stopped = true;
            drop_queue();
            return;
        }
        if (!propagate()) return;
        int tight = -1;
        const long long floor_here = bound(&tight);
        if (!have_root_bound) {
            root_bound = floor_here;
            have_root_bound = true;
        }
        if (floor_here >= incumbent_val) return;
        int v = -1;
        if (tight >= 0) {
            long long width = 0;
            for (const auto& t : rows[tight].terms)
                if (ub[t.var] - lb[t.var] > width) {
                    width = ub[t.var] - lb[t.var];
                    v = t.var;
                }
        }
        if (v < 0)
            for (std::size_t u = 0; u < lb.size(); ++u)
                if (lb[u] < ub[u]) {
                    v = static_cast<int>(u);
                    break;
                }
        if (v < 0) {
            long long val = 0;
            for (std::size_t u = 0; u < obj.size(); ++u) val += obj[u] * lb[u];
            if (val < incumbent_val) {
                incumbent_val = val;
                incumbent = lb;
                rows[cutoff_row].rhs = incumbent_val - 1;
                if (incumbent_val <= seed) seeded_out = true;
            }
            return;
        }
        // x: take the lower half first; y: take the upper half first (feeds
        // the demand rows)
        const bool xlike = v < m.x_count || obj[v] > 0;
        const long long mid = lb[v] + (ub[v] - lb[v]) / 2;
        auto child = [&](bool lower_half) {
            const std::size_t mark = trail.size();
            if (lower_half)
                set_ub(v, mid);
            else
                set_lb(v, mid + 1);
            wake(v);
            enqueue(cutoff_row);
            dfs();
            undo(mark);
        };
        if (xlike) {
            child(true);
            child(false);
        } else {
            child(false);
            child(true);
        }
    }
};

}  // namespace

std::string SolveOutcome::trailer() const {
    static const char* names[] = {"optimal", "infeasible", "bounds-interval", "budget"};
    std::ostringstream out;
    out << "nodes=" << nodes << " status=" << names[static_cast<int>(status)]
        << " obj=" << objective;
    return out.str();
}

SolveOutcome solve(const IlpModel& model, const SolveOptions& options) {
    for (const auto& row : model.cons)
        for (const auto& t : row.terms)
            if (t.var < 0 || t.var >= static_cast<int>(model.vars.size()))
                throw std::invalid_argument("constraint references an undeclared variable");
    for (const auto& v : model.vars)
        if (v.lb > v.ub) throw std::invalid_argument("variable with empty domain");
    Solver solver(model, options);
    solver.init_box();
    solver.dfs();
    SolveOutcome out;
    out.nodes = solver.nodes;
    const bool have_inc = solver.incumbent_val < kBig;
    if (solver.seeded_out) {
        out.status = SolveStatus::optimal;
        out.objective = solver.incumbent_val;
        out.proven_lower = solver.incumbent_val;
        out.assignment = solver.incumbent;
    } else if (solver.stopped) {
        out.status = have_inc ? SolveStatus::bounds_interval : SolveStatus::budget;
        out.proven_lower = std::max(options.seed_lower,
                                    solver.have_root_bound ? solver.root_bound : 0);
        if (have_inc) {
            out.objective = solver.incumbent_val;
            out.assignment = solver.incumbent;
            out.proven_lower = std::min(out.proven_lower, out.objective);
        }
    } else if (have_inc) {
        out.status = SolveStatus::optimal;
        out.objective = solver.incumbent_val;
        out.proven_lower = solver.incumbent_val;
        out.assignment = solver.incumbent;
    } else {
        out.status = SolveStatus::infeasible;
        out.proven_lower = kBig;
    }
    return out;
}

std::pair<GeneratorMatrix, RecoveryCertificate> extract_code(const IlpModel& model,
                                                             const SolveOutcome& outcome) {
    if (model.mode != IlpMode::exact)
        throw std::invalid_argument("certificate extraction needs an exact-mode model");
    if (outcome.assignment.size() != model.vars.size())
        throw std::invalid_argument("outcome carries no usable assignment");
    PointMultiset ms;
    ms.s = model.s;
    for (int v = 0; v < model.x_count; ++v)
        for (Point p : model.x_points[v])
            if (outcome.assignment[v] > 0) {
                ms.mult[p] = static_cast<int>(outcome.assignment[v]);
                ms.n += ms.mult[p];
            }
    GeneratorMatrix g = multiset_to_matrix(ms);
    std::map<Point, std::vector<int>> cols_of;
    for (int j = 0; j < g.n; ++j) cols_of[g.cols[j]].push_back(j);
    RecoveryCertificate cert;
    cert.s = model.s;
    cert.n = g.n;
    cert.k = model.k;
    cert.sets.resize(model.s);
    for (int i = 0; i < model.s; ++i) {
        auto pool = cols_of;
        for (int v = model.x_count; v < static_cast<int>(model.vars.size()); ++v)
            for (const auto& [vi, pts] : model.y_members[v - model.x_count]) {
                if (vi != i) continue;
                for (long long use = 0; use < outcome.assignment[v]; ++use) {
                    RecoverySet set;
                    for (Point p : pts) {
                        auto& avail = pool[p];
                        if (avail.empty())
                            throw std::logic_error(
                                "assignment inconsistent with a valid certificate");
                        set.push_back(avail.back());
                        avail.pop_back();
                    }
                    std::sort(set.begin(), set.end());
                    cert.sets[i].push_back(std::move(set));
                }
            }
        if (static_cast<int>(cert.sets[i].size()) < model.k)
            throw std::logic_error("assignment inconsistent with a valid certificate");
        cert.sets[i].resize(model.k);
    }
    if (!validate_certificate(g, model.k, cert).valid)
        throw std::logic_error("assignment inconsistent with a valid certificate");
    return {g, cert};
}

std::string export_lp(const IlpModel& m) {
    std::ostringstream out;
    out << "\\ mode=" << (m.mode == IlpMode::exact ? "exact" : "lower") << " s=" << m.s
        << " k=" << m.k << " lambda=" << m.lambda << "\n";
    auto emit_terms = [&](const std::vector<IlpTerm>& terms) {
        bool first = true;
        for (const auto& t : terms) {
            const long long c = t.coeff;
            if (first)
                out << (c < 0 ? "- " : "");
            else
                out << (c < 0 ? " - " : " + ");
            const long long a = c < 0 ? -c : c;
            if (a != 1) out << a << " ";
            out << m.vars[t.var].name;
            first = false;
        }
    };
    out << "Minimize\n obj: ";
    emit_terms(m.objective);
    out << "\nSubject To\n";
    for (const auto& row : m.cons) {
        out << " " << row.name << ": ";
        emit_terms(row.terms);
        static const char* rel[] = {"<=", ">=", "="};
        out << " " << rel[static_cast<int>(row.sense)] << " " << row.rhs << "\n";
    }
    out << "Bounds\n";
    for (const auto& v : m.vars) out << " " << v.lb << " <= " << v.name << " <= " << v.ub << "\n";
    out << "General\n";
    for (const auto& v : m.vars)
        if (v.integral) out << " " << v.name << "\n";
    out << "End\n";
    return out.str();
}

}  // namespace pir
