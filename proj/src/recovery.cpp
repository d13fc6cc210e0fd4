#include "pir/recovery.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace pir {

namespace {

bool independent(const std::vector<Point>& vals) {
    std::vector<Point> basis;
    for (Point v : vals) {
        for (Point b : basis) v = std::min(v, v ^ b);
        if (!v) return false;
        basis.push_back(v);
        std::sort(basis.begin(), basis.end(), std::greater<Point>());
    }
    return true;
}

Point xor_of(const GeneratorMatrix& g, const RecoverySet& set) {
    Point x = 0;
    for (int j : set) x ^= g.cols[j];
    return x;
}

}  // namespace

ValidationReport validate_certificate(const GeneratorMatrix& g, int k,
                                      const RecoveryCertificate& cert) {
    if (cert.s != g.s || cert.n != g.n)
        throw std::runtime_error("certificate shape does not match the matrix");
    ValidationReport rep;
    rep.valid = true;
    auto fail = [&](int i, int si, std::string reason) {
        rep.valid = false;
        rep.violations.push_back({i, si, std::move(reason)});
    };
    if (static_cast<int>(cert.sets.size()) != g.s) {
        fail(-1, -1, "certificate must list sets for every information index");
        return rep;
    }
    for (int i = 0; i < g.s; ++i) {
        const auto& list = cert.sets[i];
        if (static_cast<int>(list.size()) < k) fail(i, -1, "fewer than k recovery sets");
        std::vector<char> used(g.n, 0);
        for (int si = 0; si < static_cast<int>(list.size()); ++si) {
            const auto& set = list[si];
            if (set.empty()) {
                fail(i, si, "empty set");
                continue;
            }
            bool in_range = true;
            for (int j : set)
                if (j < 0 || j >= g.n) in_range = false;
            if (!in_range) {
                fail(i, si, "column index out of range");
                continue;
            }
            auto sorted = set;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                fail(i, si, "repeated column index inside one set");
                continue;
            }
            if (xor_of(g, set) != (Point(1) << i)) fail(i, si, "columns do not sum to the unit vector");
            for (int j : set) {
                if (used[j]) fail(i, si, "overlaps an earlier set for this index");
                used[j] = 1;
            }
        }
    }
    return rep;
}

std::map<int, int> cardinality_profile(const std::vector<RecoverySet>& sets) {
    std::map<int, int> profile;
    for (const auto& s : sets) ++profile[static_cast<int>(s.size())];
    return profile;
}

std::string profile_to_string(const std::map<int, int>& profile) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [size, count] : profile) {
        if (!first) out << ' ';
        out << size << '^' << count;
        first = false;
    }
    return out.str();
}

std::vector<RecoverySet> enumerate_minimal_recovery_sets(const GeneratorMatrix& g, int i,
                                                         int lambda, std::size_t candidate_cap) {
    if (i < 0 || i >= g.s) throw std::out_of_range("information index");
    if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
    for (Point c : g.cols)
        if (!c) throw std::runtime_error("zero column in PIR context");
    const Point target = Point(1) << i;
    const int cap = std::min(lambda, std::min(g.s, g.n));
    std::vector<RecoverySet> out;
    RecoverySet cur;
    std::vector<Point> vals;

    auto rec = [&](auto&& self, int start, Point acc) -> void {
        if (acc == target && !cur.empty()) {
            if (independent(vals)) {
                if (out.size() >= candidate_cap)
                    throw budget_error("minimal recovery set enumeration exceeded candidate cap");
                out.push_back(cur);
            }
            return;  // supersets of a recovery set are never minimal
        }
        if (static_cast<int>(cur.size()) >= cap) return;
        for (int j = start; j < g.n; ++j) {
            cur.push_back(j);
            vals.push_back(g.cols[j]);
            self(self, j + 1, acc ^ g.cols[j]);
            cur.pop_back();
            vals.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::stable_sort(out.begin(), out.end(), [](const RecoverySet& a, const RecoverySet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

namespace {

// Exact disjoint set packing over one information index.
struct Packer {
    int n = 0;
    int k = 0;
    std::vector<RecoverySet> cands;       // sorted by (size, lex)
    std::vector<std::uint64_t> masks;     // column mask per candidate
    std::vector<std::vector<int>> by_col; // candidate indices through each column
    long long nodes = 0;
    long long budget = 0;
    int min_size = 1;
    std::vector<RecoverySet> chosen;

    bool exhausted = false;

    bool run() {
        masks.resize(cands.size());
        by_col.assign(n, {});
        min_size = n + 1;
        for (std::size_t t = 0; t < cands.size(); ++t) {
            std::uint64_t m = 0;
            for (int j : cands[t]) m |= 1ull << j;
            masks[t] = m;
            min_size = std::min<int>(min_size, static_cast<int>(cands[t].size()));
            for (int j : cands[t]) by_col[j].push_back(static_cast<int>(t));
        }
        if (min_size > n) min_size = 1;
        chosen.clear();
        return rec(0, 0, 0);
    }

    bool rec(std::uint64_t used, std::uint64_t excluded, int count) {
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        if (count >= k) return true;
        const std::uint64_t blocked = used | excluded;
        // capacity: free columns can host at most free/min_size more sets
        const int free_cols = n - __builtin_popcountll(blocked & ((n == 64) ? ~0ull : ((1ull << n) - 1)));
        if (count + free_cols / min_size < k) return false;
        // fail-first: free column with the fewest compatible candidates
        int best_col = -1;
        int best_count = -1;
        for (int j = 0; j < n; ++j) {
            if ((blocked >> j) & 1) continue;
            int c = 0;
            for (int t : by_col[j])
                if (!(masks[t] & blocked)) ++c;
            if (best_col < 0 || c < best_count) {
                best_col = j;
                best_count = c;
                if (c == 0) break;
            }
        }
        if (best_col < 0) return false;  // no free column left
        for (int t : by_col[best_col]) {
            if (masks[t] & blocked) continue;
            chosen.push_back(cands[t]);
            if (rec(used | masks[t], excluded, count + 1)) return true;
            chosen.pop_back();
            if (exhausted) return false;
        }
        return rec(used, excluded | (1ull << best_col), count);
    }
};

}  // namespace

SearchResult search_certificate(const GeneratorMatrix& g, int k, int lambda,
                                long long node_budget) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (g.n > 64) throw budget_error("packing search limited to n <= 64");
    SearchResult res;
    RecoveryCertificate cert;
    cert.s = g.s;
    cert.n = g.n;
    cert.k = k;
    cert.sets.resize(g.s);
    long long remaining = node_budget;
    for (int i = 0; i < g.s; ++i) {
        Packer p;
        p.n = g.n;
        p.k = k;
        p.cands = enumerate_minimal_recovery_sets(g, i, lambda);
        p.budget = remaining;
        const bool ok = p.run();
        res.nodes += p.nodes;
        remaining -= p.nodes;
        if (p.exhausted) {
            res.status = SearchStatus::budget_exhausted;
            return res;
        }
        if (!ok) {
            res.status = SearchStatus::not_found_within_cap;
            return res;
        }
        cert.sets[i] = p.chosen;
    }
    res.status = SearchStatus::found;
    res.certificate = std::move(cert);
    return res;
}

DecideResult decide_k_pir(const GeneratorMatrix& g, int k, long long node_budget) {
    DecideResult res;
    for (Point c : g.cols)
        if (!c) throw std::runtime_error("zero column in PIR context");
    if (g.s <= 28 && min_distance(g) < k) {
        res.decision = Decision::no;  // k-PIR forces minimum distance >= k
        return res;
    }
    const int lambda_max = std::min(g.s, g.n);
    long long remaining = node_budget;
    for (int lambda = std::min(2, lambda_max); lambda <= lambda_max; ++lambda) {
        SearchResult sr = search_certificate(g, k, lambda, remaining);
        res.nodes += sr.nodes;
        remaining -= sr.nodes;
        res.lambda_reached = lambda;
        if (sr.status == SearchStatus::found) {
            res.decision = Decision::yes;
            res.certificate = std::move(sr.certificate);
            return res;
        }
        if (sr.status == SearchStatus::budget_exhausted) {
            res.decision = Decision::unknown;
            return res;
        }
    }
    // completed the exhaustive lambda without a certificate
    res.decision = Decision::no;
    return res;
}

namespace {

void require_valid(const CertifiedCode& c, const char* what) {
    if (!validate_certificate(c.matrix, c.certificate.k, c.certificate).valid)
        throw std::runtime_error(std::string("combine produced an invalid certificate: ") + what);
}

}  // namespace

CertifiedCode combine_direct_sum(const CertifiedCode& a, const CertifiedCode& b) {
    CertifiedCode out;
    out.matrix = direct_sum(a.matrix, b.matrix);
    out.certificate.s = out.matrix.s;
    out.certificate.n = out.matrix.n;
    out.certificate.k = std::min(a.certificate.k, b.certificate.k);
    out.certificate.sets.resize(out.matrix.s);
    for (int i = 0; i < a.matrix.s; ++i) out.certificate.sets[i] = a.certificate.sets[i];
    for (int i = 0; i < b.matrix.s; ++i) {
        auto shifted = b.certificate.sets[i];
        for (auto& set : shifted)
            for (int& j : set) j += a.matrix.n;
        out.certificate.sets[a.matrix.s + i] = std::move(shifted);
    }
    require_valid(out, "direct_sum");
    return out;
}

CertifiedCode combine_juxtapose(const CertifiedCode& a, const CertifiedCode& b) {
    if (a.matrix.s != b.matrix.s) throw std::runtime_error("juxtapose: dimension mismatch");
    CertifiedCode out;
    out.matrix = juxtapose(a.matrix, b.matrix);
    out.certificate.s = out.matrix.s;
    out.certificate.n = out.matrix.n;
    out.certificate.k = a.certificate.k + b.certificate.k;
    out.certificate.sets.resize(out.matrix.s);
    for (int i = 0; i < a.matrix.s; ++i) {
        auto sets = a.certificate.sets[i];
        for (auto set : b.certificate.sets[i]) {
            for (int& j : set) j += a.matrix.n;
            sets.push_back(std::move(set));
        }
        out.certificate.sets[i] = std::move(sets);
    }
    require_valid(out, "juxtapose");
    return out;
}

CertifiedCode combine_parity_extend(const CertifiedCode& a) {
    const int k = a.certificate.k;
    if (k % 2 == 0) throw std::runtime_error("parity_extend lifts only odd-k certificates");
    CertifiedCode out;
    out.matrix = parity_extend(a.matrix);
    if (!out.matrix.cols.back())
        throw std::runtime_error("parity column is zero (columns already sum to zero)");
    out.certificate.s = out.matrix.s;
    out.certificate.n = out.matrix.n;
    out.certificate.k = k + 1;
    out.certificate.sets.resize(out.matrix.s);
    for (int i = 0; i < a.matrix.s; ++i) {
        std::vector<RecoverySet> sets(a.certificate.sets[i].begin(),
                                      a.certificate.sets[i].begin() + k);
        std::vector<char> used(a.matrix.n, 0);
        for (const auto& set : sets)
            for (int j : set) used[j] = 1;
        RecoverySet fresh{a.matrix.n};  // the parity column
        for (int j = 0; j < a.matrix.n; ++j)
            if (!used[j]) fresh.push_back(j);
        std::sort(fresh.begin(), fresh.end());
        sets.push_back(std::move(fresh));
        out.certificate.sets[i] = std::move(sets);
    }
    require_valid(out, "parity_extend");
    return out;
}

std::string certificate_to_json(const RecoveryCertificate& cert) {
    nlohmann::json j;
    j["s"] = cert.s;
    j["n"] = cert.n;
    j["k"] = cert.k;
    j["sets"] = cert.sets;
    return j.dump(2) + "\n";
}

RecoveryCertificate certificate_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("certificate JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("s") || !j.contains("n") || !j.contains("k") ||
        !j.contains("sets"))
        throw parse_error("certificate JSON must carry s, n, k, sets");
    RecoveryCertificate cert;
    try {
        cert.s = j.at("s").get<int>();
        cert.n = j.at("n").get<int>();
        cert.k = j.at("k").get<int>();
        cert.sets = j.at("sets").get<std::vector<std::vector<RecoverySet>>>();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("certificate JSON shape: ") + e.what());
    }
    return cert;
}

}  // namespace pir
