#include "pir/bounds.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pir/constructions.hpp"

namespace pir {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// exact values P(4,1..8) and P(5,1..16); higher k repeats with period
// 2^{s-1} at stride 2^s - 1
constexpr long long kBase4[9] = {0, 4, 5, 8, 9, 11, 12, 14, 15};
constexpr long long kBase5[17] = {0,  5,  6,  9,  10, 13, 14, 17, 18,
                                  21, 22, 24, 25, 27, 28, 30, 31};

const std::map<std::pair<int, int>, long long>& recorded_lower_constants() {
    static const std::map<std::pair<int, int>, long long> m = {
        {{4, 12}, 24}, {{5, 8}, 18},  {{5, 10}, 22}, {{5, 12}, 25},
        {{6, 8}, 19},  {{6, 12}, 27}, {{6, 14}, 32}, {{6, 16}, 36},
    };
    return m;
}

const std::map<std::pair<int, int>, long long>& recorded_upper_constants() {
    static const std::map<std::pair<int, int>, long long> m = {
        {{6, 4}, 11},  {{6, 6}, 15},  {{6, 10}, 23}, {{6, 12}, 27}, {{6, 14}, 32},
        {{6, 16}, 36}, {{7, 4}, 13},  {{7, 6}, 16},  {{7, 8}, 21},  {{7, 10}, 26},
        {{7, 12}, 29}, {{7, 14}, 34}, {{7, 16}, 39}, {{8, 4}, 14},  {{8, 6}, 18},
        {{8, 8}, 23},  {{8, 10}, 27}, {{8, 12}, 33}, {{8, 14}, 38}, {{8, 16}, 42},
        {{9, 4}, 15},  {{9, 6}, 20},  {{9, 8}, 25},  {{9, 12}, 37}, {{9, 14}, 40},
        {{9, 16}, 45}, {{10, 4}, 16}, {{10, 6}, 21}, {{10, 8}, 26}, {{10, 10}, 31},
        {{10, 12}, 40}, {{10, 14}, 45}, {{10, 16}, 50},
    };
    return m;
}

std::optional<long long> closed_form(int s, int k) {
    if (s == 1) return k;
    if (s == 2) return (3LL * k + 1) / 2;
    if (s == 3 && k % 2 == 0) return (7LL * k + 3) / 4;
    if (s == 4) {
        const int tau = (k - 1) / 8;
        return kBase4[k - 8 * tau] + 15LL * tau;
    }
    if (s == 5) {
        const int tau = (k - 1) / 16;
        return kBase5[k - 16 * tau] + 31LL * tau;
    }
    return std::nullopt;
}

const char* closed_form_rule(int s) {
    static const char* names[6] = {nullptr,         "closed-form-s1", "closed-form-s2",
                                   "closed-form-s3", "closed-form-s4", "closed-form-s5"};
    return names[s];
}

long long isqrt_ll(long long x) {
    long long r = 0, bit = 1LL << 62;
    while (bit > x) bit >>= 2;
    while (bit) {
        if (x >= r + bit) {
            x -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return r;
}

int remove_lines_cap(int s) { return ((1 << (s - 1)) - 3 - (s % 2 == 0 ? 2 : -2)) / 3; }

long long catalog_min_length(int s, int k) {
    long long best = kInf;
    for (const auto& entry : catalog_entries())
        if (entry.kind == EntryKind::certified && entry.s == s && entry.k == k)
            best = std::min<long long>(best, entry.n);
    return best;
}

const CatalogEntry& catalog_by_id(const std::string& id) {
    for (const auto& entry : catalog_entries())
        if (entry.id == id) return entry;
    throw std::logic_error("catalog id missing: " + id);
}

}  // namespace

long long griesmer(int s, int k) {
    if (s < 1 || k < 1) throw std::invalid_argument("griesmer needs s, k >= 1");
    long long sum = 0;
    long long q = 1;
    for (int i = 0; i < s; ++i) {
        sum += (k + q - 1) / q;
        if (q <= (1LL << 40)) q *= 2;
    }
    return sum;
}

const NTable& NTable::embedded() {
    static const NTable table = [] {
        NTable t;
        struct Row {
            int s, k;
            long long v;
        };
        static const Row rows[] = {
            {4, 12, 23},  {5, 6, 14},   {5, 8, 16},   {6, 6, 15},   {6, 8, 18},
            {6, 10, 23},  {6, 12, 26},  {6, 14, 30},  {7, 6, 16},   {7, 8, 19},
            {7, 10, 24},  {7, 12, 27},  {7, 14, 32},  {7, 16, 35},  {8, 6, 17},
            {8, 8, 20},   {8, 10, 26},  {8, 12, 29},  {8, 14, 33},  {8, 16, 36},
            {9, 6, 18},   {9, 8, 21},   {9, 10, 27},  {9, 12, 30},  {9, 14, 35},
            {9, 16, 38},  {10, 6, 20},  {10, 8, 22},  {10, 10, 28}, {10, 12, 31},
            {10, 14, 36}, {10, 16, 40}, {12, 8, 24},  {92, 5, 106},
        };
        for (const auto& r : rows) t.set(r.s, r.k, r.v, Source::embedded);
        return t;
    }();
    return table;
}

void NTable::set(int s, int k, long long value, Source source) {
    if (value < griesmer(s, k))
        throw parse_error("N-table entry below the Griesmer value");
    entries_[{s, k}] = {value, source};
}

void NTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open N-table file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        int s, k;
        long long v;
        if (!(row >> s)) continue;  // blank
        if (!(row >> k >> v) || s < 1 || k < 1)
            throw parse_error("bad N-table line " + std::to_string(lineno));
        std::string extra;
        if (row >> extra) throw parse_error("bad N-table line " + std::to_string(lineno));
        set(s, k, v, Source::user_file);
    }
}

long long NTable::value(int s, int k) const {
    const auto it = entries_.find({s, k});
    return it == entries_.end() ? griesmer(s, k) : it->second.first;
}

NTable::Source NTable::source(int s, int k) const {
    const auto it = entries_.find({s, k});
    return it == entries_.end() ? Source::griesmer : it->second.second;
}

long long n_lower(int s, int k, const NTable& table) { return table.value(s, k); }

long long hyperplane_avg_lower(int s, int k) {
    if (s < 1 || k < 1) throw std::invalid_argument("hyperplane_avg_lower needs s, k >= 1");
    const long long num = static_cast<long long>(k) * ((1LL << s) - 1);
    const long long den = 1LL << (s - 1);
    return (num + den - 1) / den;
}

long long rao_vardy_lower(int s, int k) {
    if (k < 3) throw std::invalid_argument("rao_vardy_lower needs k >= 3");
    if (s < 1) throw std::invalid_argument("rao_vardy_lower needs s >= 1");
    const long long d = 8LL * s + 1;
    long long t = isqrt_ll(d);
    if (t * t < d) ++t;  // smallest t with t^2 >= 8s+1
    const long long m = (t % 2 == 0) ? (t + 2) / 2 : (t + 1) / 2;
    return s + m + k - 3;
}

long long dual_distance_lower(long long k, long long d_perp, DualMode mode) {
    if (d_perp < 1) throw std::invalid_argument("dual distance must be >= 1");
    if (mode == DualMode::general) {
        if (k < 2) throw std::invalid_argument("general mode needs k >= 2");
        const long long half = (d_perp + 1) / 2;
        return d_perp % 2 ? k * half - 1 : k * half;
    }
    if (k < 1) throw std::invalid_argument("unit-column mode needs k >= 1");
    return 1 + (k - 1) * (d_perp - 1);
}

std::optional<long long> reed_muller_lower(int s, int k) {
    if (s < 4) return std::nullopt;
    const long long quarter = 1LL << (s - 2), half = 1LL << (s - 1);
    if (k < quarter || (k - quarter) % half) return std::nullopt;
    const long long l = (k - quarter) / half;
    return l * ((1LL << s) - 1) + half + 1;
}

PeriodicityReduction periodicity_reduce(int s, int k, long long base_upper_hint) {
    if (s < 2 || k < 1) throw std::invalid_argument("periodicity_reduce needs s >= 2, k >= 1");
    const int half = 1 << (s - 1);
    PeriodicityReduction out{s, k, 0, 0};
    const int k0 = ((k - 1) % half) + 1;
    const int layers_total = (k - k0) / half;
    if (layers_total == 0) return out;
    const long long min_layer = std::max<long long>(1, base_upper_hint - 2LL * k0);
    if (layers_total < min_layer) return out;
    out.layers = static_cast<int>(layers_total - min_layer + 1);
    out.k = k - out.layers * half;
    out.offset = static_cast<long long>(out.layers) * ((1LL << s) - 1);
    return out;
}

long long multiplicity_cap(int s, int k, long long n) {
    if (s < 2) throw std::invalid_argument("multiplicity_cap needs s >= 2");
    const long long num = static_cast<long long>(k) * ((1LL << (s - 1)) - 1);
    const long long den = 1LL << (s - 2);
    return n - (num + den - 1) / den;
}

std::string trace_to_string(const TraceStep& step, int indent) {
    std::ostringstream out;
    out << std::string(indent * 2, ' ')
        << (step.direction == Direction::lower ? "lower" : "upper") << "(" << step.s << ","
        << step.k << ") = " << step.value << " via " << step.rule;
    if (!step.detail.empty()) out << " [" << step.detail << "]";
    out << "\n";
    for (const auto& child : step.children) out << trace_to_string(child, indent + 1);
    return out.str();
}

BoundsEngine::Choice& BoundsEngine::cell(std::vector<std::vector<Choice>>& g, int s, int k) {
    return g[s][k];
}
const BoundsEngine::Choice& BoundsEngine::cell(const std::vector<std::vector<Choice>>& g, int s,
                                               int k) const {
    return g[s][k];
}

void BoundsEngine::check_range(int s, int k) const {
    if (s < 1 || s > s_max_ || k < 1 || k > k_max_)
        throw std::out_of_range("cell outside the engine grid");
}

BoundsEngine::BoundsEngine(const NTable& table, int s_max, int k_max)
    : table_(table), s_max_(s_max), k_max_(k_max) {
    if (s_max_ < 1 || s_max_ > 20 || k_max_ < 1)
        throw std::invalid_argument("unreasonable engine grid");
    Choice blank;
    lower_.assign(s_max_ + 1, std::vector<Choice>(k_max_ + 1, blank));
    upper_.assign(s_max_ + 1, std::vector<Choice>(k_max_ + 1, blank));
    mat_.assign(s_max_ + 1, std::vector<Choice>(k_max_ + 1, blank));
    for (auto* grid : {&lower_, &upper_, &mat_})
        for (auto& row : *grid)
            for (auto& c : row) c.value = (grid == &lower_) ? 0 : kInf;
    run_fixpoint();
}

void BoundsEngine::run_fixpoint() {
    using Pred = std::tuple<int, int, Direction>;
    auto improve_min = [](Choice& c, long long v, const char* rule, std::string detail,
                          std::vector<Pred> preds) {
        if (v >= c.value) return false;
        c.value = v;
        c.rule = rule;
        c.detail = std::move(detail);
        c.preds = std::move(preds);
        return true;
    };
    auto improve_max = [](Choice& c, long long v, const char* rule, std::string detail,
                          std::vector<Pred> preds) {
        if (v <= c.value) return false;
        c.value = v;
        c.rule = rule;
        c.detail = std::move(detail);
        c.preds = std::move(preds);
        return true;
    };

    // ---- upper grid: base rules, then combination edges to fixpoint ----
    for (int s = 1; s <= s_max_; ++s)
        for (int k = 1; k <= k_max_; ++k) {
            Choice& c = upper_[s][k];
            const long long cat = catalog_min_length(s, k);
            if (cat < kInf) {
                std::string id;
                for (const auto& e : catalog_entries())
                    if (e.kind == EntryKind::certified && e.s == s && e.k == k && e.n == cat) {
                        id = e.id;
                        break;
                    }
                improve_min(c, cat, "catalog", id, {});
            }
            if (s >= 1 && k == (1 << (s - 1)))
                improve_min(c, (1LL << s) - 1, "simplex", "", {});
            if (s >= 3 && k % 2 == 0) {
                const int lambda = ((1 << (s - 1)) - k) / 2;
                if (lambda >= 1 && lambda <= remove_lines_cap(s))
                    improve_min(c, (1LL << s) - 1 - 3LL * lambda, "remove-lines",
                                "lambda=" + std::to_string(lambda), {});
            }
            if (k == 1) improve_min(c, s, "identity", "", {});
            if (const auto cf = closed_form(s, k))
                improve_min(c, *cf, closed_form_rule(s), "", {});
            const auto rec = recorded_upper_constants().find({s, k});
            if (rec != recorded_upper_constants().end())
                improve_min(c, rec->second, "recorded-upper", "", {});
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 1; s <= s_max_; ++s)
            for (int k = 1; k <= k_max_; ++k) {
                Choice& c = upper_[s][k];
                if (k + 1 <= k_max_ && upper_[s][k + 1].rule)
                    changed |= improve_min(c, upper_[s][k + 1].value - 1, "puncture", "",
                                           {{s, k + 1, Direction::upper}});
                if (k % 2 == 0 && upper_[s][k - 1].rule)
                    changed |= improve_min(c, upper_[s][k - 1].value + 1, "parity-extend", "",
                                           {{s, k - 1, Direction::upper}});
                for (int k1 = 1; k1 <= k / 2; ++k1) {
                    if (!upper_[s][k1].rule || !upper_[s][k - k1].rule) continue;
                    changed |= improve_min(c, upper_[s][k1].value + upper_[s][k - k1].value,
                                           "juxtapose", "",
                                           {{s, k1, Direction::upper}, {s, k - k1, Direction::upper}});
                }
                for (int s1 = 1; s1 <= s / 2; ++s1) {
                    if (!upper_[s1][k].rule || !upper_[s - s1][k].rule) continue;
                    changed |= improve_min(c, upper_[s1][k].value + upper_[s - s1][k].value,
                                           "direct-sum", "",
                                           {{s1, k, Direction::upper}, {s - s1, k, Direction::upper}});
                }
                if (s >= 2 && upper_[s - 1][k].rule)
                    changed |= improve_min(c, upper_[s - 1][k].value + (k + 1) / 2, "lengthen", "",
                                           {{s - 1, k, Direction::upper}});
            }
    }
    for (int s = 1; s <= s_max_; ++s)
        for (int k = 1; k <= k_max_; ++k)
            if (!upper_[s][k].rule) throw std::logic_error("upper grid has an unreachable cell");

    // ---- lower grid: base rules, then monotonicity edges ----
    for (int s = 1; s <= s_max_; ++s)
        for (int k = 1; k <= k_max_; ++k) {
            Choice& c = lower_[s][k];
            if (const auto cf = closed_form(s, k))
                improve_max(c, *cf, closed_form_rule(s), "", {});
            const bool have_entry = table_.source(s, k) != NTable::Source::griesmer;
            improve_max(c, table_.value(s, k), have_entry ? "n-table" : "griesmer",
                        have_entry
                            ? (table_.source(s, k) == NTable::Source::embedded ? "embedded"
                                                                               : "user file")
                            : "",
                        {});
            improve_max(c, hyperplane_avg_lower(s, k), "hyperplane-average", "", {});
            if (k >= 3) improve_max(c, rao_vardy_lower(s, k), "rao-vardy", "", {});
            if (const auto rm = reed_muller_lower(s, k)) improve_max(c, *rm, "reed-muller", "", {});
            const auto rec = recorded_lower_constants().find({s, k});
            if (rec != recorded_lower_constants().end())
                improve_max(c, rec->second, "recorded-lower", "", {});
        }
    changed = true;
    while (changed) {
        changed = false;
        for (int s = 1; s <= s_max_; ++s)
            for (int k = 1; k <= k_max_; ++k) {
                Choice& c = lower_[s][k];
                if (k >= 2 && lower_[s][k - 1].rule)
                    changed |= improve_max(c, lower_[s][k - 1].value + 1, "puncture-step", "",
                                           {{s, k - 1, Direction::lower}});
                if (k % 2 == 1 && k + 1 <= k_max_ && lower_[s][k + 1].rule)
                    changed |= improve_max(c, lower_[s][k + 1].value - 1, "parity-equality", "",
                                           {{s, k + 1, Direction::lower}});
                if (s >= 2) {
                    const int base = k - (1 << (s - 1));
                    if (base >= 1 && lower_[s][base].rule &&
                        upper_[s][base].value <= 2LL * base + 1)
                        changed |= improve_max(c, lower_[s][base].value + (1LL << s) - 1,
                                               "periodic-shift", "",
                                               {{s, base, Direction::lower},
                                                {s, base, Direction::upper}});
                }
            }
    }
    for (int s = 1; s <= s_max_; ++s)
        for (int k = 1; k <= k_max_; ++k)
            if (!lower_[s][k].rule) throw std::logic_error("lower grid has an unreachable cell");

    // ---- constructible grid: same combination edges, construction bases only ----
    for (int s = 1; s <= s_max_; ++s)
        for (int k = 1; k <= k_max_; ++k) {
            Choice& c = mat_[s][k];
            const Choice& u = upper_[s][k];
            if (u.rule && std::string(u.rule) == "catalog")
                improve_min(c, u.value, "catalog", u.detail, {});
            else {
                const long long cat = catalog_min_length(s, k);
                if (cat < kInf) {
                    std::string id;
                    for (const auto& e : catalog_entries())
                        if (e.kind == EntryKind::certified && e.s == s && e.k == k && e.n == cat) {
                            id = e.id;
                            break;
                        }
                    improve_min(c, cat, "catalog", id, {});
                }
            }
            if (k == (1 << (s - 1))) improve_min(c, (1LL << s) - 1, "simplex", "", {});
            if (s >= 3 && k % 2 == 0) {
                const int lambda = ((1 << (s - 1)) - k) / 2;
                if (lambda >= 1 && lambda <= remove_lines_cap(s))
                    improve_min(c, (1LL << s) - 1 - 3LL * lambda, "remove-lines",
                                "lambda=" + std::to_string(lambda), {});
            }
            if (k == 1) improve_min(c, s, "identity", "", {});
        }
    changed = true;
    while (changed) {
        changed = false;
        for (int s = 1; s <= s_max_; ++s)
            for (int k = 1; k <= k_max_; ++k) {
                Choice& c = mat_[s][k];
                if (k + 1 <= k_max_ && mat_[s][k + 1].rule)
                    changed |= improve_min(c, mat_[s][k + 1].value - 1, "puncture", "",
                                           {{s, k + 1, Direction::upper}});
                if (k % 2 == 0 && mat_[s][k - 1].rule)
                    changed |= improve_min(c, mat_[s][k - 1].value + 1, "parity-extend", "",
                                           {{s, k - 1, Direction::upper}});
                for (int k1 = 1; k1 <= k / 2; ++k1) {
                    if (!mat_[s][k1].rule || !mat_[s][k - k1].rule) continue;
                    changed |= improve_min(c, mat_[s][k1].value + mat_[s][k - k1].value,
                                           "juxtapose", "",
                                           {{s, k1, Direction::upper}, {s, k - k1, Direction::upper}});
                }
                for (int s1 = 1; s1 <= s / 2; ++s1) {
                    if (!mat_[s1][k].rule || !mat_[s - s1][k].rule) continue;
                    changed |= improve_min(c, mat_[s1][k].value + mat_[s - s1][k].value,
                                           "direct-sum", "",
                                           {{s1, k, Direction::upper}, {s - s1, k, Direction::upper}});
                }
                if (s >= 2 && mat_[s - 1][k].rule)
                    changed |= improve_min(c, mat_[s - 1][k].value + (k + 1) / 2, "lengthen", "",
                                           {{s - 1, k, Direction::upper}});
            }
    }
}

TraceStep BoundsEngine::build_trace(int s, int k, Direction dir) const {
    const Choice& c = dir == Direction::lower ? lower_[s][k] : upper_[s][k];
    TraceStep step;
    step.rule = c.rule;
    step.s = s;
    step.k = k;
    step.direction = dir;
    step.detail = c.detail;
    step.value = c.value;
    for (const auto& [ps, pk, pdir] : c.preds) step.children.push_back(build_trace(ps, pk, pdir));
    return step;
}

BoundResult BoundsEngine::best_lower(int s, int k) const {
    check_range(s, k);
    return {lower_[s][k].value, Direction::lower, build_trace(s, k, Direction::lower)};
}

BoundResult BoundsEngine::best_upper(int s, int k) const {
    check_range(s, k);
    return {upper_[s][k].value, Direction::upper, build_trace(s, k, Direction::upper)};
}

bool BoundsEngine::materializable(int s, int k) const {
    check_range(s, k);
    return mat_[s][k].rule && mat_[s][k].value == upper_[s][k].value;
}

namespace {

CertifiedCode identity_code(int s) {
    PointMultiset ms;
    ms.s = s;
    for (int i = 0; i < s; ++i) ms.mult[Point(1) << i] = 1;
    ms.n = s;
    CertifiedCode out;
    out.matrix = multiset_to_matrix(ms);
    std::vector<int> idx(std::size_t(1) << s, -1);
    for (int j = 0; j < out.matrix.n; ++j) idx[out.matrix.cols[j]] = j;
    out.certificate.s = s;
    out.certificate.n = s;
    out.certificate.k = 1;
    out.certificate.sets.resize(s);
    for (int i = 0; i < s; ++i) out.certificate.sets[i] = {{idx[Point(1) << i]}};
    return out;
}

CertifiedCode puncture_certified(const CertifiedCode& child, int k) {
    const int drop = child.matrix.n - 1;
    CertifiedCode out;
    out.matrix = puncture(child.matrix, drop);
    out.certificate.s = child.certificate.s;
    out.certificate.n = out.matrix.n;
    out.certificate.k = k;
    out.certificate.sets.resize(child.certificate.s);
    for (int i = 0; i < child.certificate.s; ++i)
        for (const auto& set : child.certificate.sets[i])
            if (!std::binary_search(set.begin(), set.end(), drop))
                out.certificate.sets[i].push_back(set);
    if (!validate_certificate(out.matrix, k, out.certificate).valid)
        throw std::logic_error("puncture lost more than one set per index");
    return out;
}

// One-row lengthening: t = ceil(k/2) new unit columns; the extension row marks
// the first column of every second recovery set of index 1, so their pairwise
// unions become disjoint zero-sum sets of odd parity for the new index.
CertifiedCode lengthen_certified(const CertifiedCode& base) {
    const GeneratorMatrix& g = base.matrix;
    const int k = base.certificate.k;
    const int t = (k + 1) / 2, pairs = k / 2;
    std::vector<char> rbit(g.n, 0);
    for (int j = 0; j < pairs; ++j) rbit[base.certificate.sets[0][2 * j + 1].front()] = 1;
    CertifiedCode out;
    out.matrix.s = g.s + 1;
    out.matrix.n = g.n + t;
    for (int j = 0; j < g.n; ++j)
        out.matrix.cols.push_back(g.cols[j] | (Point(rbit[j]) << g.s));
    for (int j = 0; j < t; ++j) out.matrix.cols.push_back(Point(1) << g.s);
    auto& cert = out.certificate;
    cert.s = out.matrix.s;
    cert.n = out.matrix.n;
    cert.k = k;
    cert.sets.resize(cert.s);
    for (int i = 0; i < g.s; ++i) {
        int next_new = g.n;
        for (int j = 0; j < k; ++j) {
            RecoverySet set = base.certificate.sets[i][j];
            int flips = 0;
            for (int col : set) flips ^= rbit[col];
            if (flips) set.push_back(next_new++);
            cert.sets[i].push_back(std::move(set));
        }
    }
    for (int j = 0; j < t; ++j) cert.sets[g.s].push_back({g.n + j});
    for (int j = 0; j < pairs; ++j) {
        RecoverySet z = base.certificate.sets[0][2 * j];
        const auto& other = base.certificate.sets[0][2 * j + 1];
        z.insert(z.end(), other.begin(), other.end());
        std::sort(z.begin(), z.end());
        cert.sets[g.s].push_back(std::move(z));
    }
    if (!validate_certificate(out.matrix, k, cert).valid)
        throw std::logic_error("lengthening rewrite produced an invalid certificate");
    return out;
}

}  // namespace

CertifiedCode BoundsEngine::materialize_cell(int s, int k) const {
    const Choice& c = mat_[s][k];
    if (!c.rule) throw std::runtime_error("no construction rule reaches this cell");
    const std::string rule = c.rule;
    if (rule == "catalog") {
        const CatalogEntry& entry = catalog_by_id(c.detail);
        if (!entry.certificate)
            throw std::runtime_error("catalog entry lacks a certificate: " + entry.id);
        return {entry.matrix, *entry.certificate};
    }
    if (rule == "simplex") return simplex(s);
    if (rule == "remove-lines") return remove_lines(s, ((1 << (s - 1)) - k) / 2);
    if (rule == "identity") return identity_code(s);
    if (rule == "puncture") return puncture_certified(materialize_cell(s, k + 1), k);
    if (rule == "parity-extend") return combine_parity_extend(materialize_cell(s, k - 1));
    if (rule == "juxtapose") {
        const auto& [s1, k1, d1] = c.preds.at(0);
        const auto& [s2, k2, d2] = c.preds.at(1);
        return combine_juxtapose(materialize_cell(s1, k1), materialize_cell(s2, k2));
    }
    if (rule == "direct-sum") {
        const auto& [s1, k1, d1] = c.preds.at(0);
        const auto& [s2, k2, d2] = c.preds.at(1);
        return combine_direct_sum(materialize_cell(s1, k1), materialize_cell(s2, k2));
    }
    if (rule == "lengthen") return lengthen_certified(materialize_cell(s - 1, k));
    throw std::logic_error("unknown construction rule: " + rule);
}

CertifiedCode BoundsEngine::materialize_upper(int s, int k) const {
    check_range(s, k);
    if (!materializable(s, k))
        throw std::runtime_error("best upper bound is not construction-backed for this cell");
    CertifiedCode code = materialize_cell(s, k);
    if (code.matrix.n != upper_[s][k].value)
        throw std::logic_error("materialized length differs from the bound");
    if (!validate_certificate(code.matrix, k, code.certificate).valid)
        throw std::logic_error("materialized certificate invalid");
    return code;
}

long long BoundsEngine::reevaluate(const TraceStep& step) const {
    const std::string& r = step.rule;
    if (r == "griesmer") return griesmer(step.s, step.k);
    if (r == "n-table") return table_.value(step.s, step.k);
    if (r == "hyperplane-average") return hyperplane_avg_lower(step.s, step.k);
    if (r == "rao-vardy") return rao_vardy_lower(step.s, step.k);
    if (r == "reed-muller") return reed_muller_lower(step.s, step.k).value();
    if (r.rfind("closed-form-s", 0) == 0) return closed_form(step.s, step.k).value();
    if (r == "recorded-lower") return recorded_lower_constants().at({step.s, step.k});
    if (r == "recorded-upper") return recorded_upper_constants().at({step.s, step.k});
    if (r == "catalog") return catalog_min_length(step.s, step.k);
    if (r == "simplex") return (1LL << step.s) - 1;
    if (r == "remove-lines")
        return (1LL << step.s) - 1 - 3LL * (((1 << (step.s - 1)) - step.k) / 2);
    if (r == "identity") return step.s;
    if (r == "puncture") return reevaluate(step.children.at(0)) - 1;
    if (r == "parity-extend") return reevaluate(step.children.at(0)) + 1;
    if (r == "juxtapose" || r == "direct-sum")
        return reevaluate(step.children.at(0)) + reevaluate(step.children.at(1));
    if (r == "lengthen") return reevaluate(step.children.at(0)) + (step.k + 1) / 2;
    if (r == "puncture-step") return reevaluate(step.children.at(0)) + 1;
    if (r == "parity-equality") return reevaluate(step.children.at(0)) - 1;
    if (r == "periodic-shift") {
        const auto& base = step.children.at(0);
        const auto& hint = step.children.at(1);
        if (reevaluate(hint) > 2LL * hint.k + 1)
            throw std::logic_error("periodic shift applied outside its validity range");
        return reevaluate(base) + (1LL << step.s) - 1;
    }
    throw std::logic_error("unknown trace rule: " + r);
}

BoundResult best_lower(int s, int k, const NTable& table) {
    if (&table == &NTable::embedded()) {
        static const BoundsEngine engine;
        return engine.best_lower(s, k);
    }
    return BoundsEngine(table).best_lower(s, k);
}

BoundResult best_upper(int s, int k) {
    static const BoundsEngine engine;
    return engine.best_upper(s, k);
}

}  // namespace pir
