#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pir/gf2.hpp"
#include "pir/recovery.hpp"

namespace pir {

// Griesmer-style floor for N(s,k): sum of ceil(k / 2^i) over i < s.
long long griesmer(int s, int k);

// Best known lengths N(s,k) of linear [n,s,>=k] codes; falls back to the
// Griesmer value when no entry is stored.
class NTable {
  public:
    enum class Source { embedded, user_file, griesmer };

    NTable() = default;
    static const NTable& embedded();

    // Lines "s k value" with '#' comments; entries below Griesmer are rejected.
    void load_file(const std::string& path);
    void set(int s, int k, long long value, Source source);

    long long value(int s, int k) const;
    Source source(int s, int k) const;

  private:
    std::map<std::pair<int, int>, std::pair<long long, Source>> entries_;
};

long long n_lower(int s, int k, const NTable& table);

// ceil(k (2^s - 1) / 2^{s-1}): averaging over hyperplane complements.
long long hyperplane_avg_lower(int s, int k);

// s + m + k - 3 with m the smallest integer satisfying (2m-1)^2 >= 8s+1,
// in exact integer arithmetic. Requires k >= 3.
long long rao_vardy_lower(int s, int k);

enum class DualMode { general, unit_column };

// Length bounds forced by the dual distance of any k-PIR generator matrix:
// general: k ceil(d/2) - 1 for odd d, k ceil(d/2) for even d (k >= 2);
// unit_column: 1 + (k-1)(d-1).
long long dual_distance_lower(long long k, long long d_perp, DualMode mode);

// l (2^s - 1) + 2^{s-1} + 1 when k = 2^{s-2} + l 2^{s-1}, s >= 4; else nothing.
std::optional<long long> reed_muller_lower(int s, int k);

struct PeriodicityReduction {
    int s = 0;
    int k = 0;          // reduced k
    long long offset = 0;  // add back to bounds of the reduced cell
    int layers = 0;        // layers of 2^{s-1} peeled
};

// Peels layers of 2^{s-1} off k; layer l is peelable when
// l >= base_upper_hint - 2 k0 with k0 = ((k-1) mod 2^{s-1}) + 1 the full base.
// The hint must be a sound upper bound for P(s, k0).
PeriodicityReduction periodicity_reduce(int s, int k, long long base_upper_hint);

// Largest admissible repetition count of one column in an (s,k) code of
// length n: n - ceil(k (2^{s-1} - 1) / 2^{s-2}). Negative means (s,k,n) is
// infeasible outright.
long long multiplicity_cap(int s, int k, long long n);

enum class Direction { lower, upper };

struct TraceStep {
    std::string rule;
    int s = 0;
    int k = 0;
    Direction direction = Direction::lower;
    std::string detail;               // rule-specific inputs, human-readable
    long long value = 0;
    std::vector<TraceStep> children;  // sub-bounds this step consumed
};

struct BoundResult {
    long long value = 0;
    Direction direction = Direction::lower;
    TraceStep trace;
};

std::string trace_to_string(const TraceStep& step, int indent = 0);

// Fixpoint rule engine over the grid s <= s_max, k <= k_max.
class BoundsEngine {
  public:
    explicit BoundsEngine(const NTable& table = NTable::embedded(), int s_max = 12,
                          int k_max = 40);

    int s_max() const { return s_max_; }
    int k_max() const { return k_max_; }
    const NTable& table() const { return table_; }

    BoundResult best_lower(int s, int k) const;
    BoundResult best_upper(int s, int k) const;

    // True when the best upper bound is reachable by construction rules alone;
    // materialize_upper then emits a certified code of that exact length.
    bool materializable(int s, int k) const;
    CertifiedCode materialize_upper(int s, int k) const;

    // Recomputes the step from its children; used to check traces reproduce.
    long long reevaluate(const TraceStep& step) const;

  private:
    struct Choice {
        const char* rule = nullptr;
        long long value = -1;
        std::string detail;
        // predecessor cells: (s, k, direction)
        std::vector<std::tuple<int, int, Direction>> preds;
    };

    NTable table_;
    int s_max_;
    int k_max_;
    std::vector<std::vector<Choice>> lower_, upper_, mat_;

    Choice& cell(std::vector<std::vector<Choice>>& g, int s, int k);
    const Choice& cell(const std::vector<std::vector<Choice>>& g, int s, int k) const;
    void check_range(int s, int k) const;
    void run_fixpoint();
    TraceStep build_trace(int s, int k, Direction dir) const;
    CertifiedCode materialize_cell(int s, int k) const;
};

// Convenience single-shot queries against an engine with the embedded table.
BoundResult best_lower(int s, int k, const NTable& table = NTable::embedded());
BoundResult best_upper(int s, int k);

}  // namespace pir
