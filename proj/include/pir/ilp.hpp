#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pir/gf2.hpp"
#include "pir/recovery.hpp"

namespace pir {

enum class Sense { le, ge, eq };

struct IlpVariable {
    std::string name;
    long long lb = 0;
    long long ub = 0;
    bool integral = true;
};

struct IlpTerm {
    int var = -1;
    long long coeff = 0;
};

struct IlpConstraint {
    std::string name;
    std::vector<IlpTerm> terms;
    Sense sense = Sense::ge;
    long long rhs = 0;
};

enum class IlpMode { exact, lower };

struct BuildFlags {
    bool systematic = false;   // x_{e_i} >= 1
    bool projective = false;   // x_j in {0,1}
    bool lemma8_cut = false;   // multiplicity-cap rows (valid, off by default)
    bool repeat_cap = false;   // x_j <= k (unproven heuristic, off by default)
    bool order_units = false;  // x_{e_1} >= ... >= x_{e_s} symmetry breaking
};

// x-variables: one per nonzero point of F_2^s, ascending point value.
// y-variables: one per (unit index i, minimal recovery set of <= lambda
// points), enumerated per i in the order enumerate_minimal_recovery_sets
// emits. Orbit merging keeps the members of each variable in x_points /
// y_members so assignments can be expanded back to the full model.
struct IlpModel {
    int s = 0;
    int k = 0;
    int lambda = 0;
    IlpMode mode = IlpMode::exact;
    BuildFlags flags;
    std::vector<IlpVariable> vars;
    std::vector<IlpConstraint> cons;
    std::vector<IlpTerm> objective;  // always minimized
    int x_count = 0;                 // vars [0, x_count) are column counts
    std::vector<std::vector<Point>> x_points;
    std::vector<std::vector<std::pair<int, std::vector<Point>>>> y_members;
};

// Length-minimizing model whose feasible points carry k disjoint recovery
// sets of size <= lambda per index; optimum is a constructive upper bound
// for P(s,k), exact once lambda covers every minimal recovery set.
IlpModel build_exact(int s, int k, int lambda, const BuildFlags& flags = {});

// Relaxation sound for arbitrary recovery-set sizes: its optimum is a lower
// bound on P(s,k) for every lambda >= 2.
IlpModel build_lower(int s, int k, int lambda);

// Kramer-Mesner reduction: identify variables along orbits of the coordinate
// permutations generated by `generators` (images of 0..s-1), merge duplicate
// rows. Representatives are the least members.
IlpModel apply_symmetry(const IlpModel& model, const std::vector<std::vector<int>>& generators);

enum class SolveStatus { optimal, infeasible, bounds_interval, budget };

struct SolveOptions {
    long long node_budget = 10'000'000;
    // Externally proven floor on the optimum (e.g. from the bounds module for
    // an exact-mode model). The search stops as soon as an incumbent meets
    // it, and budgeted runs never report a weaker proven bound. An invalid
    // seed (above the true optimum) makes the outcome wrong; leave the
    // default when in doubt.
    long long seed_lower = -(1LL << 60);
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::budget;
    long long objective = -1;    // incumbent value when one exists
    long long proven_lower = 0;  // best proven bound on the optimum
    std::vector<long long> assignment;  // incumbent, parallel to model.vars
    long long nodes = 0;

    std::string trailer() const;  // "nodes=<n> status=<s> obj=<v>"
};

// Exact branch and bound over the integer box: interval propagation on every
// row, incumbent cutoff, and a residual demand bound from rows whose
// coefficients match the objective. Deterministic node order.
SolveOutcome solve(const IlpModel& model, const SolveOptions& options = {});

// Turns an exact-mode assignment into a certified code; throws when the
// assignment cannot be read back as a valid certificate (a model bug).
std::pair<GeneratorMatrix, RecoveryCertificate> extract_code(const IlpModel& model,
                                                             const SolveOutcome& outcome);

// Deterministic LP text (Minimize / Subject To / Bounds / General / End);
// names x_<hex point> and y_<i>_<16-digit FNV-1a of the point list>.
std::string export_lp(const IlpModel& model);

}  // namespace pir
