#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pir/gf2.hpp"

namespace pir {

// Column indices into a GeneratorMatrix, kept sorted ascending.
using RecoverySet = std::vector<int>;

struct RecoveryCertificate {
    int s = 0;
    int n = 0;
    int k = 0;
    // sets[i] = recovery sets for e_{i+1} (0-based i), each XOR-summing to e_{i+1},
    // pairwise disjoint within one i.
    std::vector<std::vector<RecoverySet>> sets;
};

struct Violation {
    int i = 0;          // information index, 0-based
    int set_index = -1; // -1 when the whole index is at fault
    std::string reason;
};

struct ValidationReport {
    bool valid = false;
    std::vector<Violation> violations;
};

ValidationReport validate_certificate(const GeneratorMatrix& g, int k,
                                      const RecoveryCertificate& cert);

// Size multiset of the recovery sets of one index, e.g. 1^1 2^7.
std::map<int, int> cardinality_profile(const std::vector<RecoverySet>& sets);
std::string profile_to_string(const std::map<int, int>& profile);

// All minimal recovery sets for e_{i+1} with at most lambda columns.
// Minimal sets have linearly independent columns, hence size <= s; the
// enumeration is complete for lambda >= min(s, n). Output sorted by size then
// lexicographic. candidate_cap bounds the output size (budget error beyond it).
std::vector<RecoverySet> enumerate_minimal_recovery_sets(const GeneratorMatrix& g, int i,
                                                         int lambda,
                                                         std::size_t candidate_cap = 5'000'000);

enum class SearchStatus { found, not_found_within_cap, budget_exhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::not_found_within_cap;
    std::optional<RecoveryCertificate> certificate;
    long long nodes = 0;
};

// Exact disjoint packing of k recovery sets per index, sets capped at lambda
// columns. not_found_within_cap proves no certificate with sets of size
// <= lambda exists.
SearchResult search_certificate(const GeneratorMatrix& g, int k, int lambda,
                                long long node_budget = 10'000'000);

enum class Decision { yes, no, unknown };

struct DecideResult {
    Decision decision = Decision::unknown;
    std::optional<RecoveryCertificate> certificate;
    int lambda_reached = 0;
    long long nodes = 0;
};

// Escalates lambda from 2; a completed run at lambda = min(s, n) is exhaustive
// (minimal recovery sets never exceed s columns). min_distance < k short-circuits.
DecideResult decide_k_pir(const GeneratorMatrix& g, int k,
                          long long node_budget = 10'000'000);

struct CertifiedCode {
    GeneratorMatrix matrix;
    RecoveryCertificate certificate;
};

CertifiedCode combine_direct_sum(const CertifiedCode& a, const CertifiedCode& b);
CertifiedCode combine_juxtapose(const CertifiedCode& a, const CertifiedCode& b);
// Requires an odd certified k; the new set per index is the parity column plus
// all columns unused by that index's existing sets.
CertifiedCode combine_parity_extend(const CertifiedCode& a);

// JSON certificate files: {"s":..,"n":..,"k":..,"sets":[[[col,..],..],..]},
// 0-based column indices. Reader checks shape only.
std::string certificate_to_json(const RecoveryCertificate& cert);
RecoveryCertificate certificate_from_json(const std::string& text);

}  // namespace pir
