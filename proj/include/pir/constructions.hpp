#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pir/gf2.hpp"
#include "pir/recovery.hpp"

namespace pir {

// Three distinct nonzero points with a ^ b ^ c == 0, stored ascending.
struct Line {
    Point a = 0, b = 0, c = 0;
};

// Simplex code of dimension s: every nonzero point once, certified
// k = 2^{s-1} with per-index set profile 1^1 2^{2^{s-1}-1}.
CertifiedCode simplex(int s);

// Pairwise disjoint lines inside the hyperplane {p : <p, normal> = 0},
// which must avoid every unit vector (normal has all s bits set).
// Cardinality (2^{s-1}-1)/3 for odd s, (2^{s-1}-5)/3 for even s.
std::vector<Line> partial_line_spread(int s, Point hyperplane_normal,
                                      long long node_budget = 10'000'000);

// Delete `lambda` spread lines from the simplex code: length 2^s-1-3*lambda,
// certified k = 2^{s-1}-2*lambda.
CertifiedCode remove_lines(int s, int lambda);

struct LengthenOptions {
    int max_results = 1;
    int max_row_weight = -1;  // -1: no cap beyond n
    int zset_size_cap = 4;    // zero-sum column sets up to this size
    long long row_budget = 10'000'000;
    long long clique_node_budget = 5'000'000;
};

// Search for extensions [[G,0],[r,1..1]] of a certified k-PIR code by one row
// and t unit columns, scanning extension rows r by increasing weight. A row
// qualifies when at most t recovery sets flip parity for every old index and
// at least k-t pairwise disjoint zero-sum column sets (found up front by
// clique search) have odd parity under r. Results come in row order; an empty
// list proves nothing.
std::vector<CertifiedCode> lengthen_search(const CertifiedCode& base, int t,
                                           const LengthenOptions& opt = {});

enum class EntryKind {
    certified,  // ships with a recovery certificate
    reference,  // distance benchmark only, no certificate
};

struct CatalogEntry {
    std::string id;
    int s = 0;
    int k = 0;
    int n = 0;
    EntryKind kind = EntryKind::certified;
    std::string note;
    GeneratorMatrix matrix;
    std::optional<RecoveryCertificate> certificate;
};

const std::vector<CatalogEntry>& catalog_entries();
std::vector<CatalogEntry> catalog_lookup(int s, int k);

}  // namespace pir
