#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pir {

// A vector of F_2^s stored as a bitmask, row 1 in bit 0.
using Point = std::uint32_t;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int parity(std::uint32_t x) { return __builtin_parity(x); }
inline int popcount(std::uint32_t x) { return __builtin_popcount(x); }

// Lexicographic key treating row 1 as the most significant position
// (least-significant bit in the last row): the bit-reversal of p in s bits.
Point canonical_key(Point p, int s);

struct GeneratorMatrix {
    int s = 0;
    int n = 0;
    std::vector<Point> cols;  // size n, each < 2^s (zero allowed only pre-PIR)
};

struct ParseReport {
    GeneratorMatrix matrix;
    int rank = 0;
    int effective_length = 0;  // nonzero columns
};

// Rows of '0'/'1' characters; spaces inside rows are ignored, blank lines skipped.
ParseReport parse_matrix(const std::string& text);
// Writer emits one row per line, no spaces.
std::string write_matrix(const GeneratorMatrix& g);

int gf2_rank(const std::vector<Point>& vecs);

struct PointMultiset {
    int s = 0;
    std::map<Point, int> mult;  // nonzero point -> multiplicity >= 1
    int n = 0;                  // sum of multiplicities
};

PointMultiset matrix_to_multiset(const GeneratorMatrix& g);  // rejects zero columns
// Columns in canonical order (lexicographic, least-significant bit in row s),
// repeated by multiplicity. Rejects rank-deficient support.
GeneratorMatrix multiset_to_matrix(const PointMultiset& p);

struct WeightDistribution {
    std::vector<long long> counts;  // counts[w] = number of codewords of weight w
};

int min_distance(const GeneratorMatrix& g);                    // s <= 28
WeightDistribution weight_distribution(const GeneratorMatrix& g);
// Smallest size of a linearly dependent column set; enumerates the dual code.
int dual_min_distance(const GeneratorMatrix& g);               // n - rank <= 28
WeightDistribution dual_weight_distribution(const GeneratorMatrix& g);

struct HyperplaneSpectrum {
    std::map<int, long long> h;  // i -> hyperplanes containing exactly i points
    long long y2 = 0;            // ordered pairs of distinct elements on one point
};

// Self-checks the three standard equations before returning (s >= 2).
HyperplaneSpectrum hyperplane_spectrum(const PointMultiset& p);  // s <= 24

// --- code surgery ---

GeneratorMatrix puncture(const GeneratorMatrix& g, int col);

struct ShortenResult {
    GeneratorMatrix matrix;
    bool rank_dropped = false;  // beyond the expected s-1
};
ShortenResult shorten(const GeneratorMatrix& g, int col);

GeneratorMatrix parity_extend(const GeneratorMatrix& g);

struct ExpurgateResult {
    GeneratorMatrix matrix;
    int dropped_columns = 0;  // columns that became zero and were removed
    bool rank_dropped = false;
};
ExpurgateResult expurgate(const GeneratorMatrix& g, int row);

GeneratorMatrix direct_sum(const GeneratorMatrix& a, const GeneratorMatrix& b);
GeneratorMatrix juxtapose(const GeneratorMatrix& a, const GeneratorMatrix& b);

}  // namespace pir
