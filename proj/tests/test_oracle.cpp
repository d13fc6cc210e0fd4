#include "doctest.h"
#include "oracle.hpp"
#include "pir/recovery.hpp"

using namespace pir;

namespace {

GeneratorMatrix from_cols(int s, const std::vector<Point>& cols) {
    GeneratorMatrix g;
    g.s = s;
    g.n = static_cast<int>(cols.size());
    g.cols = cols;
    return g;
}

}  // namespace

TEST_CASE("oracle reproduces the exact minimum lengths for tiny parameters") {
    // frozen: s=1 -> k; s=2 -> ceil(3k/2); s=3 computed once by this search
    const int expected[4][5] = {
        {0, 1, 2, 3, 4},  // s = 1
        {0, 2, 3, 5, 6},  // s = 2
        {0, 3, 4, 6, 7},  // s = 3
    };
    for (int s = 1; s <= 3; ++s)
        for (int k = 1; k <= 4; ++k) {
            CAPTURE(s);
            CAPTURE(k);
            CHECK(oracle::min_length(s, k, 8) == expected[s - 1][k]);
        }
}

TEST_CASE("oracle monotonicity: once k-PIR fails at n it needs more columns") {
    // P(s,k+1) > P(s,k): each successive requirement is strictly harder
    for (int s = 1; s <= 3; ++s) {
        int prev = 0;
        for (int k = 1; k <= 4; ++k) {
            const int cur = oracle::min_length(s, k, 8);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("decide_k_pir agrees with the oracle over the whole tiny box") {
    for (int s = 1; s <= 3; ++s)
        for (int n = s; n <= 8; ++n)
            for (const auto& cols : oracle::multisets(s, n)) {
                const GeneratorMatrix g = from_cols(s, cols);
                for (int k = 1; k <= 4; ++k) {
                    const bool truth = oracle::is_k_pir(s, cols, k);
                    const DecideResult got = decide_k_pir(g, k);
                    CAPTURE(s);
                    CAPTURE(n);
                    CAPTURE(k);
                    REQUIRE(got.decision != Decision::unknown);
                    CHECK((got.decision == Decision::yes) == truth);
                }
            }
}

TEST_CASE("oracle rejects rank-deficient matrices for every k") {
    const std::vector<Point> cols = {1, 1, 3, 3};  // spans only 2 of 3 dimensions
    CHECK_FALSE(oracle::is_k_pir(3, cols, 1));
}
