#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "pir/bounds.hpp"
#include "util.hpp"

using namespace pir;

namespace {

// published best-known grid, one row per dimension, columns k = 2..16 even
// plus k = 3; exact cells carry equal endpoints
struct GridRow {
    int s;
    std::pair<int, int> cells[9];  // k = 2, 3, 4, 6, 8, 10, 12, 14, 16
};
constexpr int kGridK[9] = {2, 3, 4, 6, 8, 10, 12, 14, 16};
const GridRow kGrid[] = {
    {1, {{2, 2}, {3, 3}, {4, 4}, {6, 6}, {8, 8}, {10, 10}, {12, 12}, {14, 14}, {16, 16}}},
    {2, {{3, 3}, {5, 5}, {6, 6}, {9, 9}, {12, 12}, {15, 15}, {18, 18}, {21, 21}, {24, 24}}},
    {3, {{4, 4}, {6, 6}, {7, 7}, {11, 11}, {14, 14}, {18, 18}, {21, 21}, {25, 25}, {28, 28}}},
    {4, {{5, 5}, {8, 8}, {9, 9}, {12, 12}, {15, 15}, {20, 20}, {24, 24}, {27, 27}, {30, 30}}},
    {5, {{6, 6}, {9, 9}, {10, 10}, {14, 14}, {18, 18}, {22, 22}, {25, 25}, {28, 28}, {31, 31}}},
    {6, {{7, 7}, {10, 10}, {11, 11}, {15, 15}, {19, 19}, {23, 23}, {27, 27}, {32, 32}, {36, 36}}},
    {7,
     {{8, 8}, {12, 12}, {13, 13}, {16, 16}, {19, 21}, {24, 26}, {27, 29}, {32, 34}, {35, 39}}},
    {8,
     {{9, 9}, {13, 13}, {14, 14}, {17, 18}, {20, 23}, {26, 27}, {29, 33}, {33, 38}, {36, 42}}},
    {9,
     {{10, 10}, {14, 14}, {15, 15}, {18, 20}, {21, 25}, {27, 28}, {30, 37}, {35, 40}, {38, 45}}},
    {10,
     {{11, 11}, {15, 15}, {16, 16}, {20, 21}, {22, 26}, {28, 31}, {31, 40}, {36, 45}, {40, 50}}},
};

}  // namespace

TEST_CASE("griesmer sums the halving ceilings") {
    CHECK(griesmer(5, 8) == 16);
    CHECK(griesmer(1, 7) == 7);
    CHECK(griesmer(4, 4) == 8);
    CHECK(griesmer(4, 12) == 23);
    for (int k = 1; k < 30; ++k) CHECK(griesmer(3, k + 1) > griesmer(3, k));
}

TEST_CASE("the embedded length table stores the quoted code-length values") {
    const NTable& t = NTable::embedded();
    CHECK(t.value(4, 12) == 23);
    CHECK(t.value(7, 6) == 16);
    CHECK(t.value(92, 5) == 106);
    CHECK(t.value(12, 8) == 24);
    CHECK(t.value(5, 8) == 16);
    CHECK(t.source(4, 12) == NTable::Source::embedded);
    CHECK(t.source(3, 3) == NTable::Source::griesmer);
    CHECK(n_lower(4, 12, t) == 23);
    CHECK(n_lower(3, 4, t) == griesmer(3, 4));
}

TEST_CASE("every embedded table entry dominates its Griesmer floor") {
    NTable t;
    CHECK_THROWS_AS(t.set(4, 12, 21, NTable::Source::user_file), parse_error);
    t.set(4, 12, 23, NTable::Source::user_file);
    CHECK(t.value(4, 12) == 23);
    CHECK(t.source(4, 12) == NTable::Source::user_file);
}

TEST_CASE("the shipped table file mirrors the embedded entries") {
    NTable t;
    t.load_file(std::string(PIR_SOURCE_DIR) + "/data/ntable.txt");
    CHECK(t.value(5, 8) == 16);
    CHECK(t.value(92, 5) == 106);
    CHECK(t.source(5, 8) == NTable::Source::user_file);
    for (int s = 4; s <= 10; ++s)
        for (int k = 2; k <= 16; ++k) CHECK(t.value(s, k) == NTable::embedded().value(s, k));
}

TEST_CASE("table files with bad lines are rejected") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    auto write = [&](const char* name, const char* text) {
        const fs::path p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    };
    NTable t;
    t.load_file(write("nt_ok.txt", "# comment\n5 8 16\n\n4 12 23 # inline\n"));
    CHECK(t.value(5, 8) == 16);
    CHECK_THROWS_AS(t.load_file(write("nt_short.txt", "5 8\n")), parse_error);
    CHECK_THROWS_AS(t.load_file(write("nt_extra.txt", "5 8 16 9\n")), parse_error);
    CHECK_THROWS_AS(t.load_file(write("nt_low.txt", "5 8 15\n")), parse_error);
    CHECK_THROWS_AS(t.load_file((dir / "absent_table.txt").string()), parse_error);
}

TEST_CASE("hyperplane averaging is tight exactly on the simplex column") {
    CHECK(hyperplane_avg_lower(4, 6) == 12);
    CHECK(hyperplane_avg_lower(2, 2) == 3);
    for (int s = 1; s <= 10; ++s) CHECK(hyperplane_avg_lower(s, 1 << (s - 1)) == (1 << s) - 1);
    CHECK_THROWS(hyperplane_avg_lower(0, 1));
}

TEST_CASE("the square-root lower bound matches the published markers") {
    CHECK(rao_vardy_lower(4, 3) == 8);
    CHECK(rao_vardy_lower(4, 4) == 9);
    CHECK(rao_vardy_lower(10, 3) == 15);
    // at (92,5) the bound beats the best coding-theoretic table value 106
    CHECK(rao_vardy_lower(92, 5) == 109);
    CHECK(rao_vardy_lower(92, 5) > NTable::embedded().value(92, 5));
    CHECK_THROWS_AS(rao_vardy_lower(5, 2), std::invalid_argument);
}

TEST_CASE("integer square-root ceiling agrees with high-precision evaluation") {
    for (int s = 1; s <= 1'000'000; ++s) {
        const long long exact = rao_vardy_lower(s, 3);
        const long long hp =
            s + static_cast<long long>(std::ceil(std::sqrt((long double)(2.0L * s + 0.25L)) + 0.5L));
        if (exact != hp) {  // resolve ties hit by floating error at perfect squares
            CAPTURE(s);
            const long long m = hp - s;
            CHECK((2 * (m - 1) - 1) * (2 * (m - 1) - 1) >= 8LL * s + 1);
        }
    }
}

TEST_CASE("the square-root bound dominates Griesmer for k = 3") {
    for (int s = 4; s <= 200; ++s)
        CHECK(rao_vardy_lower(s, 3) >= n_lower(s, 3, NTable::embedded()));
}

TEST_CASE("dual distance forces length in both modes") {
    CHECK(dual_distance_lower(7, 8, DualMode::general) == 28);
    CHECK(dual_distance_lower(2, 3, DualMode::general) == 3);
    CHECK(dual_distance_lower(4, 4, DualMode::unit_column) == 10);
    CHECK(dual_distance_lower(5, 5, DualMode::general) == 14);  // odd: k ceil(d/2) - 1
    CHECK_THROWS(dual_distance_lower(1, 4, DualMode::general));
    CHECK_THROWS(dual_distance_lower(3, 0, DualMode::general));
}

TEST_CASE("off-hyperplane point counts give the quarter-k lower bounds") {
    CHECK(reed_muller_lower(4, 4) == 9);
    CHECK(reed_muller_lower(4, 12) == 24);
    CHECK_FALSE(reed_muller_lower(4, 6));
    CHECK_FALSE(reed_muller_lower(3, 2));  // needs s >= 4
    CHECK(reed_muller_lower(5, 8) == 17);
    CHECK(reed_muller_lower(5, 24) == 48);
}

TEST_CASE("periodicity peels exactly the layers its hint certifies") {
    const PeriodicityReduction r4 = periodicity_reduce(4, 12, 9);
    CHECK(r4.k == 4);
    CHECK(r4.layers == 1);
    CHECK(r4.offset == 15);

    // with hint 18 the first layer above k = 8 is out of range, the second is not
    CHECK(periodicity_reduce(5, 24, 18).layers == 0);
    const PeriodicityReduction r5 = periodicity_reduce(5, 40, 18);
    CHECK(r5.k == 24);
    CHECK(r5.layers == 1);
    CHECK(r5.offset == 31);

    CHECK(periodicity_reduce(4, 4, 9).layers == 0);
}

TEST_CASE("periodic reduction transfers bounds exactly across layers") {
    const BoundsEngine engine;
    for (int s = 4; s <= 5; ++s)
        for (int k = 1; k <= engine.k_max(); ++k) {
            const long long hint = engine.best_upper(s, ((k - 1) % (1 << (s - 1))) + 1).value;
            const PeriodicityReduction red = periodicity_reduce(s, k, hint);
            if (!red.layers) continue;
            CHECK(engine.best_lower(s, k).value ==
                  engine.best_lower(s, red.k).value + red.offset);
            CHECK(engine.best_upper(s, k).value ==
                  engine.best_upper(s, red.k).value + red.offset);
        }
}

TEST_CASE("column multiplicity caps") {
    CHECK(multiplicity_cap(5, 8, 17) == 2);
    CHECK(multiplicity_cap(4, 4, 9) == 2);
    CHECK(multiplicity_cap(3, 0, 6) == 6);
    CHECK(multiplicity_cap(5, 8, 15) == 0);  // no repeated column admissible at all
    CHECK(multiplicity_cap(5, 8, 14) < 0);   // length 14 is outright impossible
}

TEST_CASE("the bound engine reproduces the published grid") {
    const BoundsEngine engine;
    for (const GridRow& row : kGrid)
        for (int c = 0; c < 9; ++c) {
            CAPTURE(row.s);
            CAPTURE(kGridK[c]);
            CHECK(engine.best_lower(row.s, kGridK[c]).value == row.cells[c].first);
            CHECK(engine.best_upper(row.s, kGridK[c]).value == row.cells[c].second);
        }
}

TEST_CASE("closed columns and spot values") {
    const BoundsEngine engine;
    for (int s = 1; s <= engine.s_max(); ++s) {
        CHECK(engine.best_lower(s, 1).value == s);
        CHECK(engine.best_upper(s, 1).value == s);
        CHECK(engine.best_lower(s, 2).value == s + 1);
        CHECK(engine.best_upper(s, 2).value == s + 1);
    }
    // the quarter-k odd case sits strictly above the scaled closed form
    CHECK(engine.best_lower(3, 5).value == 10);
    CHECK(engine.best_upper(3, 5).value == 10);
    CHECK(engine.best_lower(7, 8).value == 19);
    CHECK(engine.best_upper(7, 8).value == 21);
    CHECK(engine.best_lower(10, 3).value == 15);
}

TEST_CASE("lower bounds never exceed upper bounds anywhere on the grid") {
    const BoundsEngine engine;
    for (int s = 1; s <= engine.s_max(); ++s)
        for (int k = 1; k <= engine.k_max(); ++k)
            CHECK(engine.best_lower(s, k).value <= engine.best_upper(s, k).value);
}

TEST_CASE("upper bounds grow by at least one per unit of k") {
    const BoundsEngine engine;
    for (int s = 1; s <= 8; ++s)
        for (int k = 2; k <= 32; ++k)
            CHECK(engine.best_upper(s, k - 1).value <= engine.best_upper(s, k).value - 1);
}

TEST_CASE("every trace reevaluates to its claimed value") {
    const BoundsEngine engine;
    for (int s = 1; s <= engine.s_max(); ++s)
        for (int k = 1; k <= engine.k_max(); ++k) {
            const BoundResult lo = engine.best_lower(s, k);
            const BoundResult up = engine.best_upper(s, k);
            CHECK(engine.reevaluate(lo.trace) == lo.value);
            CHECK(engine.reevaluate(up.trace) == up.value);
            CHECK(!std::string(lo.trace.rule).empty());
            CHECK(lo.direction == Direction::lower);
            CHECK(up.direction == Direction::upper);
        }
}

TEST_CASE("trace rendering names the rule chain") {
    const BoundResult res = best_upper(4, 6);
    const std::string text = trace_to_string(res.trace);
    CHECK(text.find("upper(4,6) = 12") != std::string::npos);
    CHECK(text.find("via") != std::string::npos);
}

TEST_CASE("construction-backed upper bounds materialize to certified codes") {
    const BoundsEngine engine;
    const std::set<std::pair<int, int>> recorded_only = {
        {5, 3}, {5, 4}, {5, 5},  {5, 6},  {6, 3},  {6, 4},  {6, 5},  {6, 6},
        {6, 9}, {6, 10}, {6, 11}, {6, 12}, {6, 13}, {6, 14}, {6, 15}, {6, 16}};
    for (int s = 1; s <= 6; ++s)
        for (int k = 1; k <= 16; ++k) {
            CAPTURE(s);
            CAPTURE(k);
            const bool mat = engine.materializable(s, k);
            CHECK(mat == !recorded_only.count({s, k}));
            if (!mat) {
                CHECK_THROWS(engine.materialize_upper(s, k));
                continue;
            }
            const CertifiedCode code = engine.materialize_upper(s, k);
            CHECK(code.matrix.n == engine.best_upper(s, k).value);
            CHECK(code.matrix.s == s);
            CHECK(validate_certificate(code.matrix, k, code.certificate).valid);
        }
}

TEST_CASE("grid queries outside the engine range fail loudly") {
    const BoundsEngine engine;
    CHECK_THROWS_AS(engine.best_lower(0, 1), std::out_of_range);
    CHECK_THROWS_AS(engine.best_upper(engine.s_max() + 1, 1), std::out_of_range);
    CHECK_THROWS_AS(engine.best_lower(1, engine.k_max() + 1), std::out_of_range);
    CHECK_THROWS(BoundsEngine(NTable::embedded(), 25, 10));
}

TEST_CASE("single-shot queries agree with a fresh engine") {
    const BoundsEngine engine;
    CHECK(best_lower(7, 8).value == engine.best_lower(7, 8).value);
    CHECK(best_upper(9, 14).value == engine.best_upper(9, 14).value);

    // a user table can only sharpen table-driven cells
    NTable t = NTable::embedded();
    t.set(7, 8, 20, NTable::Source::user_file);
    CHECK(best_lower(7, 8, t).value == 20);
}
