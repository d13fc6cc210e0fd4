#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "pir/constructions.hpp"
#include "pir/recovery.hpp"
#include "util.hpp"

using namespace pir;
using testutil::fixture;

namespace {

GeneratorMatrix from_cols(int s, std::vector<Point> cols) {
    GeneratorMatrix g;
    g.s = s;
    g.n = static_cast<int>(cols.size());
    g.cols = std::move(cols);
    return g;
}

// all minimal recovery sets of size <= lambda by direct subset enumeration
std::vector<RecoverySet> brute_minimal(const GeneratorMatrix& g, int i, int lambda) {
    const Point target = Point(1) << i;
    std::vector<RecoverySet> out;
    std::vector<int> idx;
    auto sums_to_target = [&](const RecoverySet& set) {
        Point sum = 0;
        for (int j : set) sum ^= g.cols[j];
        return sum == target;
    };
    std::function<void(int)> rec = [&](int from) {
        if (!idx.empty() && sums_to_target(idx)) {
            // minimal iff no proper nonempty subset is itself a recovery set
            const int m = static_cast<int>(idx.size());
            for (unsigned sub = 1; sub + 1 < (1u << m); ++sub) {
                RecoverySet part;
                for (int b = 0; b < m; ++b)
                    if (sub >> b & 1) part.push_back(idx[b]);
                if (sums_to_target(part)) return;
            }
            out.push_back(idx);
            return;  // supersets of a recovery set are never minimal
        }
        if (static_cast<int>(idx.size()) == lambda) return;
        for (int j = from; j < g.n; ++j) {
            idx.push_back(j);
            rec(j + 1);
            idx.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const RecoverySet& a, const RecoverySet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

}  // namespace

TEST_CASE("the 4x9 fixture validates with its shipped certificate") {
    const GeneratorMatrix g = parse_matrix(fixture("example1-4x9.matrix")).matrix;
    const RecoveryCertificate cert = certificate_from_json(fixture("example1-4x9.cert.json"));
    const ValidationReport rep = validate_certificate(g, 4, cert);
    CHECK(rep.valid);
    CHECK(rep.violations.empty());
    // the fourth index uses the published sets (0-based column labels)
    const std::vector<RecoverySet> want = {{3}, {0, 6}, {5, 8}, {1, 2, 4, 7}};
    CHECK(cert.sets[3] == want);
}

TEST_CASE("validate_certificate reports precise violations") {
    const GeneratorMatrix g = parse_matrix(fixture("example1-4x9.matrix")).matrix;
    RecoveryCertificate cert = certificate_from_json(fixture("example1-4x9.cert.json"));

    SUBCASE("duplicated set is not disjoint") {
        cert.sets[3] = {{3}, {3}, {0, 6}, {5, 8}};
        const ValidationReport rep = validate_certificate(g, 4, cert);
        CHECK_FALSE(rep.valid);
        REQUIRE(!rep.violations.empty());
        CHECK(rep.violations[0].i == 3);
    }
    SUBCASE("set with the wrong sum") {
        cert.sets[3][0] = {0, 1};  // e_1 + e_2 != e_4
        const ValidationReport rep = validate_certificate(g, 4, cert);
        CHECK_FALSE(rep.valid);
        CHECK(std::any_of(rep.violations.begin(), rep.violations.end(),
                          [](const Violation& v) { return v.i == 3 && v.set_index == 0; }));
    }
    SUBCASE("too few sets for one index") {
        cert.sets[0].resize(3);
        CHECK_FALSE(validate_certificate(g, 4, cert).valid);
    }
    SUBCASE("column index out of range") {
        cert.sets[2][0] = {42};
        CHECK_FALSE(validate_certificate(g, 4, cert).valid);
    }
    SUBCASE("shape mismatch is an error, not a violation") {
        cert.s = 5;
        CHECK_THROWS(validate_certificate(g, 4, cert));
    }
}

TEST_CASE("cardinality profiles print in size order") {
    const CertifiedCode sx = simplex(3);
    for (int i = 0; i < 3; ++i)
        CHECK(profile_to_string(cardinality_profile(sx.certificate.sets[i])) == "1^1 2^3");
}

TEST_CASE("minimal recovery sets of the simplex codes") {
    const GeneratorMatrix s2 = from_cols(2, {1, 2, 3});
    const std::vector<RecoverySet> got = enumerate_minimal_recovery_sets(s2, 0, 2);
    CHECK(got == std::vector<RecoverySet>{{0}, {1, 2}});

    // e_1 in the 7-column simplex: the singleton and three disjoint pairs
    const GeneratorMatrix s3 = from_cols(3, {1, 2, 3, 4, 5, 6, 7});
    CHECK(enumerate_minimal_recovery_sets(s3, 0, 2).size() == 4);
}

TEST_CASE("minimal recovery sets of the 4x9 fixture include the published ones") {
    const GeneratorMatrix g = parse_matrix(fixture("example1-4x9.matrix")).matrix;
    const std::vector<RecoverySet> sets = enumerate_minimal_recovery_sets(g, 3, 3);
    auto has = [&](const RecoverySet& want) {
        return std::find(sets.begin(), sets.end(), want) != sets.end();
    };
    CHECK(has({3}));
    CHECK(has({0, 6}));
    CHECK(has({5, 8}));
    CHECK(has({2, 4, 6}));
    CHECK(has({0, 1, 7}));
}

TEST_CASE("enumeration agrees with brute force on random matrices") {
    std::mt19937 rng(41u);
    for (int trial = 0; trial < 1000; ++trial) {
        const int s = 2 + static_cast<int>(rng() % 3);
        const int n = s + static_cast<int>(rng() % (15 - s));
        const GeneratorMatrix g = testutil::random_matrix(rng, s, n);
        const int i = static_cast<int>(rng() % s);
        const int lambda = 1 + static_cast<int>(rng() % 3);
        CHECK(enumerate_minimal_recovery_sets(g, i, lambda) == brute_minimal(g, i, lambda));
    }
}

TEST_CASE("enumeration rejects bad arguments and tiny candidate caps") {
    const GeneratorMatrix s3 = from_cols(3, {1, 2, 3, 4, 5, 6, 7});
    CHECK_THROWS_AS(enumerate_minimal_recovery_sets(s3, 3, 2), std::out_of_range);
    CHECK_THROWS_AS(enumerate_minimal_recovery_sets(s3, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_minimal_recovery_sets(s3, 0, 3, 2), budget_error);
    CHECK_THROWS(enumerate_minimal_recovery_sets(from_cols(2, {1, 0, 2}), 0, 2));  // zero column
}

TEST_CASE("certificate search on the simplex reaches the full profile") {
    const GeneratorMatrix s4 = simplex(4).matrix;
    const SearchResult res = search_certificate(s4, 8, 2);
    REQUIRE(res.status == SearchStatus::found);
    REQUIRE(res.certificate);
    CHECK(validate_certificate(s4, 8, *res.certificate).valid);
    for (int i = 0; i < 4; ++i)
        CHECK(profile_to_string(cardinality_profile(res.certificate->sets[i])) == "1^1 2^7");
}

TEST_CASE("the off-hyperplane point set refuses one more recovery set") {
    // all 8 points of F_2^4 with the top bit set: 4-PIR is impossible
    std::vector<Point> off;
    for (Point p = 8; p < 16; ++p) off.push_back(p);
    const GeneratorMatrix g = from_cols(4, off);
    const SearchResult res = search_certificate(g, 4, 8);
    CHECK(res.status == SearchStatus::not_found_within_cap);
    CHECK_FALSE(res.certificate);

    const SearchResult starved = search_certificate(g, 4, 8, 1);
    CHECK(starved.status == SearchStatus::budget_exhausted);
}

TEST_CASE("certificate search succeeds on the length-19 fixture") {
    const GeneratorMatrix g = parse_matrix(fixture("len19-6x19.matrix")).matrix;
    const SearchResult res = search_certificate(g, 8, 4);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(validate_certificate(g, 8, *res.certificate).valid);
}

TEST_CASE("search matches exhaustive packing existence on random matrices") {
    std::mt19937 rng(43u);
    for (int trial = 0; trial < 300; ++trial) {
        const int s = 1 + static_cast<int>(rng() % 3);
        const int n = s + static_cast<int>(rng() % (9 - s));
        const GeneratorMatrix g = testutil::random_matrix(rng, s, n);
        const int k = 1 + static_cast<int>(rng() % 3);
        const SearchResult res = search_certificate(g, k, n);
        REQUIRE(res.status != SearchStatus::budget_exhausted);
        const bool truth = oracle::is_k_pir(s, g.cols, k);
        CHECK((res.status == SearchStatus::found) == truth);
        if (res.certificate) CHECK(validate_certificate(g, k, *res.certificate).valid);
    }
}

TEST_CASE("decide_k_pir short-circuits, certifies, and refutes") {
    CHECK(decide_k_pir(from_cols(3, {1, 2, 4}), 2).decision == Decision::no);  // d = 1 < 2

    const GeneratorMatrix par = from_cols(3, {1, 2, 4, 7});
    const DecideResult yes = decide_k_pir(par, 2);
    REQUIRE(yes.decision == Decision::yes);
    CHECK(validate_certificate(par, 2, *yes.certificate).valid);

    // min distance 8 alone does not make an 8-PIR code
    const GeneratorMatrix ref = parse_matrix(fixture("ref-17-5-8.matrix")).matrix;
    CHECK(min_distance(ref) == 8);
    CHECK(decide_k_pir(ref, 8).decision == Decision::no);
}

TEST_CASE("positive decisions always come with distance at least k") {
    std::mt19937 rng(47u);
    for (int trial = 0; trial < 200; ++trial) {
        const int s = 1 + static_cast<int>(rng() % 3);
        const int n = s + static_cast<int>(rng() % 6);
        const GeneratorMatrix g = testutil::random_matrix(rng, s, n);
        const int k = 1 + static_cast<int>(rng() % 4);
        const DecideResult res = decide_k_pir(g, k);
        REQUIRE(res.decision != Decision::unknown);
        if (res.decision == Decision::yes) {
            CHECK(validate_certificate(g, k, *res.certificate).valid);
            CHECK(min_distance(g) >= k);
        }
    }
}

TEST_CASE("pairs of recovery sets for one index span dual codewords") {
    for (const auto& entry : catalog_entries()) {
        if (!entry.certificate) continue;
        const int d_perp = dual_min_distance(entry.matrix);
        for (int i = 0; i < entry.s; ++i) {
            const auto& sets = entry.certificate->sets[i];
            for (std::size_t a = 0; a < sets.size(); ++a)
                for (std::size_t b = a + 1; b < sets.size(); ++b) {
                    // symmetric difference sums to e_i + e_i = 0: a dual word
                    std::set<int> sym(sets[a].begin(), sets[a].end());
                    for (int j : sets[b]) {
                        if (!sym.erase(j)) sym.insert(j);
                    }
                    Point sum = 0;
                    for (int j : sym) sum ^= entry.matrix.cols[j];
                    CHECK(sum == 0);
                    CHECK(static_cast<int>(sets[a].size() + sets[b].size()) >= d_perp);
                }
        }
    }
}

TEST_CASE("direct sum and juxtaposition lift certificates") {
    const CertifiedCode s3 = simplex(3);
    const CertifiedCode jux = combine_juxtapose(s3, s3);
    CHECK(jux.matrix.s == 3);
    CHECK(jux.matrix.n == 14);
    CHECK(jux.certificate.k == 8);
    CHECK(validate_certificate(jux.matrix, 8, jux.certificate).valid);

    CertifiedCode rep;  // [3,1] repetition code, k = 3
    rep.matrix = from_cols(1, {1, 1, 1});
    rep.certificate = {1, 3, 3, {{{0}, {1}, {2}}}};
    const CertifiedCode ds = combine_direct_sum(rep, simplex(2));
    CHECK(ds.matrix.s == 3);
    CHECK(ds.matrix.n == 6);
    CHECK(ds.certificate.k == 2);  // min(3, 2)
    CHECK(validate_certificate(ds.matrix, 2, ds.certificate).valid);

    CHECK_THROWS(combine_juxtapose(rep, simplex(2)));
}

TEST_CASE("parity extension lifts an odd-k certificate") {
    // 3-PIR [6,3] code: simplex with the all-one column removed
    const GeneratorMatrix g = from_cols(3, {1, 2, 3, 4, 5, 6});
    const DecideResult base = decide_k_pir(g, 3);
    REQUIRE(base.decision == Decision::yes);
    CertifiedCode code{g, *base.certificate};
    const CertifiedCode ext = combine_parity_extend(code);
    CHECK(ext.matrix.n == 7);
    CHECK(ext.certificate.k == 4);
    CHECK(validate_certificate(ext.matrix, 4, ext.certificate).valid);

    CHECK_THROWS(combine_parity_extend(ext));  // k now even
}

TEST_CASE("parity extension lift validates on 100 random certified codes") {
    std::mt19937 rng(53u);
    int lifted = 0;
    while (lifted < 100) {
        const int s = 2 + static_cast<int>(rng() % 2);
        const int n = s + 1 + static_cast<int>(rng() % 6);
        const GeneratorMatrix g = testutil::random_matrix(rng, s, n);
        Point all = 0;
        for (Point c : g.cols) all ^= c;
        if (!all) continue;  // parity column would be zero
        const int k = 1 + 2 * static_cast<int>(rng() % 2);  // odd: 1 or 3
        const DecideResult res = decide_k_pir(g, k);
        if (res.decision != Decision::yes) continue;
        const CertifiedCode ext = combine_parity_extend({g, *res.certificate});
        CHECK(validate_certificate(ext.matrix, k + 1, ext.certificate).valid);
        CHECK(ext.matrix.n == n + 1);
        ++lifted;
    }
}

TEST_CASE("certificate JSON round trips and rejects malformed text") {
    for (const auto& entry : catalog_entries()) {
        if (!entry.certificate) continue;
        const RecoveryCertificate back =
            certificate_from_json(certificate_to_json(*entry.certificate));
        CHECK(back.s == entry.certificate->s);
        CHECK(back.n == entry.certificate->n);
        CHECK(back.k == entry.certificate->k);
        CHECK(back.sets == entry.certificate->sets);
    }
    CHECK_THROWS_AS(certificate_from_json("not json"), parse_error);
    CHECK_THROWS_AS(certificate_from_json("{\"s\":1}"), parse_error);
    CHECK_THROWS_AS(certificate_from_json("{\"s\":1,\"n\":1,\"k\":1,\"sets\":3}"), parse_error);
}
