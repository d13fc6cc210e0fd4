#include <algorithm>
#include <set>

#include "doctest.h"
#include "pir/constructions.hpp"
#include "util.hpp"

using namespace pir;
using testutil::fixture;

TEST_CASE("simplex codes carry their full certificates for s = 1..8") {
    for (int s = 1; s <= 8; ++s) {
        CAPTURE(s);
        const CertifiedCode code = simplex(s);
        const int k = 1 << (s - 1);
        CHECK(code.matrix.n == (1 << s) - 1);
        CHECK(code.certificate.k == k);
        CHECK(min_distance(code.matrix) == k);
        CHECK(validate_certificate(code.matrix, k, code.certificate).valid);
        const std::string want =
            s == 1 ? "1^1" : "1^1 2^" + std::to_string(k - 1);
        for (int i = 0; i < s; ++i)
            CHECK(profile_to_string(cardinality_profile(code.certificate.sets[i])) == want);
    }
    CHECK_THROWS(simplex(0));
    CHECK_THROWS(simplex(21));
}

TEST_CASE("every simplex hyperplane holds half the points") {
    const CertifiedCode code = simplex(5);
    const HyperplaneSpectrum sp = hyperplane_spectrum(matrix_to_multiset(code.matrix));
    CHECK(sp.h == std::map<int, long long>{{15, 31}});
}

TEST_CASE("partial line spreads reach the known cardinalities") {
    auto check_spread = [](int s, int want_lines) {
        const Point normal = (Point(1) << s) - 1;
        const std::vector<Line> spread = partial_line_spread(s, normal);
        CHECK(static_cast<int>(spread.size()) == want_lines);
        std::set<Point> seen;
        for (const Line& l : spread) {
            CHECK((l.a ^ l.b ^ l.c) == 0);
            for (Point p : {l.a, l.b, l.c}) {
                CHECK(p != 0);
                CHECK(parity(p & normal) == 0);  // inside the hyperplane
                CHECK(seen.insert(p).second);    // pairwise disjoint
            }
        }
    };
    check_spread(4, 1);
    check_spread(5, 5);   // covers all 15 points of the hyperplane
    check_spread(6, 9);
    check_spread(7, 21);
}

TEST_CASE("spread construction demands a hyperplane avoiding the units") {
    CHECK_THROWS(partial_line_spread(4, 7));  // e_4 lies inside
    CHECK_THROWS(partial_line_spread(4, 0));
}

TEST_CASE("removing spread lines trades three columns for two recovery sets") {
    auto check_removal = [](int s, int lambda) {
        CAPTURE(s);
        CAPTURE(lambda);
        const CertifiedCode code = remove_lines(s, lambda);
        const int k = (1 << (s - 1)) - 2 * lambda;
        CHECK(code.matrix.n == (1 << s) - 1 - 3 * lambda);
        CHECK(code.certificate.k == k);
        CHECK(validate_certificate(code.matrix, k, code.certificate).valid);
        CHECK(min_distance(code.matrix) >= k);
        // projective: deleting columns from the simplex never repeats a point
        const PointMultiset p = matrix_to_multiset(code.matrix);
        CHECK(static_cast<int>(p.mult.size()) == code.matrix.n);
    };
    check_removal(4, 1);
    for (int lambda = 1; lambda <= 3; ++lambda) check_removal(5, lambda);
    for (int lambda = 1; lambda <= 9; ++lambda) check_removal(6, lambda);
    CHECK(remove_lines(5, 0).matrix.n == 31);
    CHECK_THROWS(remove_lines(5, 6));
    CHECK_THROWS(remove_lines(2, 1));
}

TEST_CASE("size-3 recovery sets from one removed line never collide") {
    const CertifiedCode code = remove_lines(5, 3);
    for (int i = 0; i < code.matrix.s; ++i) {
        std::set<int> used;
        for (const auto& set : code.certificate.sets[i]) {
            if (set.size() != 3) continue;
            for (int j : set) CHECK(used.insert(j).second);
        }
    }
}

TEST_CASE("lengthening with t >= k succeeds via the zero row") {
    const CertifiedCode base = simplex(2);  // k = 2
    const std::vector<CertifiedCode> out = lengthen_search(base, 2);
    REQUIRE(out.size() == 1);
    const CertifiedCode& ext = out[0];
    CHECK(ext.matrix.s == 3);
    CHECK(ext.matrix.n == 5);
    CHECK(validate_certificate(ext.matrix, 2, ext.certificate).valid);
    // the zero row comes first in the row enumeration
    for (int j = 0; j < 3; ++j) CHECK(ext.matrix.cols[j] < 4);
}

TEST_CASE("lengthening the 7-column simplex reaches the (4,4) optimum length") {
    const std::vector<CertifiedCode> out = lengthen_search(simplex(3), 2);
    REQUIRE(!out.empty());
    const CertifiedCode& ext = out[0];
    CHECK(ext.matrix.s == 4);
    CHECK(ext.matrix.n == 9);
    CHECK(ext.certificate.k == 4);
    CHECK(validate_certificate(ext.matrix, 4, ext.certificate).valid);
    CHECK(decide_k_pir(ext.matrix, 4).decision == Decision::yes);
}

TEST_CASE("lengthened codes keep the [[G,0],[r,1..1]] block shape") {
    const CertifiedCode base = simplex(3);
    LengthenOptions opt;
    opt.max_results = 3;
    const std::vector<CertifiedCode> out = lengthen_search(base, 3, opt);
    CHECK(static_cast<int>(out.size()) <= 3);
    REQUIRE(!out.empty());
    const Point top = Point(1) << base.matrix.s;
    for (const CertifiedCode& ext : out) {
        CHECK(ext.matrix.n == base.matrix.n + 3);
        for (int j = 0; j < base.matrix.n; ++j)
            CHECK((ext.matrix.cols[j] & (top - 1)) == base.matrix.cols[j]);
        for (int j = base.matrix.n; j < ext.matrix.n; ++j) CHECK(ext.matrix.cols[j] == top);
        // at most t old recovery sets per index flip to use a new-row parity fix
        for (int i = 0; i < base.matrix.s; ++i) {
            int flipped = 0;
            for (const auto& set : ext.certificate.sets[i])
                flipped += !set.empty() && set.back() >= base.matrix.n;
            CHECK(flipped <= 3);
        }
    }
}

TEST_CASE("lengthen search reports exhausted row budgets") {
    LengthenOptions opt;
    opt.row_budget = 1;  // only the zero row, which cannot serve t < k
    CHECK_THROWS_AS(lengthen_search(simplex(3), 2, opt), budget_error);
}

TEST_CASE("catalog entries match their shipped data files") {
    const auto& entries = catalog_entries();
    CHECK(entries.size() == 9);
    for (const auto& entry : entries) {
        CAPTURE(entry.id);
        CHECK(write_matrix(entry.matrix) == fixture(entry.id + ".matrix"));
        if (entry.kind == EntryKind::certified) {
            REQUIRE(entry.certificate);
            const RecoveryCertificate disk =
                certificate_from_json(fixture(entry.id + ".cert.json"));
            CHECK(disk.sets == entry.certificate->sets);
            CHECK(disk.k == entry.certificate->k);
        }
    }
}

TEST_CASE("certified catalog entries validate; the reference entry does not") {
    for (const auto& entry : catalog_entries()) {
        CAPTURE(entry.id);
        CHECK(min_distance(entry.matrix) >= entry.k);
        if (entry.certificate)
            CHECK(validate_certificate(entry.matrix, entry.k, *entry.certificate).valid);
        else
            CHECK(entry.kind == EntryKind::reference);
    }
}

TEST_CASE("catalog lookups answer by parameters") {
    const auto ex = catalog_lookup(4, 4);
    REQUIRE(ex.size() == 1);
    CHECK(ex[0].n == 9);

    const auto six = catalog_lookup(6, 8);
    REQUIRE(six.size() == 2);
    std::set<int> lengths{six[0].n, six[1].n};
    CHECK(lengths == std::set<int>{19, 20});

    const auto five = catalog_lookup(5, 8);
    CHECK(std::any_of(five.begin(), five.end(), [](const CatalogEntry& e) {
        return e.n == 18 && e.kind == EntryKind::certified;
    }));

    CHECK(catalog_lookup(11, 2).empty());
}

TEST_CASE("small catalog entries pass the full decision procedure") {
    for (const auto& entry : catalog_entries()) {
        if (entry.s > 6 || entry.kind != EntryKind::certified) continue;
        CAPTURE(entry.id);
        CHECK(decide_k_pir(entry.matrix, entry.k).decision == Decision::yes);
    }
}
