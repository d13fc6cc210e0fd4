#pragma once

// Shared helpers for the test suite: fixture loading and deterministic
// random generators (std::mt19937 with fixed seeds, reproducible by spec).

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pir/gf2.hpp"

namespace testutil {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline std::string fixture_path(const std::string& name) {
    return std::string(PIR_SOURCE_DIR) + "/data/catalog/" + name;
}

inline std::string fixture(const std::string& name) { return read_file(fixture_path(name)); }

inline pir::GeneratorMatrix random_matrix(std::mt19937& rng, int s, int n) {
    std::uniform_int_distribution<pir::Point> pick(1, (pir::Point(1) << s) - 1);
    pir::GeneratorMatrix g;
    g.s = s;
    g.n = n;
    for (int j = 0; j < n; ++j) g.cols.push_back(pick(rng));
    return g;
}

inline pir::GeneratorMatrix random_full_rank_matrix(std::mt19937& rng, int s, int n) {
    for (;;) {
        pir::GeneratorMatrix g = random_matrix(rng, s, n);
        if (pir::gf2_rank(g.cols) == s) return g;
    }
}

inline pir::PointMultiset random_full_rank_multiset(std::mt19937& rng, int s, int n) {
    return pir::matrix_to_multiset(random_full_rank_matrix(rng, s, n));
}

}  // namespace testutil
