#pragma once

#include "g2census/lattice.hpp"

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace testsup {

using g2census::Int;
using g2census::Lattice;
using g2census::Mat;
using g2census::Vec;

inline Vec vec(std::initializer_list<long long> xs) {
    Vec v;
    for (long long x : xs) v.push_back(Int(x));
    return v;
}

inline Mat mat(std::initializer_list<std::initializer_list<long long>> rows) {
    Mat m;
    for (auto& r : rows) {
        Vec v;
        for (long long x : r) v.push_back(Int(x));
        m.push_back(v);
    }
    return m;
}

inline Lattice lat(std::initializer_list<std::initializer_list<long long>> rows) {
    return Lattice::from_gram(mat(rows));
}

inline std::string data_dir() {
    if (const char* env = std::getenv("G2CENSUS_DATA")) return env;
#ifdef G2CENSUS_SOURCE_DATA_DIR
    return G2CENSUS_SOURCE_DATA_DIR;
#else
    return "data";
#endif
}

// Brute-force oracle for the transverse minimum, independent of the
// implementation path: scan all coordinate vectors with entries in
// [-box, box] and minimise F(v) = (v.H)^2 - H^2 v^2 over v with F(v) > 0.
// Plain int64 on purpose; callers keep entries small enough that the largest
// intermediate is far below overflow.
inline long long brute_force_min(const std::vector<std::vector<long long>>& gram,
                                 const std::vector<long long>& h, int box) {
    const int n = static_cast<int>(gram.size());
    std::vector<long long> hf(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) hf[i] += gram[i][j] * h[j];
    long long h2 = 0;
    for (int i = 0; i < n; ++i) h2 += h[i] * hf[i];

    long long best = -1;
    std::vector<long long> v(n, -box);
    while (true) {
        long long vh = 0, vv = 0;
        for (int i = 0; i < n; ++i) vh += v[i] * hf[i];
        for (int i = 0; i < n; ++i) {
            long long row = 0;
            for (int j = 0; j < n; ++j) row += gram[i][j] * v[j];
            vv += v[i] * row;
        }
        long long f = vh * vh - h2 * vv;
        if (f > 0 && (best < 0 || f < best)) best = f;
        int i = 0;
        while (i < n && v[i] == box) v[i++] = -box;
        if (i == n) break;
        ++v[i];
    }
    return best;
}

// Random symmetric matrix with entries in [-span, span] and even diagonal.
inline std::vector<std::vector<long long>> random_symmetric(std::mt19937& rng, int n, int span) {
    std::uniform_int_distribution<int> d(-span, span);
    std::vector<std::vector<long long>> g(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long long x = d(rng);
            if (i == j && x % 2 != 0) x += (x > 0 ? 1 : -1);
            g[i][j] = g[j][i] = x;
        }
    return g;
}

inline Lattice to_lattice(const std::vector<std::vector<long long>>& g) {
    Mat m(g.size(), Vec(g.size()));
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) m[i][j] = Int(g[i][j]);
    return Lattice::from_gram(m);
}

}  // namespace testsup
