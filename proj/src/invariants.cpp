#include "g2census/invariants.hpp"

#include <algorithm>

namespace g2census {

Int d_hat(const Int& d) {
    if (d < 0 || d % 2 != 0) fail(Errc::odd_d, "d must be a non-negative even integer");
    Int num = d == 0 ? Int(0) : d / gcd(d, Int(4));
    return gcd(Int(28), num);
}

TcsTopology perp_invariants(const Catalog& cat, const BlockRef& plus, const BlockRef& minus) {
    TcsTopology t;
    t.b2 = 0;
    t.b3 = block_b3_Z(cat, plus) + block_b3_Z(cat, minus) + 23;
    Vec all = block_c2(cat, plus);
    Vec c2m = block_c2(cat, minus);
    all.insert(all.end(), c2m.begin(), c2m.end());
    all.push_back(24);
    t.d = gcd_all(all);
    t.d_hat = d_hat(t.d);
    t.mu = 0;
    t.two_connected = true;
    return t;
}

namespace {

Int mu_specialized(const Int& d, const Int& gd_plus, const Int& gd_minus) {
    if (d % 8 != 0) return 0;
    return mod_floor(gd_plus * gd_minus / 4, 2);
}

}  // namespace

TcsTopology orth_invariants(const Catalog& cat, const OrthConfig& cfg) {
    if (cfg.k != 1) fail(Errc::k_not_one, "d and mu formulas are available only for k = 1");
    const Rank2Entry& ep = cat.by_mm(cfg.mm_plus);
    const Rank2Entry& em = cat.by_mm(cfg.mm_minus);
    TcsTopology t;
    t.b2 = 1;
    t.b3 = ep.b3_Z + em.b3_Z + 22;
    t.d = gcd(gcd(abs(cfg.c2_A_plus), abs(cfg.c2_A_minus)), Int(24));
    t.d_hat = d_hat(t.d);
    t.mu = mu_specialized(t.d, gd_c2bar(ep), gd_c2bar(em));
    t.tor_h4 = torsion_h4(cfg.pairing);
    t.two_connected = false;  // H^2 = Z
    return t;
}

TcsTopology skew_invariants(const Catalog& cat, const SkewConfig& cfg) {
    if (cfg.k != 1) fail(Errc::k_not_one, "d and mu formulas are available only for k = 1");
    const Rank2Entry& ep = cat.by_mm(cfg.mm_plus);
    const Rank2Entry& em = cat.by_mm(cfg.mm_minus);
    TcsTopology t;
    t.b2 = 0;
    t.b3 = ep.b3_Z + em.b3_Z + 21;
    t.d = gcd(gcd(abs(cfg.c2_A_plus), abs(cfg.c2_A_minus)), Int(24));
    t.d_hat = d_hat(t.d);
    t.mu = mu_specialized(t.d, gd_c2bar(ep), gd_c2bar(em));
    t.tor_h4 = torsion_h4(cfg.pairing);  // trivial for k = 1
    t.two_connected = true;
    return t;
}

namespace {

// Does c = M x (mod d) admit a solution x over Z/d?  Brute force over the
// small coordinate box; ranks here are 1 or 2 and d <= 24.
bool solvable_mod(const Mat& m, const Vec& c, const Int& d) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    const int rows = static_cast<int>(m.size());
    Vec x(cols, 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < rows && ok; ++i) {
            Int acc = 0;
            for (int j = 0; j < cols; ++j) acc += m[i][j] * x[j];
            ok = mod_floor(acc - c[i], d) == 0;
        }
        if (ok) return true;
        int i = 0;
        while (i < cols && x[i] == d - 1) x[i++] = 0;
        if (i == cols) return false;
        ++x[i];
    }
}

// All even coordinate vectors x in [0, window*d)^n with M x = c (mod d).
std::vector<Vec> even_solutions(const Mat& m, const Vec& c, const Int& d, int window) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    const int rows = static_cast<int>(m.size());
    const Int hi = window * d;
    std::vector<Vec> out;
    Vec x(cols, 0);
    while (true) {
        bool ok = true;
        for (int i = 0; i < rows && ok; ++i) {
            Int acc = 0;
            for (int j = 0; j < cols; ++j) acc += m[i][j] * x[j];
            ok = mod_floor(acc - c[i], d) == 0;
        }
        if (ok) out.push_back(x);
        int i = 0;
        while (i < cols && x[i] + 2 >= hi) x[i++] = 0;
        if (i == cols) break;
        x[i] += 2;
    }
    return out;
}

}  // namespace

Int d_from_config(const PairingConfig& cfg) {
    Mat cross_t = linalg::transpose(cfg.cross);
    for (Int d : {24, 12, 8, 6, 4, 2, 1}) {
        // c2 of each side must lie in the image of the pairing with the other
        // side, mod d.
        if (solvable_mod(cfg.cross, cfg.c2_plus, d) && solvable_mod(cross_t, cfg.c2_minus, d))
            return d;
    }
    return 1;
}

Int mu_from_config(const PairingConfig& cfg, const Int& d, int window) {
    Int dh = d_hat(d);
    if (dh == 1) return 0;
    if (d == 0)
        fail(Errc::validation_error,
             "mu congruence route needs d > 0 (d = 0 never arises from a census)");
    Mat cross_t = linalg::transpose(cfg.cross);
    // x+ solves b-(x+) = c2(Z-) mod d, i.e. cross^T x+ = c2_minus;
    // x- solves cross x- = c2_plus.
    std::vector<Vec> sol_plus = even_solutions(cross_t, cfg.c2_minus, d, window);
    std::vector<Vec> sol_minus = even_solutions(cfg.cross, cfg.c2_plus, d, window);
    if (sol_plus.empty() || sol_minus.empty())
        fail(Errc::no_solution, "mu congruence has no even solution; d is inconsistent");
    bool have = false;
    Int mu = 0;
    for (const Vec& xp : sol_plus) {
        for (const Vec& xm : sol_minus) {
            Int prod = linalg::bilinear(xp, cfg.cross, xm);
            if (prod % 4 != 0) fail(Errc::inconsistent, "x+.x- not divisible by 4");
            Int val = mod_floor(prod / 4, dh);
            if (!have) {
                mu = val;
                have = true;
            } else if (val != mu) {
                fail(Errc::inconsistent, "mu differs across congruence solutions");
            }
        }
    }
    return mu;
}

FiniteAbelianGroup torsion_h4(const PairingConfig& cfg) {
    auto cotorsion = [](const Mat& m) {
        FiniteAbelianGroup g;
        for (const Int& s : linalg::smith_invariants(m))
            if (s >= 2) g.invariant_factors.push_back(s);
        return g;
    };
    return FiniteAbelianGroup::direct_sum(cotorsion(cfg.cross),
                                          cotorsion(linalg::transpose(cfg.cross)));
}

namespace {

void require_wilkens_hypotheses(const TcsTopology& t) {
    if (!t.two_connected || !t.tor_h4.trivial())
        fail(Errc::hypotheses_not_met,
             "homeomorphism comparison needs 2-connected manifolds with torsion-free H^4");
}

}  // namespace

bool same_homeo(const TcsTopology& a, const TcsTopology& b) {
    require_wilkens_hypotheses(a);
    require_wilkens_hypotheses(b);
    return a.b3 == b.b3 && a.d == b.d;
}

bool same_diffeo(const TcsTopology& a, const TcsTopology& b) {
    return same_homeo(a, b) && a.mu == b.mu;
}

}  // namespace g2census
