#include "g2census/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace g2census {

using linalg::bilinear;
using linalg::mul;

Lattice Lattice::from_gram(Mat g) {
    const int n = static_cast<int>(g.size());
    if (n < 1) fail(Errc::validation_error, "lattice rank must be >= 1");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(g[i].size()) != n)
            fail(Errc::validation_error, "gram matrix not square");
        for (int j = 0; j < i; ++j)
            if (g[i][j] != g[j][i]) fail(Errc::validation_error, "gram matrix not symmetric");
    }
    return Lattice{std::move(g)};
}

Int FiniteAbelianGroup::order() const {
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
}

std::string FiniteAbelianGroup::str() const {
    if (invariant_factors.empty()) return "trivial";
    std::ostringstream os;
    for (size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) os << " x ";
        os << "Z/" << invariant_factors[i];
    }
    return os.str();
}

FiniteAbelianGroup FiniteAbelianGroup::direct_sum(const FiniteAbelianGroup& a,
                                                  const FiniteAbelianGroup& b) {
    // Diagonal matrix of all factors -> Smith invariants -> chain form.
    std::vector<Int> all = a.invariant_factors;
    all.insert(all.end(), b.invariant_factors.begin(), b.invariant_factors.end());
    if (all.empty()) return {};
    const int n = static_cast<int>(all.size());
    Mat d = linalg::zeros(n, n);
    for (int i = 0; i < n; ++i) d[i][i] = all[i];
    std::vector<Int> inv = linalg::smith_invariants(d);
    std::vector<Int> keep;
    for (const Int& x : inv)
        if (x >= 2) keep.push_back(x);
    return {keep};
}

Int det_gram(const Lattice& l) { return linalg::det(l.gram); }

std::pair<int, int> signature(const Lattice& l) {
    if (det_gram(l) == 0) fail(Errc::degenerate_lattice, "signature: det = 0");
    linalg::Inertia in = linalg::inertia(l.gram);
    return {in.pos, in.neg};
}

bool is_even(const Lattice& l) {
    for (int i = 0; i < l.rank(); ++i)
        if (l.gram[i][i] % 2 != 0) return false;
    return true;
}

FiniteAbelianGroup discriminant_group(const Lattice& l) {
    if (det_gram(l) == 0) fail(Errc::degenerate_lattice, "discriminant_group: det = 0");
    std::vector<Int> inv = linalg::smith_invariants(l.gram);
    std::vector<Int> keep;
    for (const Int& d : inv)
        if (d >= 2) keep.push_back(d);
    return {keep};
}

std::vector<Vec> orth_complement_of_vector(const Lattice& l, const Vec& v) {
    if (linalg::is_zero(v)) fail(Errc::validation_error, "orth complement of zero vector");
    Vec f = mul(l.gram, v);
    Mat k = linalg::kernel_of_row(f);  // n x (n-1) columns
    const int n = l.rank();
    std::vector<Vec> basis;
    for (int j = 0; j < n - 1; ++j) {
        Vec col(n);
        for (int i = 0; i < n; ++i) col[i] = k[i][j];
        basis.push_back(col);
    }
    // Canonical sign: first nonzero coordinate positive.
    for (Vec& b : basis) {
        for (const Int& x : b) {
            if (x == 0) continue;
            if (x < 0)
                for (Int& y : b) y = -y;
            break;
        }
    }
    return basis;
}

Int index_of_sublattice(const std::vector<Vec>& vectors, const Lattice& l) {
    if (static_cast<int>(vectors.size()) != l.rank())
        fail(Errc::not_full_rank, "index_of_sublattice: wrong number of vectors");
    Mat m(vectors.begin(), vectors.end());
    Int d = linalg::det(m);
    if (d == 0) fail(Errc::not_full_rank, "index_of_sublattice: dependent vectors");
    return abs(d);
}

namespace detail {

TransverseForm make_transverse(const Lattice& l, const Vec& h) {
    const int n = l.rank();
    TransverseForm t;
    t.h_func = mul(l.gram, h);
    t.h2 = linalg::dot(h, t.h_func);
    if (t.h2 <= 0) fail(Errc::bad_signature, "transverse form needs H^2 > 0");
    auto sig = signature(l);
    if (sig.first != 1 || sig.second != n - 1)
        fail(Errc::bad_signature, "transverse form needs signature (1, n-1)");
    t.sat = linalg::content_reduce(h);
    t.sat_h = linalg::dot(t.sat, t.h_func);  // > 0 since direction preserved
    Mat u = linalg::complete_primitive(t.sat);
    t.lift = linalg::zeros(n, n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 1; j < n; ++j) t.lift[i][j - 1] = u[i][j];
    // Integer Gram of F: h h^T - H^2 G, restricted to the section.
    Mat gf(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gf[i][j] = t.h_func[i] * t.h_func[j] - t.h2 * l.gram[i][j];
    t.q = mul(linalg::transpose(t.lift), mul(gf, t.lift));
    return t;
}

namespace {

// Size-reduce a positive definite Gram by integer column operations (greedy
// pairwise reduction; exact for rank <= 3 for our purposes since the final
// enumeration is exhaustive anyway).  Returns the transform T with
// Q_red = T^T Q T.
std::pair<Mat, Mat> reduce_basis(const Mat& q0) {
    const int k = static_cast<int>(q0.size());
    Mat t = linalg::identity(k);
    Mat q = q0;
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 256) {
        changed = false;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                if (i == j || q[j][j] == 0) continue;
                Int mu = round_rat(Rat(q[i][j], q[j][j]));
                if (mu == 0) continue;
                // col_i -= mu * col_j, applied symmetrically to the Gram
                for (int r = 0; r < k; ++r) t[r][i] -= mu * t[r][j];
                for (int r = 0; r < k; ++r) q[r][i] -= mu * q[r][j];
                for (int c = 0; c < k; ++c) q[i][c] -= mu * q[j][c];
                changed = true;
            }
    }
    return {q, t};
}

void enumerate_rec(const Mat& q, const std::vector<std::vector<Rat>>& m,
                   const std::vector<Rat>& d, const Int& bound, int i, Vec& x,
                   std::vector<std::pair<Vec, Int>>& out) {
    if (i < 0) {
        if (linalg::is_zero(x)) return;
        Int val = bilinear(x, q, x);
        if (val <= bound) out.emplace_back(x, val);
        return;
    }
    // Offset of the completed square for coordinate i.
    Rat c = 0;
    for (size_t j = i + 1; j < x.size(); ++j) c += m[i][j] * Rat(x[j]);
    // Remaining budget: bound - sum_{j>i} d_j (x_j + c_j)^2; recompute exactly.
    Rat used = 0;
    for (size_t j = i + 1; j < x.size(); ++j) {
        Rat cj = 0;
        for (size_t l = j + 1; l < x.size(); ++l) cj += m[j][l] * Rat(x[l]);
        Rat s = Rat(x[j]) + cj;
        used += d[j] * s * s;
    }
    Rat budget = Rat(bound) - used;
    if (budget < 0) return;
    Int center = round_rat(-c);
    for (Int v = center;; --v) {
        Rat s = Rat(v) + c;
        if (d[i] * s * s > budget) break;
        x[i] = v;
        enumerate_rec(q, m, d, bound, i - 1, x, out);
    }
    for (Int v = center + 1;; ++v) {
        Rat s = Rat(v) + c;
        if (d[i] * s * s > budget) break;
        x[i] = v;
        enumerate_rec(q, m, d, bound, i - 1, x, out);
    }
    x[i] = 0;
}

}  // namespace

std::vector<std::pair<Vec, Int>> enumerate_upto(const Mat& q0, const Int& bound) {
    const int k = static_cast<int>(q0.size());
    std::vector<std::pair<Vec, Int>> out;
    if (k == 0 || bound < 0) return out;
    auto [q, t] = reduce_basis(q0);
    // Exact completion of squares: Q(x) = sum d_i (x_i + sum_{j>i} m_ij x_j)^2.
    std::vector<std::vector<Rat>> c(k, std::vector<Rat>(k)), m(k, std::vector<Rat>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) c[i][j] = Rat(q[i][j]);
    std::vector<Rat> d(k);
    for (int i = 0; i < k; ++i) {
        d[i] = c[i][i];
        if (d[i] <= 0) fail(Errc::bad_signature, "enumerate_upto: form not positive definite");
        for (int j = i + 1; j < k; ++j) m[i][j] = c[i][j] / c[i][i];
        for (int a = i + 1; a < k; ++a)
            for (int b = i + 1; b < k; ++b) c[a][b] -= c[a][i] * c[i][b] / c[i][i];
    }
    Vec x(k, 0);
    std::vector<std::pair<Vec, Int>> reduced;
    enumerate_rec(q, m, d, bound, k - 1, x, reduced);
    out.reserve(reduced.size());
    for (auto& [rx, val] : reduced) out.emplace_back(mul(t, rx), val);
    return out;
}

}  // namespace detail

namespace {

// Witness canonicalisation: shift by sat(H) so v.H lands in [0, sat.H);
// when v.H = 0 make the first nonzero coordinate positive.
Vec canonical_witness(Vec v, const detail::TransverseForm& t) {
    Int vh = linalg::dot(v, t.h_func);
    Int shift = floordiv(vh, t.sat_h);
    if (shift != 0) v = linalg::sub(v, linalg::scale(shift, t.sat));
    if (linalg::dot(v, t.h_func) == 0) {
        for (const Int& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (Int& y : v) y = -y;
            break;
        }
    }
    return v;
}

}  // namespace

MinResult fundamental_min(const Lattice& l, const Vec& h) {
    const int n = l.rank();
    if (n < 2) fail(Errc::bad_signature, "fundamental_min needs rank >= 2");
    detail::TransverseForm t = detail::make_transverse(l, h);
    // Upper bound: value of the first reduced/section basis vector.
    Int bound = t.q[0][0];
    for (int i = 1; i < n - 1; ++i) bound = std::min(bound, t.q[i][i]);
    auto cands = detail::enumerate_upto(t.q, bound);
    Int best = bound;
    for (auto& [x, val] : cands) best = std::min(best, val);
    std::vector<Vec> winners;
    for (auto& [x, val] : cands)
        if (val == best) winners.push_back(canonical_witness(mul(t.lift, x), t));
    std::sort(winners.begin(), winners.end());
    winners.erase(std::unique(winners.begin(), winners.end()), winners.end());
    return {best, winners.front()};
}

std::vector<Vec> vectors_with(const Lattice& l, const Vec& h, const Int& d, const Int& n) {
    detail::TransverseForm t = detail::make_transverse(l, h);
    const Int target = d * d - t.h2 * n;  // F(v) for any qualifying v
    std::vector<Vec> out;
    if (target < 0) return out;
    if (target == 0) {
        // v must be rational in H: v = (d / sat.H) * sat.
        if (d % t.sat_h == 0) {
            Vec v = linalg::scale(d / t.sat_h, t.sat);
            if (!linalg::is_zero(v) && l.norm(v) == n) out.push_back(v);
        }
        return out;
    }
    for (auto& [x, val] : detail::enumerate_upto(t.q, target)) {
        if (val != target) continue;
        Vec w = mul(t.lift, x);
        Int wh = linalg::dot(w, t.h_func);
        if ((d - wh) % t.sat_h != 0) continue;
        Vec v = linalg::add(w, linalg::scale((d - wh) / t.sat_h, t.sat));
        if (l.norm(v) != n || linalg::dot(v, t.h_func) != d)
            fail(Errc::inconsistent, "vectors_with: lift failed re-check");
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Overlattice> prime_index_overlattices(const Lattice& l, const Int& p) {
    if (!is_prime(p)) fail(Errc::validation_error, "overlattice index must be prime");
    if (!is_even(l)) fail(Errc::validation_error, "overlattice search needs an even lattice");
    if (det_gram(l) == 0) fail(Errc::degenerate_lattice, "overlattice search: det = 0");
    const int n = l.rank();
    const Int two_p2 = 2 * p * p;

    // Keyed by the row-HNF of p*L~ inside L; value keeps the best glue rep.
    std::map<Mat, std::pair<Vec, Int>> found;
    Vec k(n, 0);
    // Enumerate K over (L/pL) \ {0} by coordinates in [0, p).
    while (true) {
        int i = 0;
        while (i < n && k[i] == p - 1) k[i++] = 0;
        if (i == n) break;
        ++k[i];

        // Symmetric representative, so K^2 is small and well-defined mod 2p^2.
        Vec ks(k);
        for (Int& x : ks)
            if (2 * x > p) x -= p;
        Vec f = mul(l.gram, ks);
        bool divisible = std::all_of(f.begin(), f.end(), [&](const Int& x) { return x % p == 0; });
        if (!divisible) continue;
        Int ksq = linalg::dot(ks, f);
        if (mod_floor(ksq, two_p2) != 0) continue;

        // HNF of the index-p sublattice p*L~ = <p e_i, K> of L.
        Mat rows = linalg::zeros(n + 1, n);
        for (int r = 0; r < n; ++r) rows[r][r] = p;
        rows[n] = ks;
        Mat h = linalg::hnf_rows(rows);
        auto it = found.find(h);
        if (it == found.end()) {
            found.emplace(h, std::make_pair(ks, ksq));
        } else if (ksq < it->second.second ||
                   (ksq == it->second.second && ks < it->second.first)) {
            it->second = {ks, ksq};
        }
    }

    std::vector<Overlattice> out;
    for (auto& [h, glue] : found) {
        // Basis of L~ is h / p; its Gram is h G h^T / p^2.
        Mat g2 = mul(h, mul(l.gram, linalg::transpose(h)));
        for (auto& row : g2)
            for (Int& x : row) {
                if (x % (p * p) != 0) fail(Errc::inconsistent, "overlattice gram not integral");
                x /= p * p;
            }
        Lattice bigger{g2};
        if (!is_even(bigger)) fail(Errc::inconsistent, "overlattice not even");
        // Old basis in new basis: E = p * h^{-1}.
        auto [adj, dh] = linalg::inverse_times_det(h);
        Mat emb(n, Vec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int num = p * adj[i][j];
                if (num % dh != 0) fail(Errc::inconsistent, "overlattice embedding not integral");
                emb[i][j] = num / dh;
            }
        out.push_back(Overlattice{std::move(g2), std::move(emb), p, glue.first, glue.second});
    }
    return out;
}

}  // namespace g2census
