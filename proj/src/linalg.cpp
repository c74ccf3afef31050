#include "g2census/linalg.hpp"

#include "g2census/error.hpp"

#include <algorithm>
#include <cassert>

namespace g2census::linalg {

Mat identity(int n) {
    Mat a(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

Mat zeros(int rows, int cols) { return Mat(rows, Vec(cols, 0)); }

Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat t(a[0].size(), Vec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

Mat mul(const Mat& a, const Mat& b) {
    Mat c(a.size(), Vec(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Vec mul(const Mat& a, const Vec& v) {
    Vec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

Vec scale(const Int& c, const Vec& v) {
    Vec r(v);
    for (Int& x : r) x *= c;
    return r;
}

Vec add(const Vec& u, const Vec& v) {
    Vec r(u);
    for (size_t i = 0; i < v.size(); ++i) r[i] += v[i];
    return r;
}

Vec sub(const Vec& u, const Vec& v) {
    Vec r(u);
    for (size_t i = 0; i < v.size(); ++i) r[i] -= v[i];
    return r;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int dot(const Vec& u, const Vec& v) {
    Int s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

Int bilinear(const Vec& u, const Mat& g, const Vec& v) { return dot(u, mul(g, v)); }

Int det(Mat a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::vector<Int> smith_invariants(Mat a) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    std::vector<Int> out;
    int t = 0;
    while (t < m && t < n) {
        // Pivot: smallest nonzero absolute value in the trailing submatrix.
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        for (int i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                for (int j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {  // remainder is a smaller pivot
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                for (int i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (int i = 0; i < m; ++i) std::swap(a[i][t], a[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // Divisibility: pivot must divide the rest of the submatrix.
                for (int i = t + 1; i < m && clean; ++i)
                    for (int j = t + 1; j < n && clean; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (int c = t; c < n; ++c) a[t][c] += a[i][c];
                            clean = false;
                        }
            }
        }
        out.push_back(abs(a[t][t]));
        ++t;
    }
    return out;
}

Inertia inertia(const Mat& g) {
    const int n = static_cast<int>(g.size());
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(g[i][j]);
    std::vector<bool> active(n, true);
    Inertia res;
    int remaining = n;
    while (remaining > 0) {
        int piv = -1;
        for (int i = 0; i < n; ++i)
            if (active[i] && m[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv >= 0) {
            Rat d = m[piv][piv];
            (d > 0 ? res.pos : res.neg) += 1;
            for (int i = 0; i < n; ++i) {
                if (!active[i] || i == piv) continue;
                Rat f = m[i][piv] / d;
                if (f == 0) continue;
                for (int j = 0; j < n; ++j) {
                    if (!active[j] || j == piv) continue;
                    m[i][j] -= f * m[piv][j];
                }
            }
            active[piv] = false;
            --remaining;
            continue;
        }
        int oi = -1, oj = -1;
        for (int i = 0; i < n && oi < 0; ++i) {
            if (!active[i]) continue;
            for (int j = 0; j < n; ++j)
                if (active[j] && j != i && m[i][j] != 0) {
                    oi = i;
                    oj = j;
                    break;
                }
        }
        if (oi < 0) {
            res.null += remaining;
            break;
        }
        // e_i += e_j turns the zero diagonal entry into 2*m[i][j] != 0.
        for (int k = 0; k < n; ++k)
            if (active[k]) m[oi][k] += m[oj][k];
        for (int k = 0; k < n; ++k)
            if (active[k]) m[k][oi] += m[k][oj];
    }
    return res;
}

namespace {

// Apply the 2x2 unimodular column step of the gcd chain: given current
// functional values (w0, wj), replace columns (c0, cj) of u so the values
// become (g, 0).  Returns the new w0 = g.
Int gcd_column_step(Mat& u, Vec& w, int j) {
    Int a = w[0], b = w[j];
    if (b == 0) return a;
    if (a == 0) {
        for (auto& row : u) std::swap(row[0], row[j]);
        std::swap(w[0], w[j]);
        a = w[0];
        b = w[j];
        if (b == 0) return a;
    }
    // Extended gcd: g = x*a + y*b.
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1, r0 = a, r1 = b;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int x2 = x0 - q * x1, y2 = y0 - q * y1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    Int g = r0, x = x0, y = y0;
    if (g < 0) { g = -g; x = -x; y = -y; }
    Int p = a / g, q = b / g;  // new col_j = -q*col_0 + p*col_j keeps det
    for (auto& row : u) {
        Int c0 = row[0], cj = row[j];
        row[0] = x * c0 + y * cj;
        row[j] = -q * c0 + p * cj;
    }
    w[0] = g;
    w[j] = 0;
    return g;
}

}  // namespace

Mat kernel_of_row(const Vec& f) {
    const int n = static_cast<int>(f.size());
    Mat u = identity(n);
    Vec w(f);
    for (int j = 1; j < n; ++j) gcd_column_step(u, w, j);
    if (w[0] == 0) fail(Errc::not_full_rank, "kernel_of_row: zero functional");
    Mat k(n, Vec(n - 1));
    for (int i = 0; i < n; ++i)
        for (int j = 1; j < n; ++j) k[i][j - 1] = u[i][j];
    return k;
}

Mat complete_primitive(const Vec& s) {
    const int n = static_cast<int>(s.size());
    Mat w = identity(n);
    Vec v(s);
    // Row-reduce v to e1 while accumulating the inverse operations in w,
    // so that at the end w * e1 = s and w is unimodular.
    for (int j = 1; j < n; ++j) {
        Int a = v[0], b = v[j];
        if (b == 0) continue;
        Int x0 = 1, y0 = 0, x1 = 0, y1 = 1, r0 = a, r1 = b;
        while (r1 != 0) {
            Int q = r0 / r1;
            Int r2 = r0 - q * r1;
            Int x2 = x0 - q * x1, y2 = y0 - q * y1;
            r0 = r1; r1 = r2;
            x0 = x1; x1 = x2;
            y0 = y1; y1 = y2;
        }
        Int g = r0, x = x0, y = y0;
        if (g < 0) { g = -g; x = -x; y = -y; }
        Int p = a / g, q = b / g;
        // Forward op E on coordinates: (v0, vj) -> (x v0 + y vj, -q v0 + p vj);
        // accumulate w <- w * E^{-1}, E^{-1} = [[p, -y], [q, x]].
        for (auto& row : w) {
            Int c0 = row[0], cj = row[j];
            row[0] = p * c0 + q * cj;
            row[j] = -y * c0 + x * cj;
        }
        v[0] = g;
        v[j] = 0;
    }
    if (v[0] != 1 && v[0] != -1)
        fail(Errc::not_full_rank, "complete_primitive: vector not primitive");
    if (v[0] == -1)
        for (auto& row : w) row[0] = -row[0];
    return w;
}

Vec content_reduce(const Vec& v) {
    Int g = gcd_all(v);
    if (g == 0) fail(Errc::not_full_rank, "content_reduce: zero vector");
    Vec r(v);
    for (Int& x : r) x /= g;
    return r;
}

std::optional<Vec> solve_integer(const Mat& a, const Vec& b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m[i][j] = Rat(a[i][j]);
        m[i][cols] = Rat(b[i]);
    }
    int rank = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[rank], m[p]);
        for (int i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[rank][c];
            for (int j = c; j <= cols; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (int i = rank; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;  // inconsistent
    if (rank < cols) return std::nullopt;          // not full column rank
    Vec x(cols, 0);
    for (int i = 0; i < rank; ++i) {
        Rat v = m[i][cols] / m[i][pivot_col[i]];
        if (denominator(v) != 1) return std::nullopt;
        x[pivot_col[i]] = numerator(v);
    }
    return x;
}

Mat hnf_rows(Mat a) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        while (true) {
            int p = -1;
            for (int i = r; i < m; ++i)
                if (a[i][c] != 0 && (p < 0 || abs(a[i][c]) < abs(a[p][c]))) p = i;
            if (p < 0) break;
            std::swap(a[r], a[p]);
            bool more = false;
            for (int i = r + 1; i < m; ++i) {
                if (a[i][c] == 0) continue;
                Int q = a[i][c] / a[r][c];
                for (int j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) more = true;
            }
            if (!more) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (int j = 0; j < n; ++j) a[r][j] = -a[r][j];
        for (int i = 0; i < r; ++i) {
            Int q = floordiv(a[i][c], a[r][c]);
            if (q == 0) continue;
            for (int j = 0; j < n; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    a.resize(r);
    return a;
}

std::pair<Mat, Int> inverse_times_det(const Mat& a) {
    const int n = static_cast<int>(a.size());
    Int d = det(a);
    if (d == 0) fail(Errc::not_full_rank, "inverse_times_det: singular matrix");
    Mat adj(n, Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat minor;
            minor.reserve(n - 1);
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                Vec row;
                row.reserve(n - 1);
                for (int c = 0; c < n; ++c)
                    if (c != j) row.push_back(a[r][c]);
                minor.push_back(std::move(row));
            }
            Int cof = det(std::move(minor));
            adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return {adj, d};
}

}  // namespace g2census::linalg
