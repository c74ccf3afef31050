// Small exact integer linear algebra kit: determinants, Smith/Hermite normal
// forms, kernels of functionals, basis completion and exact linear solves.
// Everything is over cpp_int / cpp_rational; matrices are dense row-major
// vectors of vectors (ranks in this project never exceed ~6).
#pragma once

#include "g2census/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace g2census {

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

namespace linalg {

Mat identity(int n);
Mat zeros(int rows, int cols);
Mat transpose(const Mat& a);
Mat mul(const Mat& a, const Mat& b);
Vec mul(const Mat& a, const Vec& v);
Vec scale(const Int& c, const Vec& v);
Vec add(const Vec& u, const Vec& v);
Vec sub(const Vec& u, const Vec& v);
bool is_zero(const Vec& v);
Int dot(const Vec& u, const Vec& v);

// u^T G v for a symmetric Gram matrix G.
Int bilinear(const Vec& u, const Mat& g, const Vec& v);

// Exact determinant by fraction-free (Bareiss) elimination.
Int det(Mat a);

// Invariant factors d1 | d2 | ... of the integer matrix (nonzero ones only,
// including any equal to 1).
std::vector<Int> smith_invariants(Mat a);

// Inertia of a symmetric integer matrix, by exact rational symmetric
// elimination with the usual zero-diagonal row/column trick.
struct Inertia {
    int pos = 0, neg = 0, null = 0;
};
Inertia inertia(const Mat& g);

// Columns spanning the saturated kernel {x : f.x = 0} of a nonzero integer
// functional f, as an n x (n-1) matrix.
Mat kernel_of_row(const Vec& f);

// Unimodular n x n matrix whose first column is the primitive vector s.
Mat complete_primitive(const Vec& s);

// Divide v by the gcd of its entries (direction preserved); v must be nonzero.
Vec content_reduce(const Vec& v);

// Unique rational solution of A x = b for full-column-rank A, returned only
// if it is integral and consistent with every row; nullopt otherwise.
std::optional<Vec> solve_integer(const Mat& a, const Vec& b);

// Row-style Hermite normal form with positive pivots and entries above each
// pivot reduced into [0, pivot); zero rows dropped.  Canonical representative
// of the row span, used to compare sublattices of L (x) Q.
Mat hnf_rows(Mat a);

// Adjugate-based exact inverse scaled by the determinant: returns (inv, det)
// with inv * a == det * I.
std::pair<Mat, Int> inverse_times_det(const Mat& a);

}  // namespace linalg
}  // namespace g2census
