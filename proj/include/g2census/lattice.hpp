// Exact arithmetic on integer lattices: determinants, signatures,
// discriminant groups, orthogonal complements, constrained short-vector
// enumeration, minima of induced definite forms, and prime-index even
// overlattices.  A lattice is a free Z-module of finite rank with a
// symmetric integer Gram matrix in a fixed basis; every operation here is a
// pure function of exact integers.
#pragma once

#include "g2census/error.hpp"
#include "g2census/linalg.hpp"
#include "g2census/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace g2census {

struct Lattice {
    Mat gram;  // rank x rank, symmetric

    int rank() const { return static_cast<int>(gram.size()); }
    Int inner(const Vec& u, const Vec& v) const { return linalg::bilinear(u, gram, v); }
    Int norm(const Vec& v) const { return inner(v, v); }

    static Lattice from_gram(Mat g);  // validates symmetry and rank >= 1
};

// Finite abelian group in invariant-factor form d1 | d2 | ... (each >= 2);
// the empty sequence is the trivial group.
struct FiniteAbelianGroup {
    std::vector<Int> invariant_factors;

    bool trivial() const { return invariant_factors.empty(); }
    Int order() const;
    std::string str() const;  // "trivial", "Z/49", "Z/2 x Z/2", ...
    bool operator==(const FiniteAbelianGroup&) const = default;

    static FiniteAbelianGroup direct_sum(const FiniteAbelianGroup&, const FiniteAbelianGroup&);
};

// Even overlattice L~ of prime index p, with L~'s Gram in its own basis, the
// expression of the old basis in the new one, and the glue vector K in L
// whose p-th fraction was adjoined (minimal norm representative).
struct Overlattice {
    Mat new_gram;
    Mat embedding;  // row i = coordinates of old basis vector e_i in the new basis
    Int index;
    Vec glue;
    Int glue_norm;
};

Int det_gram(const Lattice& l);

// Exact inertia signature (s+, s-); throws DegenerateLattice when det = 0.
std::pair<int, int> signature(const Lattice& l);

bool is_even(const Lattice& l);

// Invariant factors of coker(gram); trivial for unimodular lattices.
FiniteAbelianGroup discriminant_group(const Lattice& l);

// Basis of the saturated sublattice {w : w.v = 0} for nonzero v; at rank 2
// this is a single primitive generator with canonical sign (first nonzero
// coordinate positive).
std::vector<Vec> orth_complement_of_vector(const Lattice& l, const Vec& v);

// |det| of the coordinate matrix of a full set of independent vectors.
Int index_of_sublattice(const std::vector<Vec>& vectors, const Lattice& l);

// F(v) := (v.H)^2 - H^2 v^2, the transverse form attached to a class H with
// H^2 > 0 in a lattice of signature (1, n-1).  F is non-negative, vanishes
// exactly on QH, is invariant under v -> v + mH, and descends to a
// positive-definite integer form on L modulo the saturation of H.
struct MinResult {
    Int min;
    Vec witness;  // canonical: v.H reduced into [0, sat(H).H), then lex-min
};
MinResult fundamental_min(const Lattice& l, const Vec& h);

// Complete list of nonzero v with v.H = d and v^2 = n (finite under the
// signature precondition); sorted lexicographically.
std::vector<Vec> vectors_with(const Lattice& l, const Vec& h, const Int& d, const Int& n);

// All even overlattices of prime index p up to equality as sublattices of
// L (x) Q: glue vectors K with K.L in pZ, K^2 = 0 mod 2p^2, K not in pL.
// Composite glue indices are not supported (the census never needs them).
std::vector<Overlattice> prime_index_overlattices(const Lattice& l, const Int& p);

namespace detail {

// Shared machinery for fundamental_min / vectors_with: the integer Gram of F,
// the saturation of H, and a section of the quotient L / sat(H).
struct TransverseForm {
    Vec h_func;  // v -> v.H as a coordinate functional
    Int h2;
    Vec sat;   // primitive generator of QH n L with sat.H > 0
    Int sat_h;
    Mat lift;  // n x (n-1) columns: lifts of a quotient basis
    Mat q;     // (n-1) x (n-1) positive definite quotient Gram of F
};
TransverseForm make_transverse(const Lattice& l, const Vec& h);

// All x (including both signs, excluding 0) with x^T Q x <= bound, paired
// with the exact value; Q must be positive definite of rank <= 3.
std::vector<std::pair<Vec, Int>> enumerate_upto(const Mat& q, const Int& bound);

}  // namespace detail

}  // namespace g2census
