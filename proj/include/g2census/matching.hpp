// Classification of block pairs into the matching trichotomy (perpendicular /
// orthogonal with rank-1 intersection / skew), construction of the joint
// lattices W and W_1, and the arithmetic feasibility and genericity checks
// that decide which non-perpendicular configurations are realisable.
#pragma once

#include "g2census/catalog.hpp"
#include "g2census/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g2census {

enum class MatchClass { perpendicular, orthogonal_intersecting, skew };
enum class Side { plus, minus };

// Cross-pairing data consumed by the general invariant formulas: the matrix
// of products between the chosen bases of N+ and N- inside the joint lattice,
// with the c2 pairings expressed in the same bases.
struct PairingConfig {
    Mat cross;  // (rk N+) x (rk N-)
    Vec c2_plus;
    Vec c2_minus;
};

PairingConfig perpendicular_pairing(const Vec& c2_plus, const Vec& c2_minus);

// Orthogonal-with-intersection compatibility: Some(k, B^2) iff the two sides
// share the complement square B+^2 = B-^2 and Delta+ Delta- = k^2 A+^2 A-^2
// for an integer k.
struct OrthGlue {
    Int k;
    Int B_sq;
};
std::optional<OrthGlue> orth_compatibility(const Rank2Entry& ep, const AmpleRecord& ap,
                                           const Rank2Entry& em, const AmpleRecord& am);

struct OrthConfig {
    int mm_plus = 0, mm_minus = 0;
    Int A_sq_plus, A_sq_minus;
    Int c2_A_plus, c2_A_minus;
    Int k, B_sq;
    Mat w_gram;  // rank-3 joint lattice in basis (G+, H+, completion of B-)
    PairingConfig pairing;  // nef bases on both sides
};
OrthConfig build_orth_joint_lattice(const Rank2Entry& ep, const AmpleRecord& ap,
                                    const Rank2Entry& em, const AmpleRecord& am, const Int& k);

struct SkewConfig {
    int mm_plus = 0, mm_minus = 0;
    Int A_sq_plus, A_sq_minus;
    Int c2_A_plus, c2_A_minus;
    Int B_sq_plus, B_sq_minus;
    Int delta_plus, delta_minus;
    Int h2_plus, h2_minus;  // squares of the nef classes H used for genericity
    Int k;
    Vec compl_plus, compl_minus;  // basis completions (s, t) of A in nef coords
    Mat w1_gram;                  // 4x4 in basis (C+, A+, C-, A-)
    Int discriminant;             // D = Delta+ Delta- - k^2 A+^2 A-^2
    Mat lambda_plus, lambda_minus;              // 3x3 Grams of the A-complement lattices
    Mat lambda_plus_basis, lambda_minus_basis;  // 4x3 columns in W_1 coordinates
    Vec h_plus_in_lambda, h_minus_in_lambda;    // nef H of each side in Lambda coords
    PairingConfig pairing;                      // (C, A) bases on both sides
};

// Assembles W_1 for a skew configuration with glue k (k = 1 in every
// realisable catalog case).  The basis completion of A = (a, b) defaults to
// the (s, t) with a t - b s = 1 of minimal |s|+|t| (lexicographically
// smallest on ties); an explicit completion with |a t - b s| = 1 may be
// supplied to pin a particular basis.
SkewConfig build_skew_config(const Rank2Entry& ep, const AmpleRecord& ap, const Rank2Entry& em,
                             const AmpleRecord& am, const Int& k = 1,
                             std::optional<std::pair<Vec, Vec>> completions = std::nullopt);

// Exact evaluation of the sufficient inequality -H^2 B∓^2 D >= Δ± Δ+ Δ- which
// forces the transverse minimum of Lambda± to reach Δ±.
bool skew_min_bound_hypothesis(const SkewConfig& c, Side side);

struct GenericityReport {
    int family_mm = 0;
    Int delta;
    Int min_f;
    Vec witness;  // in Lambda coordinates
    Int witness_dot_h, witness_norm;
    bool passes_min_bound = false;      // min_f >= delta
    std::vector<Vec> isotropic_deg2;    // v.H = 2, v^2 = 0
    std::vector<Vec> orthogonal_roots;  // v.H = 0, v^2 = -2
    bool bound_hypothesis = false;      // the sufficient inequality above
};

// Transverse-minimum and obstruction-vector searches on a polarised rank-3
// complement lattice.
GenericityReport genericity_check(const SkewConfig& c, Side side);
GenericityReport genericity_check_lattice(const Mat& lambda_gram, const Vec& h_in_lambda,
                                          const Int& delta, int family_mm, bool bound_hyp);

// Sufficient criterion for a primitive embedding into the rank-22 K3 lattice:
// even, s+ <= 3, s- <= 19, rank <= 11.  One-directional; false only means
// "not guaranteed by this criterion".
bool nikulin_embedding_guaranteed(const Lattice& s);

struct OverlatticeCheck {
    Overlattice over;
    FiniteAbelianGroup w1_discriminant_group;
    GenericityReport plus, minus;
    bool obstructed = false;  // some side fails the genericity check
};

struct OverlatticeObstruction {
    Int discriminant;
    bool square_free = false;
    std::vector<OverlatticeCheck> overlattices;
    bool all_obstructed = false;
    std::string verdict;
};

// Decides whether the skew configuration admits a non-primitive embedding:
// square-free discriminant rules every overlattice out; otherwise each even
// prime-index overlattice is rebuilt and its complement lattices re-checked.
OverlatticeObstruction overlattice_obstruction(const SkewConfig& c);

struct PairClassification {
    bool perpendicular = true;  // a perpendicular configuration always exists
    bool nikulin_guaranteed_perp = false;
    std::vector<OrthConfig> orth;
    std::vector<SkewConfig> skew;
};

// Runs the whole trichotomy for one unordered pair of census blocks.  Pairs
// involving a rank-1 block are perpendicular-only.
PairClassification classify_pair(const Catalog& cat, const BlockRef& plus,
                                 const BlockRef& minus);

}  // namespace g2census
