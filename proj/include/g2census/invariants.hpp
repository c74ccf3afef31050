// The topological invariant package of a twisted connected sum: Betti
// numbers, the greatest divisor d of the spin characteristic class, the
// number of smooth structures d^ = gcd(28, Num(d/4)), the Z/d^-valued smooth
// invariant mu, and cohomology torsion, via both the specialised closed
// forms per matching class and the general congruence route, plus the
// homeomorphism / diffeomorphism comparison.
#pragma once

#include "g2census/catalog.hpp"
#include "g2census/matching.hpp"

namespace g2census {

struct TcsTopology {
    Int b2, b3;
    Int d;      // divides 24 for every computed case (0 reserved for p_M = 0)
    Int d_hat;  // gcd(28, Num(d/4))
    Int mu;     // residue mod d_hat
    FiniteAbelianGroup tor_h3, tor_h4;
    bool two_connected = false;
};

// gcd(28, Num(d/4)); 28 for d = 0; OddD for odd d.
Int d_hat(const Int& d);

// Perpendicular matching: b2 = 0, b3 = b3(Z+) + b3(Z-) + 23,
// d = gcd of all c2 pairings with 24, mu = 0, torsion-free, 2-connected.
TcsTopology perp_invariants(const Catalog& cat, const BlockRef& plus, const BlockRef& minus);

// Orthogonal matching with rank-1 intersection (k = 1 only): b2 = 1,
// b3 = b3(Z+) + b3(Z-) + 22, d = gcd(c2.A+, c2.A-, 24), mu from the
// greatest-divisor formula when 8 | d.
TcsTopology orth_invariants(const Catalog& cat, const OrthConfig& cfg);

// Skew matching (k = 1 only): b2 = 0, b3 = b3(Z+) + b3(Z-) + 21, d and mu as
// in the orthogonal case, torsion-free, 2-connected.
TcsTopology skew_invariants(const Catalog& cat, const SkewConfig& cfg);

// General route, from the cross-pairing matrix alone: the largest divisor d
// of 24 such that c2 of each side lies mod d in the image of the pairing
// with the other side.
Int d_from_config(const PairingConfig& cfg);

// General route for mu: enumerate all even solutions x± of
// b∓(x±) = c2(Z∓) (mod d) with coordinates in [0, window*d), take
// x+.x-/4 mod d^, and verify the value is identical across every solution
// pair.  Returns 0 immediately when d^ = 1.
Int mu_from_config(const PairingConfig& cfg, const Int& d, int window = 2);

// Torsion of H^4: direct sum of the cotorsion of the two pairing images.
FiniteAbelianGroup torsion_h4(const PairingConfig& cfg);

// Wilkens-style comparison for 2-connected manifolds with torsion-free H^4;
// HypothesesNotMet otherwise.
bool same_homeo(const TcsTopology& a, const TcsTopology& b);
bool same_diffeo(const TcsTopology& a, const TcsTopology& b);

}  // namespace g2census
