#include "doctest.h"
#include "test_support.hpp"

#include "g2census/invariants.hpp"

using namespace g2census;

namespace {

const Catalog& cat() {
    static Catalog c = load_catalog(testsup::data_dir());
    return c;
}

BlockRef rank1_ref(const std::string& name) {
    for (int i = 0; i < static_cast<int>(cat().rank1.size()); ++i)
        if (cat().rank1[i].name == name) return {true, i};
    FAIL("no such rank-1 entry");
    return {};
}

const AmpleRecord& record(int mm, long long a_sq) {
    for (const auto& r : cat().by_mm(mm).amples)
        if (r.A_sq == a_sq) return r;
    FAIL("no such ample record");
    static AmpleRecord dummy;
    return dummy;
}

OrthConfig orth(int mp, long long ap, int mmn, long long am) {
    return build_orth_joint_lattice(cat().by_mm(mp), record(mp, ap), cat().by_mm(mmn),
                                    record(mmn, am), 1);
}

SkewConfig skew(int mp, long long ap, int mmn, long long am) {
    return build_skew_config(cat().by_mm(mp), record(mp, ap), cat().by_mm(mmn), record(mmn, am));
}

}  // namespace

TEST_CASE("d_hat") {
    CHECK(d_hat(8) == 2);
    CHECK(d_hat(24) == 2);
    CHECK(d_hat(12) == 1);
    CHECK(d_hat(6) == 1);
    CHECK(d_hat(4) == 1);
    CHECK(d_hat(2) == 1);
    CHECK(d_hat(0) == 28);
    CHECK_THROWS_AS(d_hat(3), Error);
}

TEST_CASE("perp_invariants") {
    TcsTopology t = perp_invariants(cat(), rank1_ref("V3"), rank1_ref("V5"));
    CHECK(t.b3 == 101);
    CHECK(t.d == 8);
    CHECK(t.mu == 0);
    CHECK(t.d_hat == 2);
    CHECK(t.two_connected);
    CHECK(t.tor_h4.trivial());

    TcsTopology t2 = perp_invariants(cat(), rank1_ref("V5"), rank1_ref("X16"));
    CHECK(t2.b3 == 89);
    CHECK(t2.d == 8);

    TcsTopology t3 = perp_invariants(cat(), rank1_ref("V3"), rank1_ref("V3"));
    CHECK(t3.b3 == 95);
    CHECK(t3.d == 24);
}

TEST_CASE("orth_invariants") {
    TcsTopology t = orth_invariants(cat(), orth(14, 20, 22, 30));
    CHECK(t.b2 == 1);
    CHECK(t.b3 == 78);
    CHECK(t.d == 2);
    CHECK(t.mu == 0);
    CHECK_FALSE(t.two_connected);
    CHECK(t.tor_h4.trivial());

    TcsTopology t2 = orth_invariants(cat(), orth(10, 16, 10, 16));
    CHECK(t2.b3 == 70);
    CHECK(t2.d == 8);
    CHECK(t2.mu == 0);  // gd = 4 on both sides: 4*4/4 = 0 mod 2

    TcsTopology t3 = orth_invariants(cat(), orth(6, 12, 32, 12));
    CHECK(t3.b3 == 104);
    CHECK(t3.d == 12);
}

TEST_CASE("skew_invariants") {
    TcsTopology t = skew_invariants(cat(), skew(27, 16, 27, 16));
    CHECK(t.b2 == 0);
    CHECK(t.b3 == 101);
    CHECK(t.d == 8);
    CHECK(t.mu == 1);
    CHECK(t.two_connected);
    CHECK(t.tor_h4.trivial());
    CHECK(t.tor_h3.trivial());

    TcsTopology t2 = skew_invariants(cat(), skew(17, 24, 17, 24));
    CHECK(t2.b3 == 77);
    CHECK(t2.d == 24);
    CHECK(t2.mu == 1);

    TcsTopology t3 = skew_invariants(cat(), skew(9, 16, 17, 24));
    CHECK(t3.b3 == 77);
    CHECK(t3.d == 8);
    CHECK(t3.mu == 1);
}

TEST_CASE("d_from_config and mu_from_config: general route equals closed forms") {
    // Perpendicular: image is zero, so d is the gcd of everything with 24.
    PairingConfig perp = perpendicular_pairing(cat().rank1[4].c2(), cat().rank1[6].c2());
    CHECK(d_from_config(perp) == 8);  // (V3, V5)
    CHECK(mu_from_config(perp, 8) == 0);

    SkewConfig s1717 = skew(17, 24, 17, 24);
    CHECK(d_from_config(s1717.pairing) == 24);
    CHECK(mu_from_config(s1717.pairing, 24) == 1);

    SkewConfig s927 = skew(9, 16, 27, 16);
    CHECK(d_from_config(s927.pairing) == 8);
    CHECK(mu_from_config(s927.pairing, 8) == 1);

    OrthConfig o1834 = orth(18, 18, 34, 8);
    CHECK(d_from_config(o1834.pairing) == 6);

    OrthConfig o1010 = orth(10, 16, 10, 16);
    CHECK(d_from_config(o1010.pairing) == 8);
    CHECK(mu_from_config(o1010.pairing, 8) == 0);
}

TEST_CASE("mu window stability and c2 mod-24 shift invariance") {
    SkewConfig s = skew(9, 16, 27, 16);
    Int d = d_from_config(s.pairing);
    CHECK(mu_from_config(s.pairing, d, 2) == mu_from_config(s.pairing, d, 4));

    PairingConfig shifted = s.pairing;
    shifted.c2_plus[0] += 24;
    shifted.c2_minus[1] -= 48;
    CHECK(d_from_config(shifted) == d);
    CHECK(mu_from_config(shifted, d) == mu_from_config(s.pairing, d));
}

TEST_CASE("torsion_h4") {
    PairingConfig perp = perpendicular_pairing(cat().by_mm(9).c2, cat().by_mm(27).c2);
    CHECK(torsion_h4(perp).trivial());

    SkewConfig s = skew(9, 16, 27, 16);
    CHECK(torsion_h4(s.pairing).trivial());
    OrthConfig o = orth(5, 12, 25, 12);
    CHECK(torsion_h4(o.pairing).trivial());

    // Synthetic glue-2 configuration: Tor H^4 = (Z/2)^2.
    PairingConfig k2;
    k2.cross = testsup::mat({{2, 0}, {0, 0}});
    k2.c2_plus = testsup::vec({18, 22});
    k2.c2_minus = testsup::vec({18, 22});
    FiniteAbelianGroup g = torsion_h4(k2);
    CHECK(g.str() == "Z/2 x Z/2");
}

TEST_CASE("same_homeo / same_diffeo") {
    TcsTopology skew2727 = skew_invariants(cat(), skew(27, 16, 27, 16));
    TcsTopology perp35 = perp_invariants(cat(), rank1_ref("V3"), rank1_ref("V5"));
    CHECK(same_homeo(skew2727, perp35));        // both (101, 8)
    CHECK_FALSE(same_diffeo(skew2727, perp35));  // mu 1 vs 0

    CHECK(same_homeo(skew2727, skew2727));
    CHECK(same_diffeo(skew2727, skew2727));

    TcsTopology s917 = skew_invariants(cat(), skew(9, 16, 17, 24));   // (77, 8, 1)
    TcsTopology s927 = skew_invariants(cat(), skew(9, 16, 27, 16));   // (89, 8, 1)
    CHECK_FALSE(same_homeo(s917, s927));

    TcsTopology o = orth_invariants(cat(), orth(10, 16, 10, 16));
    CHECK_THROWS_AS(same_homeo(o, perp35), Error);  // b2 = 1: hypotheses not met
}

TEST_CASE("b3 offsets: +23 / +22 / +21 by matching class") {
    Int b9 = cat().by_mm(9).b3_Z, b27 = cat().by_mm(27).b3_Z;
    CHECK(perp_invariants(cat(), rank1_ref("P3"), rank1_ref("Q")).b3 ==
          cat().rank1[0].b3_Z + cat().rank1[1].b3_Z + 23);
    CHECK(skew_invariants(cat(), skew(9, 16, 27, 16)).b3 == b9 + b27 + 21);
    CHECK(orth_invariants(cat(), orth(14, 20, 22, 30)).b3 ==
          cat().by_mm(14).b3_Z + cat().by_mm(22).b3_Z + 22);
}
