// Acceptance suite: runs each shipped-result criterion end to end against
// the golden census data and prints one PASS/FAIL line per criterion.
// Every tolerance is exact (integer equality); nothing here is calibrated.
#include "g2census/census.hpp"

#include <cstdlib>
#include <random>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

using namespace g2census;

namespace {

std::string data_dir() {
    if (const char* env = std::getenv("G2CENSUS_DATA")) return env;
#ifdef G2CENSUS_SOURCE_DATA_DIR
    return G2CENSUS_SOURCE_DATA_DIR;
#else
    return "data";
#endif
}

struct Harness {
    int failures = 0;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ++failures;
            detail << "    FAILED: " << what << "\n";
        }
    }
    template <typename A, typename B>
    void expect_eq(const A& a, const B& b, const std::string& what) {
        if (!(a == b)) {
            ++failures;
            detail << "    FAILED: " << what << " (got " << a << ", want " << b << ")\n";
        }
    }
};

using Criterion = std::function<void(Harness&, const Catalog&)>;

// Golden histogram of the perpendicular census: b3, total, then counts for
// d = 2, 4, 6, 8, 12, 24.
const long long kPerpTable[][8] = {
    {71, 15, 8, 5, 1, 1, 0, 0},    {73, 20, 16, 3, 1, 0, 0, 0},  {75, 40, 35, 3, 1, 0, 1, 0},
    {77, 39, 36, 0, 2, 0, 1, 0},   {79, 73, 65, 3, 4, 0, 1, 0},  {81, 60, 55, 1, 4, 0, 0, 0},
    {83, 77, 67, 3, 6, 1, 0, 0},   {85, 63, 49, 8, 4, 1, 1, 0},  {87, 77, 69, 4, 3, 0, 1, 0},
    {89, 57, 49, 5, 2, 1, 0, 0},   {91, 55, 51, 2, 2, 0, 0, 0},  {93, 49, 45, 4, 0, 0, 0, 0},
    {95, 52, 49, 0, 2, 0, 0, 1},   {97, 51, 44, 3, 3, 1, 0, 0},  {99, 54, 42, 7, 3, 2, 0, 0},
    {101, 33, 26, 1, 5, 1, 0, 0},  {103, 66, 55, 3, 7, 1, 0, 0}, {105, 41, 38, 0, 3, 0, 0, 0},
    {107, 48, 43, 1, 3, 1, 0, 0},  {109, 34, 31, 0, 3, 0, 0, 0}, {111, 43, 40, 0, 2, 1, 0, 0},
    {113, 40, 34, 5, 0, 1, 0, 0},  {115, 32, 30, 1, 1, 0, 0, 0}, {117, 30, 28, 1, 0, 1, 0, 0},
    {119, 31, 28, 0, 3, 0, 0, 0},  {121, 29, 26, 1, 2, 0, 0, 0}, {123, 17, 16, 0, 1, 0, 0, 0},
    {125, 11, 10, 1, 0, 0, 0, 0},  {127, 20, 14, 3, 2, 1, 0, 0}, {129, 11, 10, 0, 1, 0, 0, 0},
    {131, 9, 8, 1, 0, 0, 0, 0},    {133, 3, 3, 0, 0, 0, 0, 0},   {135, 10, 9, 0, 1, 0, 0, 0},
    {137, 12, 12, 0, 0, 0, 0, 0},  {139, 4, 4, 0, 0, 0, 0, 0},   {141, 2, 1, 1, 0, 0, 0, 0},
    {143, 3, 3, 0, 0, 0, 0, 0},    {145, 7, 7, 0, 0, 0, 0, 0},   {147, 2, 2, 0, 0, 0, 0, 0},
    {151, 1, 1, 0, 0, 0, 0, 0},    {153, 2, 2, 0, 0, 0, 0, 0},   {155, 8, 7, 1, 0, 0, 0, 0},
    {157, 4, 4, 0, 0, 0, 0, 0},    {159, 6, 6, 0, 0, 0, 0, 0},   {161, 3, 3, 0, 0, 0, 0, 0},
    {163, 8, 8, 0, 0, 0, 0, 0},    {165, 2, 2, 0, 0, 0, 0, 0},   {167, 3, 3, 0, 0, 0, 0, 0},
    {169, 3, 3, 0, 0, 0, 0, 0},    {171, 1, 1, 0, 0, 0, 0, 0},   {173, 2, 2, 0, 0, 0, 0, 0},
    {175, 1, 1, 0, 0, 0, 0, 0},    {179, 4, 4, 0, 0, 0, 0, 0},   {181, 1, 1, 0, 0, 0, 0, 0},
    {183, 1, 1, 0, 0, 0, 0, 0},    {187, 3, 3, 0, 0, 0, 0, 0},   {189, 1, 1, 0, 0, 0, 0, 0},
    {195, 1, 1, 0, 0, 0, 0, 0},    {197, 2, 2, 0, 0, 0, 0, 0},   {239, 1, 1, 0, 0, 0, 0, 0},
};
const long long kPerpD[6] = {2, 4, 6, 8, 12, 24};

// Golden nineteen orthogonal-intersecting rows:
// mm+, mm-, B^2, A+^2, A-^2, b3, d.
const long long kOrthTable[][7] = {
    {2, 24, -6, 6, 14, 102, 6},   {5, 25, -12, 12, 12, 84, 2},  {6, 6, -4, 12, 12, 86, 12},
    {6, 12, -4, 12, 20, 82, 4},   {6, 21, -4, 12, 28, 84, 4},   {6, 32, -4, 12, 12, 104, 12},
    {10, 10, -16, 16, 16, 70, 8}, {12, 12, -4, 20, 20, 78, 4},  {12, 21, -4, 20, 28, 80, 4},
    {12, 32, -4, 20, 12, 100, 4}, {13, 14, -30, 20, 30, 72, 4}, {14, 18, -40, 40, 10, 76, 2},
    {14, 22, -20, 20, 30, 78, 2}, {14, 25, -20, 20, 20, 82, 2}, {18, 24, -6, 24, 14, 84, 12},
    {18, 34, -72, 18, 8, 108, 6}, {21, 21, -4, 28, 28, 82, 4},  {21, 32, -4, 28, 12, 102, 4},
    {32, 32, -4, 12, 12, 122, 12},
};

// Golden six skew rows with non-zero smooth invariant: mm+, mm-, b3, d, mu.
const long long kSkewTable[][5] = {
    {9, 9, 77, 8, 1},  {9, 17, 77, 8, 1},   {9, 27, 89, 8, 1},
    {17, 17, 77, 24, 1}, {17, 27, 89, 8, 1}, {27, 27, 101, 8, 1},
};

void c1_dataset_validation(Harness& h, const Catalog& cat) {
    CheckReport rep = validate_catalog(cat);
    for (const auto& f : rep.failures) h.expect(false, "validation: " + f);
    h.expect_eq(rep.warnings.size(), size_t(1), "exactly one warning");
    if (!rep.warnings.empty()) {
        h.expect(rep.warnings[0].find("#18") != std::string::npos, "warning names #18");
        h.expect(rep.warnings[0].find("48") != std::string::npos, "warning records value 48");
    }
    int blowups = 0, divisors = 0, covers = 0;
    for (const auto& e : cat.rank2) {
        if (e.prov.kind == ProvKind::blowup_rank1) ++blowups;
        if (e.prov.kind == ProvKind::divisor_p2xp2) ++divisors;
        if (e.prov.kind == ProvKind::double_cover) ++covers;
    }
    h.expect_eq(blowups, 27, "27 blow-up rows checked against the rank-1 table");
    h.expect_eq(divisors, 4, "bidegree formula rows (#6 #24 #32 #34)");
    h.expect_eq(covers, 3, "double-cover fixture rows (#2 #8 #18)");
}

void c2_perp_census(Harness& h, const Catalog& cat) {
    PerpCensus c = census_perp(cat);
    h.expect_eq(c.rows.size(), size_t(1378), "1378 unordered pairs");
    for (int i = 0; i < 6; ++i) {
        const long long want[6] = {1215, 71, 72, 14, 5, 1};
        auto it = c.d_totals.find(Int(kPerpD[i]));
        h.expect_eq(it == c.d_totals.end() ? 0 : it->second, want[i],
                    "d-total for d=" + std::to_string(kPerpD[i]));
    }
    std::set<std::pair<Int, Int>> listed;
    for (const auto& row : kPerpTable) {
        long long total = 0;
        for (int i = 0; i < 6; ++i) {
            auto it = c.hist.cells.find({Int(row[0]), Int(kPerpD[i])});
            long long got = it == c.hist.cells.end() ? 0 : it->second;
            h.expect_eq(got, row[2 + i],
                        "cell b3=" + std::to_string(row[0]) + " d=" + std::to_string(kPerpD[i]));
            total += got;
            listed.insert({Int(row[0]), Int(kPerpD[i])});
        }
        h.expect_eq(total, row[1], "row total b3=" + std::to_string(row[0]));
    }
    for (const auto& [key, count] : c.hist.cells)
        h.expect(listed.count(key) > 0, "unexpected nonzero cell b3=" + key.first.str() +
                                            " d=" + key.second.str());
    h.expect_eq(c.distinct_manifolds, 131, "131 distinct (b3, d) manifolds");
    h.expect_eq(c.distinct_b3, 60, "60 distinct b3 values");
}

void c3_orth_census(Harness& h, const Catalog& cat) {
    OrthCensus c = census_orth(cat);
    h.expect_eq(c.rows.size(), size_t(19), "precisely 19 pairs");
    if (c.rows.size() != 19) return;
    for (size_t i = 0; i < 19; ++i) {
        const auto& r = c.rows[i];
        const auto& want = kOrthTable[i];
        std::string tag = "row " + std::to_string(i + 1) + " (#" + std::to_string(want[0]) +
                          ",#" + std::to_string(want[1]) + ")";
        h.expect_eq(r.plus_id, "#" + std::to_string(want[0]), tag + " plus id");
        h.expect_eq(r.minus_id, "#" + std::to_string(want[1]), tag + " minus id");
        h.expect_eq(*r.B_sq, Int(want[2]), tag + " B^2");
        h.expect_eq(*r.A_sq_plus, Int(want[3]), tag + " A+^2");
        h.expect_eq(*r.A_sq_minus, Int(want[4]), tag + " A-^2");
        h.expect_eq(r.top.b3, Int(want[5]), tag + " b3");
        h.expect_eq(r.top.d, Int(want[6]), tag + " d");
        h.expect(r.top.tor_h4.trivial(), tag + " torsion-free H^4");
        h.expect_eq(r.top.mu, Int(0), tag + " mu = 0");
    }
    // All glue constants are 1 (asserted independently of the row data).
    for (const auto& ep : cat.rank2) {
        if (!ep.has_block) continue;
        for (const auto& em : cat.rank2) {
            if (!em.has_block) continue;
            for (const auto& ap : ep.amples)
                for (const auto& am : em.amples)
                    if (auto g = orth_compatibility(ep, ap, em, am))
                        h.expect(g->k == 1, "glue constant k = 1");
        }
    }
}

void c4_skew_census(Harness& h, const Catalog& cat) {
    SkewCensus c = census_skew(cat, /*mu_filter=*/true);
    MuScreen screen = mu_candidate_screen(cat);
    std::set<std::pair<int, long long>> hits;
    for (const auto& [mm, asq] : screen.divisibility_hits)
        hits.insert({mm, asq.convert_to<long long>()});
    h.expect(hits == std::set<std::pair<int, long long>>{{9, 16}, {17, 24}, {18, 24}, {27, 16}},
             "divisibility screen selects #9 #17 #18 #27");
    h.expect(screen.feasible_families == std::vector<int>{9, 17, 27},
             "#18 is screened out by the discriminant inequality");

    h.expect_eq(c.rows.size(), size_t(6), "six non-perpendicular rows");
    if (c.rows.size() == 6) {
        for (size_t i = 0; i < 6; ++i) {
            const auto& r = c.rows[i];
            const auto& want = kSkewTable[i];
            std::string tag = "skew (#" + std::to_string(want[0]) + ",#" +
                              std::to_string(want[1]) + ")";
            h.expect_eq(r.plus_id, "#" + std::to_string(want[0]), tag + " plus id");
            h.expect_eq(r.minus_id, "#" + std::to_string(want[1]), tag + " minus id");
            h.expect_eq(r.top.b3, Int(want[2]), tag + " b3");
            h.expect_eq(r.top.d, Int(want[3]), tag + " d");
            h.expect_eq(r.top.mu, Int(want[4]), tag + " mu");
            h.expect_eq(r.status, std::string("mu_nonzero_verified"), tag + " verified");
        }
    }

    // Discriminants and genericity minima for the six configurations.
    auto config = [&](int mp, int mn) {
        const Rank2Entry& ep = cat.by_mm(mp);
        const Rank2Entry& em = cat.by_mm(mn);
        return build_skew_config(ep, ep.amples[0], em, em.amples[0]);
    };
    const struct {
        int mp, mn;
        long long d;
    } disc[] = {{9, 9, 33}, {9, 27, 33}, {27, 27, 33}, {9, 17, 41}, {17, 27, 41}, {17, 17, 49}};
    for (const auto& t : disc) {
        auto cfg = config(t.mp, t.mn);
        std::string tag = "(#" + std::to_string(t.mp) + ",#" + std::to_string(t.mn) + ")";
        h.expect_eq(cfg.discriminant, Int(t.d), tag + " discriminant");
        auto gp = genericity_check(cfg, Side::plus);
        auto gm = genericity_check(cfg, Side::minus);
        h.expect(gp.passes_min_bound && gm.passes_min_bound, tag + " genericity passes");
        h.expect_eq(gp.min_f, cfg.delta_plus, tag + " min F reaches delta+");
        h.expect_eq(gm.min_f, cfg.delta_minus, tag + " min F reaches delta-");
        h.expect(gp.isotropic_deg2.empty() && gp.orthogonal_roots.empty(),
                 tag + " no obstruction vectors (+)");
        h.expect(gm.isotropic_deg2.empty() && gm.orthogonal_roots.empty(),
                 tag + " no obstruction vectors (-)");
    }

    auto c1717 = config(17, 17);
    auto ob = overlattice_obstruction(c1717);
    h.expect(!ob.square_free, "(#17,#17) discriminant 49 is not square-free");
    h.expect_eq(ob.overlattices.size(), size_t(1), "one index-7 overlattice");
    if (!ob.overlattices.empty()) {
        const auto& chk = ob.overlattices[0];
        h.expect_eq(chk.over.index, Int(7), "overlattice index 7");
        h.expect_eq(chk.over.glue_norm, Int(98), "glue vector K^2 = 98");
        h.expect_eq(chk.w1_discriminant_group.str(), std::string("Z/49"),
                    "discriminant group Z/49");
        h.expect(chk.obstructed, "overlattice obstructed");
        h.expect_eq(chk.plus.witness_norm, Int(0), "witness v^2 = 0");
        h.expect_eq(chk.plus.witness_dot_h, Int(3), "witness v.H = 3");
    }
    h.expect(ob.all_obstructed, "every overlattice fails");
    for (const auto& t : disc) {
        if (t.d == 49) continue;
        auto other = overlattice_obstruction(config(t.mp, t.mn));
        h.expect(other.square_free, "D = " + std::to_string(t.d) + " is square-free");
    }
}

void c5_exotic(Harness& h, const Catalog& cat) {
    ExoticReport r = exotic_report(cat);
    h.expect_eq(r.types.size(), size_t(4), "four distinct mu != 0 diffeomorphism types");
    std::set<std::tuple<long long, long long, int>> got;
    for (const auto& t : r.types)
        got.insert({t.b3.convert_to<long long>(), t.d.convert_to<long long>(),
                    t.perp_partner_count});
    h.expect(got.count({101, 8, 1}) == 1, "(101,8) has a perpendicular partner");
    h.expect(got.count({89, 8, 1}) == 1, "(89,8) has a perpendicular partner");
    h.expect(got.count({77, 8, 0}) == 1, "(77,8) has no perpendicular partner");
    h.expect(got.count({77, 24, 0}) == 1, "(77,24) has no perpendicular partner");
    h.expect_eq(r.homeo_pairs.size(), size_t(2), "exactly two homeomorphic-not-diffeo classes");
}

void c6_oracle_equivalence(Harness& h, const Catalog& cat) {
    // Perpendicular pairs: the general congruence route must reproduce the
    // gcd formula and mu = 0, on every one of the 1378 pairs.
    auto blocks = census_blocks(cat);
    for (size_t i = 0; i < blocks.size(); ++i) {
        for (size_t j = i; j < blocks.size(); ++j) {
            TcsTopology t = perp_invariants(cat, blocks[i], blocks[j]);
            PairingConfig pc = perpendicular_pairing(block_c2(cat, blocks[i]),
                                                     block_c2(cat, blocks[j]));
            Int d_general = d_from_config(pc);
            if (d_general != t.d) {
                h.expect(false, "perp d mismatch for " + block_id(cat, blocks[i]) + "," +
                                    block_id(cat, blocks[j]));
                continue;
            }
            if (t.d_hat > 1) {
                h.expect(mu_from_config(pc, t.d, 2) == 0 && mu_from_config(pc, t.d, 4) == 0,
                         "perp mu = 0 for " + block_id(cat, blocks[i]) + "," +
                             block_id(cat, blocks[j]));
            }
        }
    }
    // Orthogonal and skew configurations.
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i].is_rank1) continue;
        for (size_t j = i; j < blocks.size(); ++j) {
            if (blocks[j].is_rank1) continue;
            auto cls = classify_pair(cat, blocks[i], blocks[j]);
            for (const auto& cfg : cls.orth) {
                TcsTopology t = orth_invariants(cat, cfg);
                h.expect(d_from_config(cfg.pairing) == t.d,
                         "orth d general == specialised for #" + std::to_string(cfg.mm_plus) +
                             ",#" + std::to_string(cfg.mm_minus));
                if (t.d_hat > 1)
                    h.expect(mu_from_config(cfg.pairing, t.d, 2) == t.mu &&
                                 mu_from_config(cfg.pairing, t.d, 4) == t.mu,
                             "orth mu general == specialised");
            }
            for (const auto& cfg : cls.skew) {
                TcsTopology t = skew_invariants(cat, cfg);
                h.expect(d_from_config(cfg.pairing) == t.d,
                         "skew d general == specialised for #" + std::to_string(cfg.mm_plus) +
                             ",#" + std::to_string(cfg.mm_minus));
                if (t.d_hat > 1)
                    h.expect(mu_from_config(cfg.pairing, t.d, 2) == t.mu &&
                                 mu_from_config(cfg.pairing, t.d, 4) == t.mu,
                             "skew mu general == specialised");
            }
        }
    }
}

void c7_lattice_properties(Harness& h, const Catalog& cat) {
    (void)cat;
    std::mt19937 rng(20260809);
    std::uniform_int_distribution<int> span(-6, 6), hc(-3, 3);
    int tested = 0;
    while (tested < 100) {
        int n = 2 + (tested % 2);
        std::vector<std::vector<long long>> g(n, std::vector<long long>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                long long x = span(rng);
                if (i == j && x % 2 != 0) x += (x > 0 ? 1 : -1);
                g[i][j] = g[j][i] = x;
            }
        Mat gm(n, Vec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) gm[i][j] = Int(g[i][j]);
        Lattice l{gm};
        Int det = det_gram(l);
        if (det == 0) continue;

        // Discriminant group factors multiply to |det|.
        FiniteAbelianGroup grp = discriminant_group(l);
        h.expect(grp.order() == abs(det), "discriminant order = |det|");

        // Overlattice determinant identity.
        if (is_even(l))
            for (Int p : {Int(2), Int(3)})
                for (const Overlattice& o : prime_index_overlattices(l, p))
                    h.expect(linalg::det(o.new_gram) * p * p == det, "overlattice det * p^2");

        auto sig = signature(l);
        if (sig != std::pair<int, int>{1, n - 1}) {
            ++tested;
            continue;
        }
        // Transverse minimum against an independent brute-force box search.
        std::vector<long long> hv(n);
        Vec hvec(n);
        bool ok = false;
        for (int tries = 0; tries < 40 && !ok; ++tries) {
            for (int i = 0; i < n; ++i) {
                hv[i] = hc(rng);
                hvec[i] = Int(hv[i]);
            }
            ok = !linalg::is_zero(hvec) && l.norm(hvec) > 0;
        }
        if (!ok) {
            ++tested;
            continue;
        }
        long long best = -1;
        {
            const int box = 25;
            std::vector<long long> hf(n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) hf[i] += g[i][j] * hv[j];
            long long h2 = 0;
            for (int i = 0; i < n; ++i) h2 += hv[i] * hf[i];
            std::vector<long long> v(n, -box);
            while (true) {
                long long vh = 0, vv = 0;
                for (int i = 0; i < n; ++i) vh += v[i] * hf[i];
                for (int i = 0; i < n; ++i) {
                    long long acc = 0;
                    for (int j = 0; j < n; ++j) acc += g[i][j] * v[j];
                    vv += v[i] * acc;
                }
                long long f = vh * vh - h2 * vv;
                if (f > 0 && (best < 0 || f < best)) best = f;
                int i = 0;
                while (i < n && v[i] == box) v[i++] = -box;
                if (i == n) break;
                ++v[i];
            }
        }
        MinResult mr = fundamental_min(l, hvec);
        h.expect(mr.min == best, "fundamental_min == brute-force box minimum");
        Int fw = l.inner(mr.witness, hvec) * l.inner(mr.witness, hvec) -
                 l.norm(hvec) * l.norm(mr.witness);
        h.expect(fw == mr.min, "witness attains the minimum");

        // vectors_with output verified by re-evaluation.
        for (const Vec& v : vectors_with(l, hvec, 2, 0)) {
            h.expect(l.inner(v, hvec) == 2 && l.norm(v) == 0, "vectors_with re-check (2,0)");
        }
        for (const Vec& v : vectors_with(l, hvec, 0, -2)) {
            h.expect(l.inner(v, hvec) == 0 && l.norm(v) == -2, "vectors_with re-check (0,-2)");
        }
        ++tested;
    }
    h.expect(tested >= 100, "at least 100 random lattices exercised");
}

}  // namespace

int main() {
    Catalog cat;
    try {
        cat = load_catalog(data_dir());
    } catch (const Error& e) {
        std::cout << "[FAIL] C1 dataset-validation: cannot load catalog: " << e.what() << "\n";
        return 1;
    }

    const std::vector<std::pair<std::string, Criterion>> criteria = {
        {"C1 dataset-validation", c1_dataset_validation},
        {"C2 perpendicular-census-table", c2_perp_census},
        {"C3 orthogonal-census-table", c3_orth_census},
        {"C4 skew-census-and-obstructions", c4_skew_census},
        {"C5 exotic-pair-report", c5_exotic},
        {"C6 oracle-equivalence", c6_oracle_equivalence},
        {"C7 lattice-core-properties", c7_lattice_properties},
    };

    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Harness h;
        try {
            fn(h, cat);
        } catch (const std::exception& e) {
            h.expect(false, std::string("exception: ") + e.what());
        }
        if (h.failures == 0) {
            std::cout << "[PASS] " << name << "\n";
        } else {
            ++failed;
            std::cout << "[FAIL] " << name << " (" << h.failures << " check(s))\n"
                      << h.detail.str();
        }
    }
    std::cout << (failed == 0 ? "all criteria passed" : "some criteria FAILED") << "\n";
    return failed == 0 ? 0 : 1;
}
