#include "g2census/matching.hpp"

#include <algorithm>

namespace g2census {

using linalg::dot;
using linalg::mul;

PairingConfig perpendicular_pairing(const Vec& c2_plus, const Vec& c2_minus) {
    return {linalg::zeros(static_cast<int>(c2_plus.size()), static_cast<int>(c2_minus.size())),
            c2_plus, c2_minus};
}

std::optional<OrthGlue> orth_compatibility(const Rank2Entry& ep, const AmpleRecord& ap,
                                           const Rank2Entry& em, const AmpleRecord& am) {
    if (ap.B_sq != am.B_sq) return std::nullopt;
    Int prod = ep.delta * em.delta;
    Int asqs = ap.A_sq * am.A_sq;
    if (prod % asqs != 0) return std::nullopt;
    Int k;
    if (!is_square(prod / asqs, k)) return std::nullopt;
    return OrthGlue{k, ap.B_sq};
}

OrthConfig build_orth_joint_lattice(const Rank2Entry& ep, const AmpleRecord& ap,
                                    const Rank2Entry& em, const AmpleRecord& am, const Int& k) {
    auto glue = orth_compatibility(ep, ap, em, am);
    if (!glue || glue->k != k)
        fail(Errc::non_integral, "orth joint lattice: glue data does not satisfy the "
                                 "shared-complement criterion");
    Lattice np = ep.picard(), nm = em.picard();
    Vec bp = orth_complement_of_vector(np, {ap.a, ap.b})[0];
    Vec bm = orth_complement_of_vector(nm, {am.a, am.b})[0];
    const Int bsq = glue->B_sq;

    // Completion of B- to a basis (B-, C-) of N-.
    Mat u = linalg::complete_primitive(bm);
    Vec cm = {u[0][1], u[1][1]};

    Vec fp = mul(np.gram, bp);  // v -> v.B+ on N+
    Vec fm = mul(nm.gram, bm);  // v -> v.B- on N-

    // Products of images in W: v+.v- = (v+.B+)(v-.B-)/B^2.
    Mat cross = linalg::zeros(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Int num = fp[i] * fm[j];
            if (num % bsq != 0)
                fail(Errc::non_integral, "orth joint lattice: non-integral cross pairing");
            cross[i][j] = num / bsq;
        }
    Int content = gcd_all({cross[0][0], cross[0][1], cross[1][0], cross[1][1]});
    if (content != abs(k))
        fail(Errc::non_integral, "orth joint lattice: glue does not generate the image");

    Mat w = linalg::zeros(3, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) w[i][j] = np.gram[i][j];
    w[2][2] = nm.norm(cm);
    Int cm_bm = dot(cm, fm);
    for (int i = 0; i < 2; ++i) {
        Int num = fp[i] * cm_bm;
        if (num % bsq != 0)
            fail(Errc::non_integral, "orth joint lattice: non-integral completion pairing");
        w[i][2] = w[2][i] = num / bsq;
    }
    auto sig = signature(Lattice{w});
    if (sig != std::pair<int, int>{2, 1})
        fail(Errc::signature_fail, "orth joint lattice: signature is not (2,1)");

    OrthConfig cfg;
    cfg.mm_plus = ep.mm;
    cfg.mm_minus = em.mm;
    cfg.A_sq_plus = ap.A_sq;
    cfg.A_sq_minus = am.A_sq;
    cfg.c2_A_plus = ap.c2_A;
    cfg.c2_A_minus = am.c2_A;
    cfg.k = k;
    cfg.B_sq = bsq;
    cfg.w_gram = std::move(w);
    cfg.pairing = {std::move(cross), ep.c2, em.c2};
    return cfg;
}

namespace {

// Default deterministic completion of the primitive ample class (a, b):
// the (s, t) with a t - b s = 1 minimising |s| + |t|, ties lexicographic.
Vec default_completion(const Int& a, const Int& b) {
    // Base solution of a x + b y = 1 via the extended Euclid chain.
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1, r0 = a, r1 = b;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1, x2 = x0 - q * x1, y2 = y0 - q * y1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    if (r0 != 1 && r0 != -1) fail(Errc::not_primitive_ample, "ample class not primitive");
    if (r0 == -1) { x0 = -x0; y0 = -y0; }
    // a t - b s = 1 with t = x0 + m b, s = -y0 + m a.
    Vec best;
    Int best_score = 0;
    Int m_lo = -(abs(x0) + abs(y0) + 2), m_hi = -m_lo;
    for (Int m = m_lo; m <= m_hi; ++m) {
        Int s = -y0 + m * a, t = x0 + m * b;
        Int score = abs(s) + abs(t);
        if (best.empty() || score < best_score ||
            (score == best_score && Vec{s, t} < best)) {
            best = {s, t};
            best_score = score;
        }
    }
    return best;
}

Mat lambda_gram_of(const Mat& w_gram, const Mat& basis) {
    return mul(linalg::transpose(basis), mul(w_gram, basis));
}

}  // namespace

SkewConfig build_skew_config(const Rank2Entry& ep, const AmpleRecord& ap, const Rank2Entry& em,
                             const AmpleRecord& am, const Int& k,
                             std::optional<std::pair<Vec, Vec>> completions) {
    if (gcd(abs(ap.a), abs(ap.b)) != 1 || gcd(abs(am.a), abs(am.b)) != 1)
        fail(Errc::not_primitive_ample, "skew configuration needs primitive ample classes");
    SkewConfig c;
    c.mm_plus = ep.mm;
    c.mm_minus = em.mm;
    c.A_sq_plus = ap.A_sq;
    c.A_sq_minus = am.A_sq;
    c.c2_A_plus = ap.c2_A;
    c.c2_A_minus = am.c2_A;
    c.B_sq_plus = ap.B_sq;
    c.B_sq_minus = am.B_sq;
    c.delta_plus = ep.delta;
    c.delta_minus = em.delta;
    c.h2_plus = ep.gram[1][1];
    c.h2_minus = em.gram[1][1];
    c.k = k;
    c.discriminant = ep.delta * em.delta - k * k * ap.A_sq * am.A_sq;
    if (c.discriminant <= 0)
        fail(Errc::signature_fail, "skew configuration: k^2 A+^2 A-^2 >= Delta+ Delta-");

    c.compl_plus = completions ? completions->first : default_completion(ap.a, ap.b);
    c.compl_minus = completions ? completions->second : default_completion(am.a, am.b);
    Mat up = {{c.compl_plus[0], ap.a}, {c.compl_plus[1], ap.b}};
    Mat um = {{c.compl_minus[0], am.a}, {c.compl_minus[1], am.b}};
    if (abs(linalg::det(up)) != 1 || abs(linalg::det(um)) != 1)
        fail(Errc::not_primitive_ample, "completion does not extend the ample class to a basis");

    Mat gp = mul(linalg::transpose(up), mul(ep.gram, up));
    Mat gm = mul(linalg::transpose(um), mul(em.gram, um));
    Mat w = linalg::zeros(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            w[i][j] = gp[i][j];
            w[2 + i][2 + j] = gm[i][j];
        }
    w[0][2] = w[2][0] = k;  // C+.C- = k, every other cross pairing zero
    if (linalg::det(w) != c.discriminant)
        fail(Errc::inconsistent, "skew configuration: determinant mismatch");
    if (signature(Lattice{w}) != std::pair<int, int>{2, 2})
        fail(Errc::signature_fail, "skew configuration: signature is not (2,2)");
    c.w1_gram = w;

    // Lambda± = complement of A∓ in W_1; A- sits at index 3, A+ at index 1.
    auto build_side = [&](int a_index, const Mat& u_side, int side_cols,
                          Mat& lambda, Mat& basis, Vec& h_coords) {
        Vec f(4);
        for (int i = 0; i < 4; ++i) f[i] = w[i][a_index];
        basis = linalg::kernel_of_row(f);
        lambda = lambda_gram_of(w, basis);
        // Nef H of this side inside W_1: (alpha, beta) = U^{-1} (0, 1).
        auto ab = linalg::solve_integer(u_side, {0, 1});
        if (!ab) fail(Errc::inconsistent, "completion matrix not invertible");
        Vec h_w(4, 0);
        h_w[side_cols] = (*ab)[0];
        h_w[side_cols + 1] = (*ab)[1];
        auto coords = linalg::solve_integer(basis, h_w);
        if (!coords) fail(Errc::inconsistent, "nef class not in its complement lattice");
        h_coords = *coords;
    };
    build_side(3, up, 0, c.lambda_plus, c.lambda_plus_basis, c.h_plus_in_lambda);
    build_side(1, um, 2, c.lambda_minus, c.lambda_minus_basis, c.h_minus_in_lambda);

    Mat cross = linalg::zeros(2, 2);
    cross[0][0] = k;
    Vec c2p = {ep.c2[0] * c.compl_plus[0] + ep.c2[1] * c.compl_plus[1], ap.c2_A};
    Vec c2m = {em.c2[0] * c.compl_minus[0] + em.c2[1] * c.compl_minus[1], am.c2_A};
    c.pairing = {std::move(cross), std::move(c2p), std::move(c2m)};
    return c;
}

bool skew_min_bound_hypothesis(const SkewConfig& c, Side side) {
    const Int h2 = side == Side::plus ? c.h2_plus : c.h2_minus;
    const Int b_other = side == Side::plus ? c.B_sq_minus : c.B_sq_plus;
    const Int delta_side = side == Side::plus ? c.delta_plus : c.delta_minus;
    return -h2 * b_other * c.discriminant >= delta_side * c.delta_plus * c.delta_minus;
}

GenericityReport genericity_check_lattice(const Mat& lambda_gram, const Vec& h_in_lambda,
                                          const Int& delta, int family_mm, bool bound_hyp) {
    Lattice lambda{lambda_gram};
    GenericityReport rep;
    rep.family_mm = family_mm;
    rep.delta = delta;
    rep.bound_hypothesis = bound_hyp;
    MinResult mr = fundamental_min(lambda, h_in_lambda);
    rep.min_f = mr.min;
    rep.witness = mr.witness;
    rep.witness_dot_h = lambda.inner(mr.witness, h_in_lambda);
    rep.witness_norm = lambda.norm(mr.witness);
    rep.passes_min_bound = rep.min_f >= delta;
    rep.isotropic_deg2 = vectors_with(lambda, h_in_lambda, 2, 0);
    rep.orthogonal_roots = vectors_with(lambda, h_in_lambda, 0, -2);
    // Consistency: case (i) vectors have F = 4 and case (ii) vectors have
    // F = 2 H^2, so whenever those values lie below delta a passing minimum
    // leaves no room for them.
    const Int h2 = lambda.norm(h_in_lambda);
    if (rep.passes_min_bound) {
        if (delta > 4 && !rep.isotropic_deg2.empty())
            fail(Errc::inconsistent, "genericity: minimum >= delta > 4 yet an isotropic "
                                     "degree-2 vector exists");
        if (delta > 2 * h2 && !rep.orthogonal_roots.empty())
            fail(Errc::inconsistent, "genericity: minimum >= delta > 2H^2 yet an orthogonal "
                                     "root exists");
    }
    return rep;
}

GenericityReport genericity_check(const SkewConfig& c, Side side) {
    const bool plus = side == Side::plus;
    return genericity_check_lattice(plus ? c.lambda_plus : c.lambda_minus,
                                    plus ? c.h_plus_in_lambda : c.h_minus_in_lambda,
                                    plus ? c.delta_plus : c.delta_minus,
                                    plus ? c.mm_plus : c.mm_minus,
                                    skew_min_bound_hypothesis(c, side));
}

bool nikulin_embedding_guaranteed(const Lattice& s) {
    if (!is_even(s)) return false;
    if (det_gram(s) == 0) return false;
    auto [sp, sm] = signature(s);
    return sp <= 3 && sm <= 19 && sp + sm <= 11;
}

OverlatticeObstruction overlattice_obstruction(const SkewConfig& c) {
    OverlatticeObstruction res;
    res.discriminant = c.discriminant;

    std::vector<Int> glue_primes;
    Int d = c.discriminant;
    for (Int p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        if (d % (p * p) == 0) glue_primes.push_back(p);
        while (d % p == 0) d /= p;
    }
    res.square_free = glue_primes.empty();
    if (res.square_free) {
        res.all_obstructed = true;  // vacuously: no overlattice exists
        res.verdict = "no integral overlattice (square-free discriminant)";
        return res;
    }

    Lattice w1{c.w1_gram};
    FiniteAbelianGroup disc = discriminant_group(w1);
    for (const Int& p : glue_primes) {
        for (Overlattice& o : prime_index_overlattices(w1, p)) {
            OverlatticeCheck chk;
            chk.w1_discriminant_group = disc;
            // Rebuild Lambda± inside the overlattice.  Old W_1 coordinates map
            // to new ones through the transposed embedding.
            Mat et = linalg::transpose(o.embedding);
            auto rebuild = [&](int a_index, const Vec& h_lambda_old,
                               const Mat& basis_old) {
                Vec a_old(4, 0);
                a_old[a_index] = 1;
                Vec a_new = mul(et, a_old);
                Vec f = mul(o.new_gram, a_new);
                Mat basis = linalg::kernel_of_row(f);
                Mat lam = lambda_gram_of(o.new_gram, basis);
                // Nef H in new coordinates.
                Vec h_w_old = mul(basis_old, h_lambda_old);
                Vec h_new = mul(et, h_w_old);
                auto coords = linalg::solve_integer(basis, h_new);
                if (!coords) fail(Errc::inconsistent, "overlattice rebuild: H not in Lambda~");
                return std::pair<Mat, Vec>{lam, *coords};
            };
            auto [lam_p, h_p] = rebuild(3, c.h_plus_in_lambda, c.lambda_plus_basis);
            auto [lam_m, h_m] = rebuild(1, c.h_minus_in_lambda, c.lambda_minus_basis);
            chk.plus = genericity_check_lattice(lam_p, h_p, c.delta_plus, c.mm_plus, false);
            chk.minus = genericity_check_lattice(lam_m, h_m, c.delta_minus, c.mm_minus, false);
            chk.obstructed = !(chk.plus.passes_min_bound && chk.minus.passes_min_bound);
            chk.over = std::move(o);
            res.overlattices.push_back(std::move(chk));
        }
    }
    if (res.overlattices.empty()) {
        res.all_obstructed = true;
        res.verdict = "no even overlattice exists";
    } else {
        res.all_obstructed =
            std::all_of(res.overlattices.begin(), res.overlattices.end(),
                        [](const OverlatticeCheck& chk) { return chk.obstructed; });
        res.verdict = res.all_obstructed ? "all overlattices obstructed"
                                         : "unobstructed overlattice found";
    }
    return res;
}

PairClassification classify_pair(const Catalog& cat, const BlockRef& plus,
                                 const BlockRef& minus) {
    PairClassification out;

    // Perpendicular direct sum, always available; record the embedding
    // sufficiency flag for it.
    Lattice np = plus.is_rank1 ? cat.rank1[plus.index].picard() : cat.rank2[plus.index].picard();
    Lattice nm =
        minus.is_rank1 ? cat.rank1[minus.index].picard() : cat.rank2[minus.index].picard();
    const int rp = np.rank(), rm = nm.rank();
    Mat perp = linalg::zeros(rp + rm, rp + rm);
    for (int i = 0; i < rp; ++i)
        for (int j = 0; j < rp; ++j) perp[i][j] = np.gram[i][j];
    for (int i = 0; i < rm; ++i)
        for (int j = 0; j < rm; ++j) perp[rp + i][rp + j] = nm.gram[i][j];
    out.nikulin_guaranteed_perp = nikulin_embedding_guaranteed(Lattice{perp});

    if (plus.is_rank1 || minus.is_rank1) return out;  // perpendicular only

    const Rank2Entry& ep = cat.rank2[plus.index];
    const Rank2Entry& em = cat.rank2[minus.index];
    const bool self = ep.mm == em.mm;
    for (size_t i = 0; i < ep.amples.size(); ++i) {
        for (size_t j = self ? i : 0; j < em.amples.size(); ++j) {
            const AmpleRecord& ap = ep.amples[i];
            const AmpleRecord& am = em.amples[j];
            if (auto glue = orth_compatibility(ep, ap, em, am))
                out.orth.push_back(build_orth_joint_lattice(ep, ap, em, am, glue->k));
            Int d_skew = ep.delta * em.delta - ap.A_sq * am.A_sq;
            if (d_skew > 0) out.skew.push_back(build_skew_config(ep, ap, em, am, 1));
        }
    }
    return out;
}

}  // namespace g2census
