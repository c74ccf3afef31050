#include "g2census/census.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace g2census {

namespace {

long long to_ll(const Int& x) { return x.convert_to<long long>(); }

std::string h_display(const Int& delta, const Int& a_sq) {
    // Display only: every comparison in the engine uses the exact product
    // form, never this value.
    double h = std::log2(static_cast<double>(to_ll(delta)) / static_cast<double>(to_ll(a_sq)));
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", h);
    return buf;
}

void sort_rows(std::vector<CensusRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
        if (a.order_plus != b.order_plus) return a.order_plus < b.order_plus;
        if (a.order_minus != b.order_minus) return a.order_minus < b.order_minus;
        Int ap = a.A_sq_plus.value_or(0), bp = b.A_sq_plus.value_or(0);
        if (ap != bp) return ap < bp;
        return a.A_sq_minus.value_or(0) < b.A_sq_minus.value_or(0);
    });
}

std::string opt_str(const std::optional<Int>& x) { return x ? x->str() : "-"; }

}  // namespace

int Histogram::total() const {
    int t = 0;
    for (const auto& [key, count] : cells) t += count;
    return t;
}

PerpCensus census_perp(const Catalog& cat) {
    PerpCensus out;
    auto blocks = census_blocks(cat);
    const int n = static_cast<int>(blocks.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            CensusRow row;
            row.plus_id = block_id(cat, blocks[i]);
            row.minus_id = block_id(cat, blocks[j]);
            row.order_plus = i;
            row.order_minus = j;
            row.match_class = "perpendicular";
            row.top = perp_invariants(cat, blocks[i], blocks[j]);
            row.status = "ok";
            out.hist.cells[{row.top.b3, row.top.d}] += 1;
            out.d_totals[row.top.d] += 1;
            out.rows.push_back(std::move(row));
        }
    }
    sort_rows(out.rows);
    out.distinct_manifolds = static_cast<int>(out.hist.cells.size());
    std::set<Int> b3s;
    for (const auto& [key, count] : out.hist.cells) b3s.insert(key.first);
    out.distinct_b3 = static_cast<int>(b3s.size());
    return out;
}

namespace {

CensusRow orth_row(const Catalog& cat, int oi, int oj, const OrthConfig& cfg) {
    CensusRow row;
    row.plus_id = "#" + std::to_string(cfg.mm_plus);
    row.minus_id = "#" + std::to_string(cfg.mm_minus);
    row.order_plus = oi;
    row.order_minus = oj;
    row.match_class = "orthogonal";
    row.A_sq_plus = cfg.A_sq_plus;
    row.A_sq_minus = cfg.A_sq_minus;
    row.B_sq = cfg.B_sq;
    row.top = orth_invariants(cat, cfg);
    row.status = "ok";
    row.h_plus_display = h_display(cat.by_mm(cfg.mm_plus).delta, cfg.A_sq_plus);
    row.h_minus_display = h_display(cat.by_mm(cfg.mm_minus).delta, cfg.A_sq_minus);
    // Informational: prime-index even overlattices of the rank-3 joint
    // lattice (a non-primitive embedding would change H^3 torsion only).
    Lattice w{cfg.w_gram};
    Int det = abs(det_gram(w));
    std::ostringstream note;
    int count = 0;
    for (Int p = 2; p * p <= det; ++p) {
        if (!is_prime(p) || det % (p * p) != 0) continue;
        auto over = prime_index_overlattices(w, p);
        if (!over.empty()) {
            if (count) note << ", ";
            note << "p=" << p << ":" << over.size();
            count += static_cast<int>(over.size());
        }
    }
    row.notes = count ? "joint-lattice overlattices: " + note.str()
                      : "joint-lattice overlattices: none";
    return row;
}

}  // namespace

OrthCensus census_orth(const Catalog& cat) {
    OrthCensus out;
    auto blocks = census_blocks(cat);
    const int n = static_cast<int>(blocks.size());
    for (int i = 0; i < n; ++i) {
        if (blocks[i].is_rank1) continue;
        for (int j = i; j < n; ++j) {
            if (blocks[j].is_rank1) continue;
            auto cls = classify_pair(cat, blocks[i], blocks[j]);
            for (const auto& cfg : cls.orth)
                out.rows.push_back(orth_row(cat, i, j, cfg));
        }
    }
    sort_rows(out.rows);
    return out;
}

MuScreen mu_candidate_screen(const Catalog& cat) {
    MuScreen s;
    for (const auto& e : cat.rank2) {
        if (!e.has_block) continue;
        if (gd_c2bar(e) % 4 == 0) continue;  // c2 divisible by 4 kills the parity
        for (const auto& r : e.amples)
            if (mod_floor(r.c2_A, 8) == 0) s.divisibility_hits.emplace_back(e.mm, r.A_sq);
    }
    // Pair feasibility: a screened record survives if some screened partner
    // (possibly itself) satisfies Delta+ Delta- > A+^2 A-^2.
    std::set<int> feasible;
    for (const auto& [mm_a, asq_a] : s.divisibility_hits) {
        for (const auto& [mm_b, asq_b] : s.divisibility_hits) {
            if (cat.by_mm(mm_a).delta * cat.by_mm(mm_b).delta > asq_a * asq_b)
                feasible.insert(mm_a);
        }
    }
    s.feasible_families.assign(feasible.begin(), feasible.end());
    return s;
}

SkewCensus census_skew(const Catalog& cat, bool mu_filter) {
    SkewCensus out;
    out.screen = mu_candidate_screen(cat);
    std::set<int> verified(out.screen.feasible_families.begin(),
                           out.screen.feasible_families.end());
    auto blocks = census_blocks(cat);
    const int n = static_cast<int>(blocks.size());
    for (int i = 0; i < n; ++i) {
        if (blocks[i].is_rank1) continue;
        for (int j = i; j < n; ++j) {
            if (blocks[j].is_rank1) continue;
            auto cls = classify_pair(cat, blocks[i], blocks[j]);
            for (const auto& cfg : cls.skew) {
                CensusRow row;
                row.plus_id = "#" + std::to_string(cfg.mm_plus);
                row.minus_id = "#" + std::to_string(cfg.mm_minus);
                row.order_plus = i;
                row.order_minus = j;
                row.match_class = "skew";
                row.A_sq_plus = cfg.A_sq_plus;
                row.A_sq_minus = cfg.A_sq_minus;
                row.top = skew_invariants(cat, cfg);
                row.h_plus_display = h_display(cfg.delta_plus, cfg.A_sq_plus);
                row.h_minus_display = h_display(cfg.delta_minus, cfg.A_sq_minus);
                const bool handcrafted =
                    verified.count(cfg.mm_plus) && verified.count(cfg.mm_minus);
                if (handcrafted) {
                    auto gp = genericity_check(cfg, Side::plus);
                    auto gm = genericity_check(cfg, Side::minus);
                    auto ob = overlattice_obstruction(cfg);
                    std::ostringstream note;
                    note << "D=" << cfg.discriminant << "; minF=(" << gp.min_f << ","
                         << gm.min_f << "); " << ob.verdict;
                    if (!ob.square_free && !ob.overlattices.empty()) {
                        const auto& chk = ob.overlattices.front();
                        note << " (witness v^2=" << chk.plus.witness_norm
                             << ", v.H=" << chk.plus.witness_dot_h << ")";
                    }
                    row.notes = note.str();
                    bool generic = gp.passes_min_bound && gm.passes_min_bound;
                    row.status = (generic && ob.all_obstructed && row.top.mu != 0)
                                     ? "mu_nonzero_verified"
                                     : "arithmetic_candidate_only";
                } else {
                    row.status = "arithmetic_candidate_only";
                    row.notes = "D=" + cfg.discriminant.str();
                }
                if (!mu_filter || row.status == "mu_nonzero_verified")
                    out.rows.push_back(std::move(row));
            }
        }
    }
    sort_rows(out.rows);
    return out;
}

ExoticReport exotic_report(const Catalog& cat) {
    ExoticReport rep;
    PerpCensus perp = census_perp(cat);
    SkewCensus skew = census_skew(cat, /*mu_filter=*/true);
    std::set<std::pair<std::pair<Int, Int>, Int>> seen;
    for (const auto& row : skew.rows) {
        auto key = std::make_pair(std::make_pair(row.top.b3, row.top.d), row.top.mu);
        if (!seen.insert(key).second) continue;
        ExoticType t;
        t.b3 = row.top.b3;
        t.d = row.top.d;
        t.mu = row.top.mu;
        auto it = perp.hist.cells.find({t.b3, t.d});
        t.perp_partner_count = it == perp.hist.cells.end() ? 0 : it->second;
        rep.types.push_back(t);
    }
    std::sort(rep.types.begin(), rep.types.end(), [](const ExoticType& a, const ExoticType& b) {
        if (a.b3 != b.b3) return a.b3 > b.b3;
        return a.d > b.d;
    });
    for (const auto& t : rep.types)
        if (t.perp_partner_count > 0) rep.homeo_pairs.emplace_back(t.b3, t.d);
    return rep;
}

std::string rows_to_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream os;
    os << "pair_plus,pair_minus,class,A_sq_plus,A_sq_minus,B_sq,b3,d,d_hat,mu,status\n";
    for (const auto& r : rows) {
        os << r.plus_id << ',' << r.minus_id << ',' << r.match_class << ','
           << opt_str(r.A_sq_plus) << ',' << opt_str(r.A_sq_minus) << ',' << opt_str(r.B_sq)
           << ',' << r.top.b3 << ',' << r.top.d << ',' << r.top.d_hat << ',' << r.top.mu << ','
           << r.status << '\n';
    }
    return os.str();
}

std::string rows_to_json(const std::vector<CensusRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["pair_plus"] = r.plus_id;
        j["pair_minus"] = r.minus_id;
        j["class"] = r.match_class;
        j["A_sq_plus"] = r.A_sq_plus ? nlohmann::json(to_ll(*r.A_sq_plus)) : nlohmann::json();
        j["A_sq_minus"] = r.A_sq_minus ? nlohmann::json(to_ll(*r.A_sq_minus)) : nlohmann::json();
        j["B_sq"] = r.B_sq ? nlohmann::json(to_ll(*r.B_sq)) : nlohmann::json();
        j["b3"] = to_ll(r.top.b3);
        j["d"] = to_ll(r.top.d);
        j["d_hat"] = to_ll(r.top.d_hat);
        j["mu"] = to_ll(r.top.mu);
        j["b2"] = to_ll(r.top.b2);
        j["tor_h3"] = r.top.tor_h3.str();
        j["tor_h4"] = r.top.tor_h4.str();
        j["two_connected"] = r.top.two_connected;
        j["status"] = r.status;
        if (!r.notes.empty()) j["notes"] = r.notes;
        if (!r.h_plus_display.empty())
            j["display"] = {{"h_plus", r.h_plus_display}, {"h_minus", r.h_minus_display}};
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string perp_text(const PerpCensus& c) {
    std::ostringstream os;
    os << "Perpendicular census: " << c.rows.size() << " unordered pairs\n";
    os << "d totals:";
    for (Int d : {2, 4, 6, 8, 12, 24}) {
        auto it = c.d_totals.find(d);
        os << "  d=" << d << ": " << (it == c.d_totals.end() ? 0 : it->second);
    }
    os << "\ndistinct (b3, d) manifolds: " << c.distinct_manifolds
       << "\ndistinct b3 values: " << c.distinct_b3 << "\n\n";
    os << "b3    total     d=2   d=4   d=6   d=8  d=12  d=24\n";
    std::map<Int, std::map<Int, int>> by_b3;
    for (const auto& [key, count] : c.hist.cells) by_b3[key.first][key.second] = count;
    for (const auto& [b3, row] : by_b3) {
        int total = 0;
        for (const auto& [d, cnt] : row) total += cnt;
        os << b3;
        for (size_t pad = b3.str().size(); pad < 6; ++pad) os << ' ';
        os << total;
        for (size_t pad = std::to_string(total).size(); pad < 6; ++pad) os << ' ';
        for (Int d : {2, 4, 6, 8, 12, 24}) {
            auto it = row.find(d);
            int v = it == row.end() ? 0 : it->second;
            std::string s = std::to_string(v);
            for (size_t pad = s.size(); pad < 6; ++pad) os << ' ';
            os << s;
        }
        os << '\n';
    }
    return os.str();
}

std::string orth_text(const OrthCensus& c) {
    std::ostringstream os;
    os << "Orthogonal (rank-1 intersection) census: " << c.rows.size() << " pairs\n";
    os << "pair        B^2    A+^2  A-^2   b3    d    mu   notes\n";
    for (const auto& r : c.rows) {
        std::ostringstream pair;
        pair << r.plus_id << " " << r.minus_id;
        os << pair.str();
        for (size_t pad = pair.str().size(); pad < 12; ++pad) os << ' ';
        auto cell = [&os](const std::string& s, size_t w) {
            os << s;
            for (size_t pad = s.size(); pad < w; ++pad) os << ' ';
        };
        cell(r.B_sq->str(), 7);
        cell(r.A_sq_plus->str(), 6);
        cell(r.A_sq_minus->str(), 7);
        cell(r.top.b3.str(), 6);
        cell(r.top.d.str(), 5);
        cell(r.top.mu.str(), 5);
        os << r.notes << '\n';
    }
    return os.str();
}

std::string skew_text(const SkewCensus& c) {
    std::ostringstream os;
    os << "Skew census: " << c.rows.size() << " configurations\n";
    os << "mu-divisibility screen hits:";
    for (const auto& [mm, asq] : c.screen.divisibility_hits)
        os << " #" << mm << "(A^2=" << asq << ")";
    os << "\nfeasible mu!=0 families:";
    for (int mm : c.screen.feasible_families) os << " #" << mm;
    os << "\n\npair        A+^2  A-^2   b3    d    mu   status                     notes\n";
    for (const auto& r : c.rows) {
        std::ostringstream pair;
        pair << r.plus_id << " " << r.minus_id;
        os << pair.str();
        for (size_t pad = pair.str().size(); pad < 12; ++pad) os << ' ';
        auto cell = [&os](const std::string& s, size_t w) {
            os << s;
            for (size_t pad = s.size(); pad < w; ++pad) os << ' ';
        };
        cell(r.A_sq_plus->str(), 6);
        cell(r.A_sq_minus->str(), 7);
        cell(r.top.b3.str(), 6);
        cell(r.top.d.str(), 5);
        cell(r.top.mu.str(), 5);
        cell(r.status, 27);
        os << r.notes << '\n';
    }
    return os.str();
}

std::string exotic_text(const ExoticReport& r) {
    std::ostringstream os;
    os << "Distinct diffeomorphism types with mu != 0: " << r.types.size() << "\n";
    for (const auto& t : r.types) {
        os << "  (b3, d, mu) = (" << t.b3 << ", " << t.d << ", " << t.mu << ")"
           << "   perpendicular partners with the same (b3, d): " << t.perp_partner_count
           << "\n";
    }
    os << "\nHomeomorphic-but-not-diffeomorphic pairs (mu = 0 partner exists): "
       << r.homeo_pairs.size() << "\n";
    for (const auto& [b3, d] : r.homeo_pairs) {
        os << "  (b3, d) = (" << b3 << ", " << d << "): the mu = 0 and mu = 1 manifolds are "
           << "homeomorphic (same b3, d) but not diffeomorphic (mu differs in Z/"
           << d_hat(d) << ")\n";
    }
    os << "\nEvery manifold here has d | 24, so d^ = gcd(28, Num(d/4)) = 2 when 8 | d and the\n"
          "underlying topological manifold carries exactly two smooth structures; d^ = 28\n"
          "would occur only for p_M = 0, which no twisted connected sum in this census\n"
          "realises.\n";
    return os.str();
}

std::string exotic_json(const ExoticReport& r) {
    nlohmann::json j;
    j["types"] = nlohmann::json::array();
    for (const auto& t : r.types)
        j["types"].push_back({{"b3", to_ll(t.b3)},
                              {"d", to_ll(t.d)},
                              {"mu", to_ll(t.mu)},
                              {"perp_partner_count", t.perp_partner_count}});
    j["homeo_not_diffeo"] = nlohmann::json::array();
    for (const auto& [b3, d] : r.homeo_pairs)
        j["homeo_not_diffeo"].push_back({{"b3", to_ll(b3)}, {"d", to_ll(d)}});
    return j.dump(2) + "\n";
}

}  // namespace g2census
