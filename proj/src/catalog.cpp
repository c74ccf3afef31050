#include "g2census/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace g2census {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '\t') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

Table read_tsv(const std::string& path, const std::vector<std::string>& expected_columns) {
    std::ifstream in(path);
    if (!in) fail(Errc::parse_error, "cannot open " + path);
    Table t;
    std::string line;
    bool have_header = false;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_tabs(line);
        if (!have_header) {
            if (fields != expected_columns) {
                std::string msg = path + ": unexpected header (";
                for (const auto& f : fields) msg += f + " ";
                msg += ")";
                fail(Errc::parse_error, msg);
            }
            t.columns = fields;
            have_header = true;
            continue;
        }
        if (fields.size() != expected_columns.size())
            fail(Errc::parse_error, path + ":" + std::to_string(lineno) + ": wrong field count");
        t.rows.push_back(fields);
    }
    if (!have_header) fail(Errc::parse_error, path + ": missing header");
    return t;
}

Int parse_int(const std::string& s, const std::string& where) {
    if (s.empty()) fail(Errc::parse_error, where + ": empty integer field");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) fail(Errc::parse_error, where + ": bad integer '" + s + "'");
    for (; i < s.size(); ++i)
        if (!isdigit(static_cast<unsigned char>(s[i])))
            fail(Errc::parse_error, where + ": bad integer '" + s + "'");
    return Int(s);
}

Vec parse_pair_colon(const std::string& s, const std::string& where) {
    auto pos = s.find(':');
    if (pos == std::string::npos) fail(Errc::parse_error, where + ": expected a:b, got " + s);
    return {parse_int(s.substr(0, pos), where), parse_int(s.substr(pos + 1), where)};
}

void require(bool cond, const std::string& what) {
    if (!cond) fail(Errc::validation_error, what);
}

}  // namespace

Int Rank2Entry::form(const Int& a, const Int& b) const {
    return gram[0][0] * a * a + 2 * gram[0][1] * a * b + gram[1][1] * b * b;
}

std::string Provenance::note() const {
    std::ostringstream os;
    switch (kind) {
        case ProvKind::blowup_rank1:
            os << "blowup(" << source << ",n=" << a << ")";
            break;
        case ProvKind::divisor_p2xp2:
            os << "divisor(P2xP2,(" << a << "," << b << "))";
            break;
        case ProvKind::double_cover:
            os << "double-cover(#" << source << ",L=(" << branch_l[0] << "," << branch_l[1]
               << "))";
            break;
        case ProvKind::direct_fixture:
            os << "fixture";
            break;
    }
    return os.str();
}

const Rank2Entry& Catalog::by_mm(int mm) const {
    for (const auto& e : rank2)
        if (e.mm == mm) return e;
    fail(Errc::validation_error, "no rank-2 entry #" + std::to_string(mm));
}

std::vector<BlockRef> census_blocks(const Catalog& cat) {
    std::vector<BlockRef> out;
    for (int i = 0; i < static_cast<int>(cat.rank1.size()); ++i) out.push_back({true, i});
    for (int i = 0; i < static_cast<int>(cat.rank2.size()); ++i)
        if (cat.rank2[i].has_block) out.push_back({false, i});
    return out;
}

std::string block_id(const Catalog& cat, const BlockRef& b) {
    return b.is_rank1 ? cat.rank1[b.index].name : "#" + std::to_string(cat.rank2[b.index].mm);
}

Int block_b3_Z(const Catalog& cat, const BlockRef& b) {
    return b.is_rank1 ? cat.rank1[b.index].b3_Z : cat.rank2[b.index].b3_Z;
}

Vec block_c2(const Catalog& cat, const BlockRef& b) {
    return b.is_rank1 ? cat.rank1[b.index].c2() : cat.rank2[b.index].c2;
}

Vec c2bar(const Rank2Entry& e) {
    Vec out = e.c2;
    for (Int& x : out) x = mod_floor(x, 24);
    return out;
}

Vec c2bar(const Rank1Entry& e) { return {mod_floor(e.c2_H, 24)}; }

Int gd_c2bar(const Rank2Entry& e) { return gcd(gcd(abs(e.c2[0]), abs(e.c2[1])), Int(24)); }

Int gd_c2bar(const Rank1Entry& e) { return gcd(abs(e.c2_H), Int(24)); }

RecoveredAmple recover_ample_coords(const Rank2Entry& e, const Int& A_sq, const Int& c2_A) {
    // The quadratic form is strictly increasing in each coordinate on the
    // ample cone (nef-basis Gram entries are non-negative), so this box is
    // exhaustive.
    const Int bound = A_sq + e.delta;
    struct Cand {
        Int a, b, c2, bsq;
    };
    std::vector<Cand> cands;
    Lattice n = e.picard();
    for (Int a = 1; a <= bound; ++a)
        for (Int b = 1; b <= bound; ++b) {
            if (e.form(a, b) != A_sq) continue;
            Int c2v = e.c2[0] * a + e.c2[1] * b;
            Vec bgen = orth_complement_of_vector(n, {a, b})[0];
            cands.push_back({a, b, c2v, n.norm(bgen)});
        }
    if (cands.empty()) fail(Errc::no_solution, "no ample class with the requested square");
    // Prefer candidates whose computed c2 matches the requested one.
    std::vector<Cand> matching;
    for (const auto& c : cands)
        if (c.c2 == c2_A) matching.push_back(c);
    bool discrepancy = matching.empty();
    const auto& pool = discrepancy ? cands : matching;
    // Distinct derived data among the remaining candidates would contradict
    // the dataset's recoverability claim and must be surfaced.
    for (const auto& c : pool)
        if (c.c2 != pool[0].c2 || c.bsq != pool[0].bsq)
            fail(Errc::ambiguous_solution, "ample class with square " + A_sq.str() +
                                               " has candidates with different derived data");
    Cand best = pool[0];
    for (const auto& c : pool)
        if (c.a > best.a || (c.a == best.a && c.b > best.b)) best = c;
    return {best.a, best.b, best.c2, discrepancy};
}

void CheckReport::check(bool cond, const std::string& what) {
    (cond ? passed : failures).push_back(what);
}

namespace {

void validate_rank1_entry(const Rank1Entry& e) {
    const std::string w = "rank1 " + e.name;
    require(e.index_r >= 1 && e.degree >= 1, w + ": positive index and degree");
    require(e.degree % (e.index_r * e.index_r) == 0, w + ": r^2 | degree");
    require(e.h2() > 0 && e.h2() % 2 == 0, w + ": H^2 = degree/r^2 positive even");
    require(e.c2_H * e.index_r == 24 + e.degree, w + ": c2_H * r = 24 + degree");
    require(e.b3_Z == e.degree + e.b3_Y + 2, w + ": b3_Z = degree + b3_Y + 2");
}

void validate_rank2_entry(const Rank2Entry& e) {
    const std::string w = "rank2 #" + std::to_string(e.mm);
    require(e.delta == abs(linalg::det(e.gram)), w + ": delta = |det gram|");
    require(e.gram[0][0] % 2 == 0 && e.gram[1][1] % 2 == 0, w + ": gram diagonal even");
    require(e.minus_K[0] >= 1 && e.minus_K[1] >= 1, w + ": -K interior to the nef cone");
    require(e.form(e.minus_K[0], e.minus_K[1]) == e.degree, w + ": (-K)^2-form = degree");
    if (!e.has_block) return;
    require(linalg::dot(e.c2, e.minus_K) == 24 + e.degree, w + ": c2 . (-K) = 24 + degree");
    require(e.b3_Z == e.degree + e.b3_Y + 2, w + ": b3_Z = degree + b3_Y + 2");
}

void validate_ample_record(const Rank2Entry& e, const AmpleRecord& r) {
    const std::string w = "ample #" + std::to_string(e.mm) + " A^2=" + r.A_sq.str();
    require(r.a >= 1 && r.b >= 1, w + ": coordinates >= 1");
    require(e.form(r.a, r.b) == r.A_sq, w + ": A_sq = form value");
    require(10 * r.A_sq <= 16 * e.delta, w + ": A^2 <= 1.6 delta");
    Lattice n = e.picard();
    Vec b = orth_complement_of_vector(n, {r.a, r.b})[0];
    require(n.norm(b) == r.B_sq, w + ": B_sq matches orthogonal complement");
}

}  // namespace

Catalog load_catalog(const std::string& dir) {
    Catalog cat;

    Table t1 = read_tsv(dir + "/rank1.tsv", {"name", "r", "degree", "b3_Y", "c2_H", "b3_Z"});
    for (const auto& row : t1.rows) {
        Rank1Entry e;
        e.name = row[0];
        e.index_r = parse_int(row[1], "rank1 r");
        e.degree = parse_int(row[2], "rank1 degree");
        e.b3_Y = parse_int(row[3], "rank1 b3_Y");
        e.c2_H = parse_int(row[4], "rank1 c2_H");
        e.b3_Z = parse_int(row[5], "rank1 b3_Z");
        validate_rank1_entry(e);
        cat.rank1.push_back(std::move(e));
    }
    require(cat.rank1.size() == 17, "rank1.tsv: expected 17 entries");

    Table t2 = read_tsv(dir + "/rank2.tsv",
                        {"mm", "degree", "g11", "g12", "g22", "delta", "mK_G", "mK_H", "c2_G",
                         "c2_H", "b3_Y", "b3_Z", "has_block", "prov_kind", "prov_arg1",
                         "prov_arg2", "prov_arg3"});
    for (const auto& row : t2.rows) {
        Rank2Entry e;
        e.mm = static_cast<int>(parse_int(row[0], "rank2 mm").convert_to<long long>());
        e.degree = parse_int(row[1], "rank2 degree");
        Int g11 = parse_int(row[2], "g11"), g12 = parse_int(row[3], "g12"),
            g22 = parse_int(row[4], "g22");
        e.gram = {{g11, g12}, {g12, g22}};
        e.delta = parse_int(row[5], "delta");
        e.minus_K = {parse_int(row[6], "mK_G"), parse_int(row[7], "mK_H")};
        e.has_block = parse_int(row[12], "has_block") != 0;
        if (e.has_block) {
            e.c2 = {parse_int(row[8], "c2_G"), parse_int(row[9], "c2_H")};
            e.b3_Z = parse_int(row[11], "b3_Z");
        } else {
            require(row[8] == "-" && row[9] == "-" && row[11] == "-",
                    "rank2 #" + std::to_string(e.mm) + ": blockless entry must leave c2/b3_Z absent");
        }
        e.b3_Y = parse_int(row[10], "b3_Y");
        const std::string& kind = row[13];
        if (kind == "blowup") {
            e.prov.kind = ProvKind::blowup_rank1;
            e.prov.source = row[14];
            e.prov.a = parse_int(row[15], "blowup n");
        } else if (kind == "divisor") {
            e.prov.kind = ProvKind::divisor_p2xp2;
            e.prov.a = parse_int(row[14], "divisor a");
            e.prov.b = parse_int(row[15], "divisor b");
        } else if (kind == "cover") {
            e.prov.kind = ProvKind::double_cover;
            e.prov.source = row[14];
            e.prov.branch_l = parse_pair_colon(row[15], "cover L");
            e.prov.fixture_c2 = parse_pair_colon(row[16], "cover fixture");
        } else if (kind == "fixture") {
            e.prov.kind = ProvKind::direct_fixture;
        } else {
            fail(Errc::parse_error, "rank2 #" + std::to_string(e.mm) + ": unknown provenance '" +
                                        kind + "'");
        }
        validate_rank2_entry(e);
        cat.rank2.push_back(std::move(e));
    }
    require(cat.rank2.size() == 36, "rank2.tsv: expected 36 entries");

    Table t3 = read_tsv(dir + "/ample.tsv", {"mm", "a", "b", "A_sq", "c2_A", "B_sq"});
    for (const auto& row : t3.rows) {
        int mm = static_cast<int>(parse_int(row[0], "ample mm").convert_to<long long>());
        AmpleRecord r;
        r.a = parse_int(row[1], "ample a");
        r.b = parse_int(row[2], "ample b");
        r.A_sq = parse_int(row[3], "ample A_sq");
        r.c2_A = parse_int(row[4], "ample c2_A");
        r.B_sq = parse_int(row[5], "ample B_sq");
        auto it = std::find_if(cat.rank2.begin(), cat.rank2.end(),
                               [&](const Rank2Entry& e) { return e.mm == mm; });
        if (it == cat.rank2.end() || !it->has_block)
            fail(Errc::validation_error, "ample.tsv: no block entry #" + std::to_string(mm));
        Rank2Entry& e = *it;
        validate_ample_record(e, r);
        Int computed_c2 = e.c2[0] * r.a + e.c2[1] * r.b;
        if (computed_c2 != r.c2_A) {
            // Documented discrepancy: #18's A^2 = 24 record is catalogued with
            // c2_A = 54, inconsistent with A = G + 2H and c2 = (12, 18).
            if (e.mm == 18 && r.A_sq == 24 && r.c2_A == 54) {
                r.c2_A = computed_c2;
                cat.warnings.push_back(
                    "#18 A^2=24: catalogued c2_A = 54 corrected to computed value 48");
            } else {
                fail(Errc::validation_error, "ample #" + std::to_string(mm) +
                                                 ": stored c2_A inconsistent with entry c2");
            }
        } else if (e.mm == 18 && r.A_sq == 24) {
            cat.warnings.push_back(
                "#18 A^2=24: stored c2_A = 48 (catalogued source prints 54, inconsistent "
                "with A = G + 2H and c2 = (12,18))");
        }
        e.amples.push_back(r);
    }

    return cat;
}

CheckReport validate_blowup_provenance(const Rank2Entry& e, const Catalog& cat) {
    CheckReport rep;
    if (e.prov.kind != ProvKind::blowup_rank1) {
        rep.failures.push_back("#" + std::to_string(e.mm) + ": not a blow-up entry");
        return rep;
    }
    const Rank1Entry* src = nullptr;
    for (const auto& r1 : cat.rank1)
        if (r1.name == e.prov.source) src = &r1;
    if (!src) {
        rep.failures.push_back("#" + std::to_string(e.mm) + ": unknown blow-up source " +
                               e.prov.source);
        return rep;
    }
    const std::string w = "#" + std::to_string(e.mm) + " blowup(" + src->name + ")";
    rep.check(e.prov.a >= 1 && e.prov.a < src->index_r, w + ": 1 <= n <= r-1");
    rep.check(e.gram[1][1] == src->h2(), w + ": H^2 = source degree / r^2");
    if (e.has_block)
        rep.check(e.c2[1] * src->index_r == 24 + src->degree,
                  w + ": c2_H = (24 + source degree) / r");
    return rep;
}

CheckReport validate_divisor_provenance(const Rank2Entry& e) {
    CheckReport rep;
    if (e.prov.kind != ProvKind::divisor_p2xp2) {
        rep.failures.push_back("#" + std::to_string(e.mm) + ": not a P2xP2 divisor entry");
        return rep;
    }
    const Int a = e.prov.a, b = e.prov.b;
    const std::string w = "#" + std::to_string(e.mm) + " divisor(" + a.str() + "," + b.str() + ")";
    Int c2_G = 3 * ((2 * a - 3) * (b - 1) * (b - 2) + 6);
    Int c2_H = 3 * ((2 * b - 3) * (a - 1) * (a - 2) + 6);
    rep.check(e.c2[0] == c2_G && e.c2[1] == c2_H, w + ": c2 matches bidegree formula");
    rep.check(e.minus_K[0] == 3 - a && e.minus_K[1] == 3 - b, w + ": -K = (3-a, 3-b)");
    return rep;
}

CheckReport validate_double_cover(const Rank2Entry& e) {
    CheckReport rep;
    if (e.prov.kind != ProvKind::double_cover) {
        rep.failures.push_back("#" + std::to_string(e.mm) + ": not a double-cover entry");
        return rep;
    }
    const std::string w = "#" + std::to_string(e.mm) + " " + e.prov.note();
    rep.check(e.c2 == e.prov.fixture_c2, w + ": c2 matches the carried fixture");
    return rep;
}

CheckReport validate_catalog(const Catalog& cat) {
    CheckReport rep;
    rep.warnings = cat.warnings;

    rep.check(cat.rank1.size() == 17, "17 rank-1 entries");
    rep.check(cat.rank2.size() == 36, "36 rank-2 entries");

    for (const auto& e : cat.rank1) {
        const std::string w = "rank1 " + e.name;
        rep.check(e.degree % (e.index_r * e.index_r) == 0, w + ": r^2 | degree");
        rep.check(e.h2() > 0 && e.h2() % 2 == 0, w + ": H^2 positive even");
        rep.check(e.c2_H * e.index_r == 24 + e.degree, w + ": c2_H * r = 24 + degree");
        rep.check(e.b3_Z == e.degree + e.b3_Y + 2, w + ": b3_Z chain");
    }

    int blockless = 0;
    for (const auto& e : cat.rank2) {
        const std::string w = "#" + std::to_string(e.mm);
        rep.check(e.delta == abs(linalg::det(e.gram)), w + ": delta = |det gram|");
        rep.check(e.form(e.minus_K[0], e.minus_K[1]) == e.degree, w + ": (-K)^2-form = degree");
        rep.check(e.gram[0][0] % 2 == 0 && e.gram[1][1] % 2 == 0, w + ": gram diagonal even");
        rep.check(is_even(e.picard()), w + ": Picard lattice even");
        if (!e.has_block) {
            ++blockless;
            rep.check(e.mm == 1, w + ": only #1 lacks a building block");
            continue;
        }
        rep.check(linalg::dot(e.c2, e.minus_K) == 24 + e.degree, w + ": c2 . (-K) = 24 + degree");
        rep.check(e.b3_Z == e.degree + e.b3_Y + 2, w + ": b3_Z chain");

        switch (e.prov.kind) {
            case ProvKind::blowup_rank1: {
                auto sub = validate_blowup_provenance(e, cat);
                rep.passed.insert(rep.passed.end(), sub.passed.begin(), sub.passed.end());
                rep.failures.insert(rep.failures.end(), sub.failures.begin(), sub.failures.end());
                break;
            }
            case ProvKind::divisor_p2xp2: {
                auto sub = validate_divisor_provenance(e);
                rep.passed.insert(rep.passed.end(), sub.passed.begin(), sub.passed.end());
                rep.failures.insert(rep.failures.end(), sub.failures.begin(), sub.failures.end());
                break;
            }
            case ProvKind::double_cover: {
                auto sub = validate_double_cover(e);
                rep.passed.insert(rep.passed.end(), sub.passed.begin(), sub.passed.end());
                rep.failures.insert(rep.failures.end(), sub.failures.begin(), sub.failures.end());
                break;
            }
            case ProvKind::direct_fixture:
                rep.passed.push_back("#" + std::to_string(e.mm) + ": direct fixture data");
                break;
        }

        // Ample records: the stored (A_sq, c2_A, B_sq) triples are reproduced
        // from recovered coordinates and the orthogonal-complement square,
        // and every record satisfies the table's inclusion bound.
        for (const auto& r : e.amples) {
            RecoveredAmple rec = recover_ample_coords(e, r.A_sq, r.c2_A);
            rep.check(rec.computed_c2_A == r.c2_A,
                      "#" + std::to_string(e.mm) + " A^2=" + r.A_sq.str() + ": c2_A reproduced");
            Vec bgen = orth_complement_of_vector(e.picard(), {rec.a, rec.b})[0];
            rep.check(e.picard().norm(bgen) == r.B_sq,
                      "#" + std::to_string(e.mm) + " A^2=" + r.A_sq.str() + ": B_sq reproduced");
            rep.check(10 * r.A_sq <= 16 * e.delta,
                      "#" + std::to_string(e.mm) + " A^2=" + r.A_sq.str() + ": A^2 <= 1.6 delta");
        }
    }
    rep.check(blockless == 1, "exactly one entry without a block");
    return rep;
}

}  // namespace g2census
