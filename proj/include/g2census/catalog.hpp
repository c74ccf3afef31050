// The shipped rank-1 / rank-2 Fano building-block dataset: loading,
// type-invariant enforcement, derived quantities (c2 mod 24, greatest
// divisors, ample-class coordinate recovery) and the per-construction
// cross-check formulas for the tabulated Chern data.
#pragma once

#include "g2census/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g2census {

struct Rank1Entry {
    std::string name;
    Int index_r;
    Int degree;  // anticanonical degree
    Int b3_Y;
    Int c2_H;
    Int b3_Z;

    Int h2() const { return degree / (index_r * index_r); }
    Lattice picard() const { return Lattice{{{h2()}}}; }
    Vec c2() const { return {c2_H}; }
};

enum class ProvKind { blowup_rank1, divisor_p2xp2, double_cover, direct_fixture };

struct Provenance {
    ProvKind kind = ProvKind::direct_fixture;
    std::string source;   // rank-1 name (blowup) or source mm (cover)
    Int a = 0, b = 0;     // blowup: (n, unused); divisor: bidegree (a, b)
    Vec branch_l;         // cover: class L with branch divisor in |2L|
    Vec fixture_c2;       // cover: expected c2 pairings
    std::string note() const;
};

struct AmpleRecord {
    Int a, b;  // A = a*G + b*H, a,b >= 1
    Int A_sq;
    Int c2_A;
    Int B_sq;
};

struct Rank2Entry {
    int mm = 0;
    Int degree;
    Mat gram;  // 2x2 in the nef basis (G, H)
    Int delta;
    Vec minus_K;  // coordinates of -K in (G, H)
    Vec c2;       // pairings of the block's c2 with (G, H); empty iff !has_block
    Int b3_Y;
    Int b3_Z;  // absent (0) iff !has_block
    bool has_block = true;
    std::vector<AmpleRecord> amples;
    Provenance prov;

    Lattice picard() const { return Lattice{gram}; }
    Int form(const Int& a, const Int& b) const;  // (a,b) . gram . (a,b)
};

struct Catalog {
    std::vector<Rank1Entry> rank1;
    std::vector<Rank2Entry> rank2;
    std::vector<std::string> warnings;  // exactly one for the shipped data (#18)

    const Rank2Entry& by_mm(int mm) const;
};

// One block usable in a census (rank-1 entry, or rank-2 entry with a block),
// with a global deterministic ordering: rank-1 entries in table order,
// then rank-2 entries by Mori-Mukai number.
struct BlockRef {
    bool is_rank1 = false;
    int index = 0;  // position in catalog.rank1 / catalog.rank2
};
std::vector<BlockRef> census_blocks(const Catalog& cat);
std::string block_id(const Catalog& cat, const BlockRef& b);
Int block_b3_Z(const Catalog& cat, const BlockRef& b);
Vec block_c2(const Catalog& cat, const BlockRef& b);

// Loads rank1.tsv / rank2.tsv / ample.tsv from a directory, enforcing every
// per-entry invariant.  Fails loudly (ParseError / ValidationError) on any
// violation except the documented #18 c2_A discrepancy, which is corrected
// to the consistent value 48 with a warning.
Catalog load_catalog(const std::string& dir);

// Componentwise mod-24 reduction of the entry's c2 pairings.
Vec c2bar(const Rank2Entry& e);
Vec c2bar(const Rank1Entry& e);

// Greatest divisor of c2 mod 24: gcd of the pairings together with 24.
Int gd_c2bar(const Rank2Entry& e);
Int gd_c2bar(const Rank1Entry& e);

struct RecoveredAmple {
    Int a, b;
    Int computed_c2_A;
    bool c2_discrepancy = false;  // stored c2_A does not match the computation
};
// The unique ample (a, b) with the given square; AmbiguousSolution if several
// candidates with genuinely different derived data exist.
RecoveredAmple recover_ample_coords(const Rank2Entry& e, const Int& A_sq, const Int& c2_A);

struct CheckReport {
    std::vector<std::string> passed;
    std::vector<std::string> failures;
    std::vector<std::string> warnings;
    bool ok() const { return failures.empty(); }
    void check(bool cond, const std::string& what);
};

// Cross-checks of the tabulated c2 pairings against the construction of each
// entry: blow-ups of rank-1 Fanos, divisors in P2 x P2, double covers
// (fixture comparison).
CheckReport validate_blowup_provenance(const Rank2Entry& e, const Catalog& cat);
CheckReport validate_divisor_provenance(const Rank2Entry& e);
CheckReport validate_double_cover(const Rank2Entry& e);

// Runs every dataset invariant and provenance check; collects rather than
// throws, for the validate command.
CheckReport validate_catalog(const Catalog& cat);

}  // namespace g2census
